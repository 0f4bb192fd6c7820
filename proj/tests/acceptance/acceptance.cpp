// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values and runtime budgets are pinned here in code.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "sdc/audit.hpp"
#include "sdc/scheme_t1.hpp"
#include "sdc/scheme_t2.hpp"

using namespace sdc;
using pda::Rational;

namespace {

int g_failures = 0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s: criterion %d — %s\n", pass ? "PASS" : "FAIL", criterion,
                detail.c_str());
    if (!pass) ++g_failures;
}

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(SDC_FIXTURE_DIR) + "/" + name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string rat(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::vector<gf::SymbolVec> seeded_files(size_t n, const gf::FieldSpec& spec,
                                        size_t L_sym, uint64_t seed) {
    SeededSource rng(seed);
    std::vector<gf::SymbolVec> files;
    for (size_t i = 0; i < n; ++i) {
        std::vector<uint64_t> vals(L_sym);
        for (auto& v : vals) v = rng.symbol(spec);
        files.emplace_back(spec, vals);
    }
    return files;
}

gf::SymbolVec oracle_output(int k, const std::vector<gf::SymbolVec>& files,
                            const gf::FieldSpec& spec, size_t L_sym) {
    const auto g = mr::MapFunction::for_node(k, spec);
    gf::SymbolVec acc = gf::SymbolVec::zero(spec, L_sym);
    for (const auto& w : files) acc = acc ^ w.scaled(g.alpha);
    return acc;
}

// Smallest L_sym making every instance's payload divisible into packets.
size_t lsym_for(const pda::Pda& p, const pda::OccurrenceIndex& occ) {
    size_t l = 1;
    for (int s = 1; s <= p.S(); ++s)
        l = std::lcm(l, static_cast<size_t>(occ.occurrences(s) - 1));
    return l;
}

pda::Pda load_p1() {
    return pda::Pda::validate(pda::parse_pda(fixture("p1.pda")));
}

void criterion_1() {
    const auto start = Clock::now();
    const auto p = load_p1();
    const auto spec = gf::FieldSpec::canonical(3);
    const auto D = ss::CauchyMatrix::parse(fixture("example2_matrix.txt"), spec);
    const int eta = 2;
    const auto files = seeded_files(size_t(eta) * (p.F() - p.Z()), spec, 1, 1001);

    SeededSource rng(1002);
    auto run = scheme::setup_t2(p, spec, 1, eta, files, rng, &D);
    scheme::place_t2(run, rng);
    scheme::run_shuffle_t2(run);
    const auto m = scheme::measured_loads_t2(run);

    bool ok = m.r == Rational(1) && m.L == Rational(7, 10);
    for (int k = 1; k <= p.K() && ok; ++k)
        ok = decode_t2(run, k).output.vals == oracle_output(k, files, spec, 1).vals;
    const double secs = seconds_since(start);
    report(1, ok && secs < 1.0,
           "coded computing on the shipped 5-node array: measured (r, L) = (" +
               rat(m.r) + ", " + rat(m.L) + "), expected (1, 7/10), " +
               std::to_string(secs) + " s");
}

void criterion_2() {
    const auto start = Clock::now();
    const auto p = load_p1();
    const auto spec = gf::FieldSpec::canonical(3);
    const int eta = 2;
    const auto files = seeded_files(size_t(eta) * p.F(), spec, 1, 2001);

    SeededSource key_rng(2002);
    auto run = scheme::place_t1(p, spec, 1, eta, files, key_rng);
    scheme::run_shuffle_t1(run);
    const auto m = scheme::measured_loads_t1(run);

    bool ok = m.r == Rational(1, 2) && m.L == Rational(7, 20);
    for (int k = 1; k <= p.K() && ok; ++k)
        ok = decode_t1(run, k).vals == oracle_output(k, files, spec, 1).vals;
    const double secs = seconds_since(start);
    report(2, ok && secs < 1.0,
           "plaintext shuffling on the same array: measured (r, L) = (" + rat(m.r) +
               ", " + rat(m.L) + "), expected (1/2, 7/20), " + std::to_string(secs) +
               " s");
}

void criterion_3() {
    std::vector<pda::Pda> arrays{load_p1()};
    for (int K = 2; K <= 5; ++K)
        for (int t = 1; t < K; ++t) arrays.push_back(pda::generate_mn_pda(K, t));
    bool ok = true;
    for (const auto& p : arrays) {
        const auto t1 = pda::load_shuffle(p);
        const auto t2 = pda::load_coded(p);
        const Rational ratio(p.F(), p.F() - p.Z());
        ok = ok && t2.r == t1.r * ratio && t2.L == t1.L * ratio;
    }
    report(3, ok,
           "coded/plain load ratio is exactly F/(F-Z) on the 5-node array and all " +
               std::to_string(arrays.size() - 1) + " generated arrays (K <= 5)");
}

void criterion_4() {
    const auto start = Clock::now();
    std::vector<pda::Pda> arrays{load_p1()};
    for (int K = 2; K <= 5; ++K)
        for (int t = 1; t < K; ++t) arrays.push_back(pda::generate_mn_pda(K, t));

    long runs = 0, mismatches = 0;
    for (const auto& p : arrays) {
        const auto occ = pda::occurrence_index(p);
        const auto spec = gf::field_for(p.F()); // 2F <= 2^z: both schemes work
        const size_t L_sym = lsym_for(p, occ);
        for (int eta = 1; eta <= 2; ++eta) {
            for (uint64_t seed = 1; seed <= 100; ++seed) {
                const auto t1_files =
                    seeded_files(size_t(eta) * p.F(), spec, L_sym, seed);
                SeededSource key_rng(seed + 7);
                auto r1 = scheme::place_t1(p, spec, L_sym, eta, t1_files, key_rng);
                scheme::run_shuffle_t1(r1);

                const auto t2_files =
                    seeded_files(size_t(eta) * (p.F() - p.Z()), spec, L_sym, seed);
                SeededSource rng(seed + 13);
                auto r2 = scheme::setup_t2(p, spec, L_sym, eta, t2_files, rng);
                scheme::place_t2(r2, rng);
                scheme::run_shuffle_t2(r2);

                for (int k = 1; k <= p.K(); ++k) {
                    ++runs;
                    if (decode_t1(r1, k).vals !=
                        oracle_output(k, t1_files, spec, L_sym).vals)
                        ++mismatches;
                    if (decode_t2(r2, k).output.vals !=
                        oracle_output(k, t2_files, spec, L_sym).vals)
                        ++mismatches;
                }
            }
        }
    }
    const double secs = seconds_since(start);
    report(4, mismatches == 0 && secs < 30.0,
           "end-to-end vs plaintext oracle: " + std::to_string(mismatches) +
               " mismatches in " + std::to_string(runs) +
               " node decodes (both schemes, 100 seeds per config), " +
               std::to_string(secs) + " s");
}

void criterion_5() {
    const auto start = Clock::now();
    const auto tiny = pda::Pda::validate({{0, 1}, {1, 0}});

    audit::AuditConfig t1;
    t1.pda = tiny;
    t1.spec = gf::FieldSpec::canonical(1);
    const auto r1 = audit::audit_eavesdropper_t1(t1);
    auto t1bad = t1;
    t1bad.sabotage_zero_keys = true;
    const auto r1bad = audit::audit_eavesdropper_t1(t1bad);

    /* GF(2) admits no secrecy-safe 2x2 sharing matrix (every invertible
       one has a zero entry), so the coded-scheme half runs over GF(4) —
       the smallest field where the construction's preconditions hold. */
    audit::AuditConfig t2 = t1;
    t2.spec = gf::FieldSpec::canonical(2);
    const auto r2 = audit::audit_eavesdropper_t2(t2);
    auto t2bad = t2;
    t2bad.sabotage_zero_keys = true;
    const auto r2bad = audit::audit_eavesdropper_t2(t2bad);

    const double secs = seconds_since(start);
    const bool ok = r1.defect == 0 && r2.defect == 0 && r1bad.defect > 0 &&
                    r2bad.defect > 0 && secs < 60.0;
    report(5, ok,
           "eavesdropper MI exactly 0 on the 2x2 array for both schemes (spaces " +
               std::to_string(r1.space_size) + " and " + std::to_string(r2.space_size) +
               "; coded half over GF(4), see ledger), zero-key sabotage leaks, " +
               std::to_string(secs) + " s");
}

void criterion_6() {
    const auto start = Clock::now();
    audit::AuditConfig cfg;
    cfg.pda = pda::generate_mn_pda(3, 1);
    cfg.spec = gf::FieldSpec::canonical(2);

    bool all_zero = true;
    double max_mi = 0.0;
    for (int k = 1; k <= 3; ++k) {
        const auto r = audit::audit_node_secrecy(cfg, k);
        if (r.defect != 0) all_zero = false;
        if (r.mi_bits > max_mi) max_mi = r.mi_bits;
    }
    auto bad = cfg;
    bad.sabotage_identity_matrix = true;
    bool sabotage_leaks = false;
    for (int k = 1; k <= 3; ++k)
        sabotage_leaks = sabotage_leaks || audit::audit_node_secrecy(bad, k).defect > 0;

    const double secs = seconds_since(start);
    if (all_zero) {
        report(6, sabotage_leaks && secs < 300.0,
               "node-view MI exactly 0 for every node, identity sabotage leaks, " +
                   std::to_string(secs) + " s");
    } else {
        /* Documented red: with w = t and invertible scalar map functions,
           node k's view lets it decode its own IVs, which determine the
           file vector W bijectively and with it every foreign IV. The
           measured MI is exactly H(foreign IVs) = H(W); zero is
           unattainable for this map family regardless of the sharing
           matrix. See the project notes for the full argument. */
        report(6, false,
               "node-view MI is " + std::to_string(max_mi) +
                   " bits = H(files), not 0: invertible scalar maps make foreign "
                   "IVs a bijection of the node's own decodable IVs (sabotage "
                   "sub-check " + std::string(sabotage_leaks ? "passes" : "fails") +
                   "), " + std::to_string(secs) + " s");
    }
}

void criterion_7() {
    const auto start = Clock::now();
    bool ok = true;
    std::string fail;
    for (int F = 2; F <= 6 && ok; ++F) {
        const auto spec = gf::field_for(F);
        const auto D = ss::CauchyMatrix::build(F, spec);
        if (!ss::all_submatrices_full_rank(D)) {
            ok = false;
            fail = "submatrix rank deficiency at F=" + std::to_string(F);
            break;
        }
        for (int Z = 1; Z < F && ok; ++Z) {
            const size_t L_sym = 2;
            auto W = seeded_files(size_t(F - Z), spec, L_sym, 7000 + F * 10 + Z);
            ss::KeyVector V;
            {
                SeededSource rng(7100 + F * 10 + Z);
                auto keys = seeded_files(size_t(Z), spec, L_sym, rng.bit() + 7200);
                V.keys = std::move(keys);
            }
            const auto A = ss::share(W, V, D);
            const auto [W2, V2] = ss::reconstruct(A, D, Z);
            for (size_t i = 0; i < W.size(); ++i)
                if (W2[i].vals != W[i].vals) ok = false;
            for (int j = 0; j < Z; ++j)
                if (V2.keys[j].vals != V.keys[j].vals) ok = false;
            if (!ok) {
                fail = "round-trip mismatch at F=" + std::to_string(F) +
                       " Z=" + std::to_string(Z);
                break;
            }
            const auto leak = ss::share_leakage_oracle(D, Z);
            if (!leak.leak_free()) {
                ok = false;
                fail = "leakage defect " + std::to_string(leak.max_defect) +
                       " at F=" + std::to_string(F) + " Z=" + std::to_string(Z);
            }
        }
    }
    const double secs = seconds_since(start);
    report(7, ok && secs < 60.0,
           ok ? "ramp sharing F <= 6: exact round-trip, zero exhaustive leakage for "
                "every Z-subset, all square submatrices full rank, " +
                    std::to_string(secs) + " s"
              : fail);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    std::printf("INFO: criterion 8 — no optimality/converse claim exists, so no "
                "optimality test is run\n");
    if (g_failures)
        std::printf("%d criterion(s) failed\n", g_failures);
    else
        std::printf("all criteria passed\n");
    return g_failures ? 1 : 0;
}
