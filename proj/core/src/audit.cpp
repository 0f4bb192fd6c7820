#include "sdc/audit.hpp"

#include <cmath>
#include <sstream>

#include "sdc/scheme_t1.hpp"
#include "sdc/scheme_t2.hpp"

namespace sdc::audit {

namespace {

std::string key_of(const BitVec& v) {
    return std::string(v.begin(), v.end());
}

} // namespace

void JointCounter::add(const BitVec& secret, const BitVec& observation) {
    const auto a = key_of(secret);
    const auto b = key_of(observation);
    joint_[{a, b}] += 1;
    secret_counts_[a] += 1;
    obs_counts_[b] += 1;
    total_ += 1;
}

unsigned long long JointCounter::defect() const {
    // Support pairs outside joint_ contribute count(a)*count(b) each;
    // sum over all (a,b) of count(a)*count(b) is total^2, so accumulate
    // the observed cells and add the remainder.
    unsigned long long observed_product_sum = 0;
    unsigned long long defect = 0;
    for (const auto& [ab, c] : joint_) {
        const unsigned long long lhs = c * total_;
        const unsigned long long rhs =
            secret_counts_.at(ab.first) * obs_counts_.at(ab.second);
        observed_product_sum += rhs;
        defect += lhs > rhs ? lhs - rhs : rhs - lhs;
    }
    defect += total_ * total_ - observed_product_sum;
    return defect;
}

double JointCounter::mi_bits() const {
    double mi = 0.0;
    const double n = static_cast<double>(total_);
    for (const auto& [ab, c] : joint_) {
        const double pj = static_cast<double>(c) / n;
        const double pa = static_cast<double>(secret_counts_.at(ab.first)) / n;
        const double pb = static_cast<double>(obs_counts_.at(ab.second)) / n;
        mi += pj * std::log2(pj / (pa * pb));
    }
    return mi;
}

std::string IndependenceReport::describe(const std::string& what) const {
    std::ostringstream os;
    os << what << ": space=" << space_size << " states, independence defect="
       << defect << ", MI=" << mi_bits << " bits -> "
       << (independent() ? "PASS (exact independence)" : "FAIL (leaks)");
    return os.str();
}

namespace {

using scheme::KeyTable;
using scheme::ShufflePlan;

struct EnumSpace {
    size_t file_bits = 0;
    size_t ramp_bits = 0; // V symbols, T2 only
    size_t key_bits = 0;  // pad keys; zero when sabotaged
    size_t total() const { return file_bits + ramp_bits + key_bits; }
};

void check_budget(const EnumSpace& space, uint64_t budget) {
    if (space.total() >= 63 || (uint64_t{1} << space.total()) > budget)
        throw ConfigError(
            "audit enumeration budget exceeded: 2^" + std::to_string(space.total()) +
            " states; reduce z, L_sym or eta");
}

std::vector<gf::SymbolVec> files_from_tape(RandomSource& tape,
                                           const gf::FieldSpec& spec, size_t count,
                                           size_t L_sym) {
    std::vector<gf::SymbolVec> files;
    for (size_t i = 0; i < count; ++i) {
        std::vector<uint64_t> vals(L_sym);
        for (auto& v : vals) v = tape.symbol(spec);
        files.emplace_back(spec, std::move(vals));
    }
    return files;
}

// All IVs of the plaintext files, in (q, file-order) order, as bits.
BitVec all_ivs_bits(const std::vector<gf::SymbolVec>& files, int K,
                    const gf::FieldSpec& spec) {
    BitVec out;
    for (int q = 1; q <= K; ++q) {
        const auto g = mr::MapFunction::for_node(q, spec);
        for (const auto& w : files)
            out = concat_bits(out, symbols_to_bits(w.scaled(g.alpha)));
    }
    return out;
}

BitVec transcript_bits(const scheme::Transcript& t, int skip_sender = 0) {
    BitVec out;
    for (const auto& rec : t.records) {
        if (rec.sender == skip_sender) continue;
        out.insert(out.end(), rec.payload.begin(), rec.payload.end());
    }
    return out;
}

template <typename RunFn>
IndependenceReport enumerate(const EnumSpace& space, uint64_t budget, RunFn&& run_one) {
    check_budget(space, budget);
    const uint64_t states = uint64_t{1} << space.total();
    JointCounter counter;
    BitVec tape(space.total());
    for (uint64_t x = 0; x < states; ++x) {
        for (size_t i = 0; i < tape.size(); ++i)
            tape[i] = static_cast<uint8_t>(x >> i & 1);
        TapeSource src(tape);
        auto [secret, obs] = run_one(src);
        counter.add(secret, obs);
    }
    IndependenceReport report;
    report.space_size = states;
    report.defect = counter.defect();
    report.mi_bits = counter.mi_bits();
    return report;
}

} // namespace

IndependenceReport audit_eavesdropper_t1(const AuditConfig& cfg) {
    const auto occ = pda::occurrence_index(cfg.pda);
    const auto plan =
        ShufflePlan::make(cfg.pda, occ, cfg.eta, cfg.L_sym * cfg.spec.z);
    const size_t n_files = static_cast<size_t>(cfg.eta) * cfg.pda.F();

    EnumSpace space;
    space.file_bits = n_files * cfg.L_sym * cfg.spec.z;
    space.key_bits = cfg.sabotage_zero_keys ? 0 : KeyTable::total_bits(plan);

    return enumerate(space, cfg.budget, [&](RandomSource& tape) {
        auto files = files_from_tape(tape, cfg.spec, n_files, cfg.L_sym);
        const BitVec secret = all_ivs_bits(files, cfg.pda.K(), cfg.spec);
        ZeroSource zeros;
        RandomSource& key_rng =
            cfg.sabotage_zero_keys ? static_cast<RandomSource&>(zeros) : tape;
        auto run = scheme::place_t1(cfg.pda, cfg.spec, cfg.L_sym, cfg.eta,
                                    std::move(files), key_rng);
        scheme::run_shuffle_t1(run);
        return std::pair<BitVec, BitVec>{secret, transcript_bits(run.transcript)};
    });
}

namespace {

ss::CauchyMatrix matrix_for(const AuditConfig& cfg) {
    if (cfg.sabotage_identity_matrix) {
        std::vector<std::vector<uint64_t>> id(
            cfg.pda.F(), std::vector<uint64_t>(cfg.pda.F(), 0));
        for (int i = 0; i < cfg.pda.F(); ++i) id[i][i] = 1;
        return ss::CauchyMatrix::unaudited(id, cfg.spec);
    }
    if (2 * static_cast<uint64_t>(cfg.pda.F()) <= cfg.spec.order())
        return ss::CauchyMatrix::build(cfg.pda.F(), cfg.spec);
    // No room for 2F Cauchy points in this field; fall back to a fixed
    // audited superregular matrix when one is known.
    if (cfg.pda.F() == 3 && cfg.spec.z == 2)
        return ss::CauchyMatrix::ingest({{1, 1, 1}, {1, 2, 3}, {1, 3, 2}}, cfg.spec);
    throw ConfigError("no ramp-sharing matrix available for F=" +
                      std::to_string(cfg.pda.F()) + " over GF(2^" +
                      std::to_string(cfg.spec.z) + ")");
}

template <typename ViewFn>
IndependenceReport audit_t2(const AuditConfig& cfg, ViewFn&& view_of) {
    const auto occ = pda::occurrence_index(cfg.pda);
    const auto plan =
        ShufflePlan::make(cfg.pda, occ, cfg.eta, cfg.L_sym * cfg.spec.z);
    const int F = cfg.pda.F(), Z = cfg.pda.Z();
    const size_t n_files = static_cast<size_t>(cfg.eta) * (F - Z);
    const ss::CauchyMatrix D = matrix_for(cfg);

    EnumSpace space;
    space.file_bits = n_files * cfg.L_sym * cfg.spec.z;
    space.ramp_bits = static_cast<size_t>(cfg.eta) * Z * cfg.L_sym * cfg.spec.z;
    space.key_bits = cfg.sabotage_zero_keys ? 0 : KeyTable::total_bits(plan);

    return enumerate(space, cfg.budget, [&](RandomSource& tape) {
        auto files = files_from_tape(tape, cfg.spec, n_files, cfg.L_sym);
        auto run = scheme::setup_t2(cfg.pda, cfg.spec, cfg.L_sym, cfg.eta,
                                    std::move(files), tape, &D);
        ZeroSource zeros;
        RandomSource& key_rng =
            cfg.sabotage_zero_keys ? static_cast<RandomSource&>(zeros) : tape;
        scheme::place_t2(run, key_rng);
        scheme::run_shuffle_t2(run);
        return view_of(run);
    });
}

} // namespace

IndependenceReport audit_eavesdropper_t2(const AuditConfig& cfg) {
    return audit_t2(cfg, [&](const scheme::T2Run& run) {
        const BitVec secret = all_ivs_bits(run.files, cfg.pda.K(), cfg.spec);
        return std::pair<BitVec, BitVec>{secret, transcript_bits(run.transcript)};
    });
}

IndependenceReport audit_node_secrecy(const AuditConfig& cfg, int k) {
    if (k < 1 || k > cfg.pda.K())
        throw ConfigError("audit_node_secrecy: node index out of range");
    return audit_t2(cfg, [&](const scheme::T2Run& run) {
        // Foreign IVs only: functions q != k.
        BitVec secret;
        for (int q = 1; q <= cfg.pda.K(); ++q) {
            if (q == k) continue;
            const auto g = mr::MapFunction::for_node(q, cfg.spec);
            for (const auto& w : run.files)
                secret = concat_bits(secret, symbols_to_bits(w.scaled(g.alpha)));
        }
        // Node view: M_k (shares + keys) plus received messages.
        BitVec view;
        const auto& st = run.states[k - 1];
        for (const auto& [id, payload] : st.shares)
            view = concat_bits(view, symbols_to_bits(payload));
        for (const auto& [id, key] : st.keys)
            view.insert(view.end(), key.begin(), key.end());
        view = concat_bits(view, transcript_bits(run.transcript, /*skip_sender=*/k));
        return std::pair<BitVec, BitVec>{secret, view};
    });
}

double mi_self_check() {
    JointCounter counter;
    for (uint8_t x = 0; x < 4; ++x) {
        const BitVec v{static_cast<uint8_t>(x & 1), static_cast<uint8_t>(x >> 1 & 1)};
        counter.add(v, v);
    }
    return counter.mi_bits();
}

} // namespace sdc::audit
