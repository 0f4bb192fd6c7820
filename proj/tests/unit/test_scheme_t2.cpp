#include <doctest.h>

#include <fstream>
#include <sstream>

#include "sdc/scheme_t2.hpp"

using namespace sdc::scheme;
using sdc::gf::FieldSpec;
using sdc::gf::SymbolVec;

namespace {

sdc::pda::Pda p1() {
    return sdc::pda::Pda::validate({
        {0, 0, 0, 1, 2},
        {0, 1, 2, 0, 0},
        {1, 0, 3, 0, 4},
        {2, 3, 0, 4, 0},
    });
}

std::vector<SymbolVec> random_files(size_t n, const FieldSpec& spec, size_t L_sym,
                                    sdc::RandomSource& rng) {
    std::vector<SymbolVec> files;
    for (size_t i = 0; i < n; ++i) {
        std::vector<uint64_t> vals(L_sym);
        for (auto& v : vals) v = rng.symbol(spec);
        files.emplace_back(spec, vals);
    }
    return files;
}

SymbolVec oracle_output(int k, const std::vector<SymbolVec>& files,
                        const FieldSpec& spec, size_t L_sym) {
    const auto g = sdc::mr::MapFunction::for_node(k, spec);
    SymbolVec acc = SymbolVec::zero(spec, L_sym);
    for (const auto& w : files) acc = acc ^ w.scaled(g.alpha);
    return acc;
}

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(SDC_FIXTURE_DIR) + "/" + name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

T2Run full_run(const sdc::pda::Pda& p, const FieldSpec& spec, size_t L_sym, int eta,
               const std::vector<SymbolVec>& files, uint64_t seed,
               const sdc::ss::CauchyMatrix* D = nullptr) {
    sdc::SeededSource rng(seed);
    auto run = setup_t2(p, spec, L_sym, eta, files, rng, D);
    place_t2(run, rng);
    run_shuffle_t2(run);
    return run;
}

} // namespace

TEST_CASE("coded computing on the 5-node array") {
    const auto p = p1();
    const auto spec = FieldSpec::canonical(3);
    const size_t L_sym = 1;
    const int eta = 2;

    sdc::SeededSource data_rng(31);
    const auto files = random_files(size_t(eta) * (p.F() - p.Z()), spec, L_sym, data_rng);
    const auto run = full_run(p, spec, L_sym, eta, files, 32);

    CHECK(run.plan.granularity == Granularity::AllBatches);
    CHECK(run.transcript.total_bits() == 42);

    // Nodes store only shares: Z rows x eta batches each.
    for (const auto& st : run.states) CHECK(st.shares.size() == 4);

    const auto measured = measured_loads_t2(run);
    const auto expected = sdc::pda::load_coded(p);
    CHECK(measured.r == expected.r); // 1
    CHECK(measured.L == expected.L); // 7/10

    // Exactly F/(F-Z) = 2x the shuffle-only loads on the same array.
    const auto base = sdc::pda::load_shuffle(p);
    CHECK(measured.r == base.r * sdc::pda::Rational(p.F(), p.F() - p.Z()));
    CHECK(measured.L == base.L * sdc::pda::Rational(p.F(), p.F() - p.Z()));

    for (int k = 1; k <= p.K(); ++k) {
        const auto dec = decode_t2(run, k);
        CHECK(dec.output.vals == oracle_output(k, files, spec, L_sym).vals);
        // Decoded IV rows match the plaintext files...
        const auto g = sdc::mr::MapFunction::for_node(k, spec);
        for (int m = 1; m <= eta; ++m) {
            for (int n = 1; n <= p.F() - p.Z(); ++n) {
                const auto& w = files[(m - 1) * (p.F() - p.Z()) + (n - 1)];
                CHECK(dec.ivs.at({n, m}).vals == w.scaled(g.alpha).vals);
            }
            // ...and the surplus rows are the mapped ramp keys.
            for (int j = 1; j <= p.Z(); ++j)
                CHECK(dec.mapped_keys.at({j, m}).vals ==
                      run.ramp_keys[m - 1].keys[j - 1].scaled(g.alpha).vals);
        }
    }
}

TEST_CASE("a vetted literal matrix is interchangeable with the built one") {
    const auto p = p1();
    const auto spec = FieldSpec::canonical(3);
    const auto D = sdc::ss::CauchyMatrix::parse(fixture("example2_matrix.txt"), spec);

    sdc::SeededSource data_rng(41);
    const auto files = random_files(4, spec, 1, data_rng);
    const auto run = full_run(p, spec, 1, 2, files, 42, &D);

    CHECK(run.transcript.total_bits() == 42);
    for (int k = 1; k <= p.K(); ++k)
        CHECK(decode_t2(run, k).output.vals == oracle_output(k, files, spec, 1).vals);
}

TEST_CASE("matrix and file-count mismatches are rejected") {
    const auto p = p1();
    const auto spec = FieldSpec::canonical(3);
    sdc::SeededSource rng(1);

    auto files = random_files(4, spec, 1, rng);
    const auto small = sdc::ss::CauchyMatrix::build(3, spec);
    CHECK_THROWS_AS(setup_t2(p, spec, 1, 2, files, rng, &small), sdc::ConfigError);

    auto short_files = random_files(3, spec, 1, rng);
    CHECK_THROWS_AS(setup_t2(p, spec, 1, 2, short_files, rng), sdc::ConfigError);
}

TEST_CASE("per-batch coded run end to end") {
    const auto p = sdc::pda::generate_mn_pda(3, 1); // F=3, Z=1, g=2
    const auto spec = sdc::gf::field_for(p.F());    // GF(8): 2F = 6 <= 8
    const int eta = 2;
    sdc::SeededSource data_rng(51);
    const auto files = random_files(size_t(eta) * (p.F() - p.Z()), spec, 2, data_rng);
    const auto run = full_run(p, spec, 2, eta, files, 52);

    CHECK(run.plan.granularity == Granularity::PerBatch);
    const auto measured = measured_loads_t2(run);
    CHECK(measured.L == sdc::pda::load_coded(p).L);
    CHECK(measured.r == sdc::pda::load_coded(p).r);
    for (int k = 1; k <= p.K(); ++k)
        CHECK(decode_t2(run, k).output.vals == oracle_output(k, files, spec, 2).vals);
}
