#include <benchmark/benchmark.h>

#include "sdc/scheme_t1.hpp"
#include "sdc/scheme_t2.hpp"

using namespace sdc;

namespace {

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

} // namespace

static void BM_ShuffleT1(benchmark::State& state) {
    const auto p = pda::generate_mn_pda(static_cast<int>(state.range(0)), 2);
    const auto spec = gf::FieldSpec::canonical(8);
    const size_t L_sym = 16;
    const int eta = 2;
    const auto files = seeded_files(size_t(eta) * p.F(), spec, L_sym, 1);
    for (auto _ : state) {
        SeededSource key_rng(2);
        auto run = scheme::place_t1(p, spec, L_sym, eta, files, key_rng);
        scheme::run_shuffle_t1(run);
        benchmark::DoNotOptimize(run.transcript.total_bits());
    }
}
BENCHMARK(BM_ShuffleT1)->Arg(5)->Arg(6)->Arg(7);

static void BM_ShuffleT2(benchmark::State& state) {
    const auto p = pda::generate_mn_pda(static_cast<int>(state.range(0)), 2);
    const auto spec = gf::FieldSpec::canonical(8);
    const size_t L_sym = 16;
    const int eta = 2;
    const auto files = seeded_files(size_t(eta) * (p.F() - p.Z()), spec, L_sym, 1);
    for (auto _ : state) {
        SeededSource rng(2);
        auto run = scheme::setup_t2(p, spec, L_sym, eta, files, rng);
        scheme::place_t2(run, rng);
        scheme::run_shuffle_t2(run);
        benchmark::DoNotOptimize(run.transcript.total_bits());
    }
}
BENCHMARK(BM_ShuffleT2)->Arg(5)->Arg(6)->Arg(7);
