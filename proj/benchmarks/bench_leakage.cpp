#include <benchmark/benchmark.h>

#include "sdc/secret_sharing.hpp"

using namespace sdc;

static void BM_LeakageOracle(benchmark::State& state) {
    const int F = static_cast<int>(state.range(0));
    const auto spec = gf::field_for(F);
    const auto D = ss::CauchyMatrix::build(F, spec);
    for (auto _ : state) {
        const auto rep = ss::share_leakage_oracle(D, F / 2);
        benchmark::DoNotOptimize(rep.max_defect);
    }
}
BENCHMARK(BM_LeakageOracle)->Arg(2)->Arg(3)->Arg(4);

static void BM_SubmatrixAudit(benchmark::State& state) {
    const int F = static_cast<int>(state.range(0));
    const auto spec = gf::field_for(F);
    const auto D = ss::CauchyMatrix::build(F, spec);
    for (auto _ : state)
        benchmark::DoNotOptimize(ss::all_submatrices_full_rank(D));
}
BENCHMARK(BM_SubmatrixAudit)->Arg(4)->Arg(6);
