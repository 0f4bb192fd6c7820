#include <benchmark/benchmark.h>

#include "sdc/gf2e.hpp"

using namespace sdc::gf;

static void BM_MulRaw(benchmark::State& state) {
    const auto spec = FieldSpec::canonical(static_cast<unsigned>(state.range(0)));
    const uint64_t mask = spec.order() - 1;
    uint64_t a = 3, b = 5, acc = 0;
    for (auto _ : state) {
        acc ^= mul_raw(a & mask, b & mask, spec);
        a += 1;
        b += 3;
    }
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_MulRaw)->Arg(3)->Arg(8)->Arg(16);

static void BM_InvRaw(benchmark::State& state) {
    const auto spec = FieldSpec::canonical(static_cast<unsigned>(state.range(0)));
    const uint64_t mask = spec.order() - 1;
    uint64_t a = 1, acc = 0;
    for (auto _ : state) {
        acc ^= inv_raw((a & mask) ? a & mask : 1, spec);
        a += 1;
    }
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_InvRaw)->Arg(3)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
