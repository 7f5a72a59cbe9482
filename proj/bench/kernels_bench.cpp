#include <benchmark/benchmark.h>

#include "rankmc/constructions.hpp"
#include "rankmc/kernels.hpp"

using namespace rankmc;

namespace {

// Arg 0 selects the code: 0 = [5,3] scattered dual over F_8, 1 = [4,3] Gabidulin over F_16.
Code bench_code(int which) {
    if (which == 0) return redei_code(FieldTower::make(2, 1, 3));
    return gabidulin(FieldTower::make(2, 1, 4), 4, 3);
}

void BM_weight_counts_parallel(benchmark::State& st) {
    const Code c = bench_code(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::weight_counts(c.field(), c.generator()));
}

void BM_weight_counts_serial(benchmark::State& st) {
    const Code c = bench_code(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::weight_counts_serial(c.field(), c.generator()));
}

void BM_point_weights_parallel(benchmark::State& st) {
    const Code c = bench_code(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::point_weights(c.field(), c.generator()));
}

void BM_point_weights_serial(benchmark::State& st) {
    const Code c = bench_code(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::point_weights_serial(c.field(), c.generator()));
}

void BM_census_parallel(benchmark::State& st) {
    const Code c = bench_code(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::hyperplane_census(c.field(), c.generator()));
}

void BM_census_serial(benchmark::State& st) {
    const Code c = bench_code(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::hyperplane_census_serial(c.field(), c.generator()));
}

}  // namespace

BENCHMARK(BM_weight_counts_parallel)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_weight_counts_serial)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_point_weights_parallel)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_point_weights_serial)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_census_parallel)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_census_serial)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
