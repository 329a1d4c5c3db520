#include <benchmark/benchmark.h>

#include "golden/series.hpp"

namespace {

void BM_ExpSeries(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(golden::golden_exp_series(1, golden::ExpVariant::e, state.range(0), 256));
  }
}
BENCHMARK(BM_ExpSeries)->RangeMultiplier(2)->Range(25, 400);

void BM_ExpEval(benchmark::State& state) {
  const golden::Complex x(golden::Real(0.75, 256), golden::Real(-0.25, 256));
  for (auto _ : state) {
    benchmark::DoNotOptimize(golden::golden_exp_eval(2, golden::ExpVariant::E, x, state.range(0), 256));
  }
}
BENCHMARK(BM_ExpEval)->RangeMultiplier(2)->Range(25, 400);

void BM_EntireGfResidual(benchmark::State& state) {
  const golden::Real x(0.5, 256);
  for (auto _ : state) benchmark::DoNotOptimize(golden::entire_gf_residual(state.range(0), x, 100, 256));
}
BENCHMARK(BM_EntireGfResidual)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
