#include <benchmark/benchmark.h>

#include "weiljac/dims.hpp"

using namespace weiljac;

static void BM_GeneralFormula(benchmark::State& state) {
  const auto f = HalfIntegralMatrix::binary_prime(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theorem1_dim(f, 10));
}
BENCHMARK(BM_GeneralFormula)->Arg(3)->Arg(23)->Arg(47);

static void BM_ClosedFormula(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(binary_prime_dim(state.range(0), 10));
}
BENCHMARK(BM_ClosedFormula)->Arg(3)->Arg(23)->Arg(47);

static void BM_HilbertPoincare(benchmark::State& state) {
  const auto f = HalfIntegralMatrix::binary_prime(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_poincare(f));
}
BENCHMARK(BM_HilbertPoincare)->Arg(3)->Arg(23);
