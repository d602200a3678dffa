#include <benchmark/benchmark.h>

#include "weiljac/weil.hpp"

using namespace weiljac;

static void BM_RhoS(benchmark::State& state) {
  const auto m = FiniteQuadraticModule::hyperbolic(state.range(0));
  for (auto _ : state) {
    const WeilRep w(m);
    benchmark::DoNotOptimize(w.rho_s());
  }
}
BENCHMARK(BM_RhoS)->Arg(3)->Arg(5)->Arg(7);

static void BM_Relations(benchmark::State& state) {
  const WeilRep w(discriminant_module(HalfIntegralMatrix::binary_prime(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(check_relations(w));
}
BENCHMARK(BM_Relations)->Arg(7)->Arg(23)->Arg(47);

static void BM_Invariants(benchmark::State& state) {
  const auto m = FiniteQuadraticModule::hyperbolic(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invariants(m));
}
BENCHMARK(BM_Invariants)->Arg(2)->Arg(3)->Arg(5)->Arg(7);
