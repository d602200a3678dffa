#include <benchmark/benchmark.h>

#include "weiljac/cyclotomic.hpp"

using namespace weiljac;

static void BM_CycMultiply(benchmark::State& state) {
  const auto order = static_cast<std::uint32_t>(state.range(0));
  CycNum a(0L), b(0L);
  for (std::uint32_t j = 0; j < order; ++j) {
    a += CycNum(make_rational(static_cast<long>(j % 5) - 2, 1 + j % 3)) * CycNum::root_of_unity(j, order);
    b += CycNum(make_rational(static_cast<long>(j % 7) - 3, 1)) * CycNum::root_of_unity(2 * j + 1, order);
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycMultiply)->Arg(12)->Arg(24)->Arg(60)->Arg(120);

static void BM_CycInverse(benchmark::State& state) {
  const auto order = static_cast<std::uint32_t>(state.range(0));
  const CycNum a = CycNum(2L) + CycNum::root_of_unity(1, order) - CycNum::root_of_unity(3, order);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CycInverse)->Arg(12)->Arg(24)->Arg(60);
