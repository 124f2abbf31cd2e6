#include <benchmark/benchmark.h>

#include "kustab/euler_sigma.hpp"
#include "kustab/lattice.hpp"
#include "kustab/moduli.hpp"
#include "kustab/normal_forms.hpp"
#include "kustab/tilt.hpp"

using namespace kustab;

static void BM_Smith(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>((7 * i + 3 * j * j + 1) % 19) - 9;
  for (auto _ : state) benchmark::DoNotOptimize(smith_invariants(m));
}
BENCHMARK(BM_Smith)->Arg(4)->Arg(8)->Arg(16);

static void BM_E8Roots(benchmark::State& state) {
  const IntegralLattice e8 = build_named("E8(-1)");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_square(e8, Int(-2), 2));
}
BENCHMARK(BM_E8Roots)->Unit(benchmark::kMillisecond);

static void BM_FamilyInvariants(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(family_invariants({2, 3}));
}
BENCHMARK(BM_FamilyInvariants)->Unit(benchmark::kMillisecond);

static void BM_Rank4Scan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rank4_chi2_obstruction(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Rank4Scan)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_WallScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wall_scan({1, 0}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_WallScan)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
