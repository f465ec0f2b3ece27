#include <benchmark/benchmark.h>

#include "hypermap/oracle.hpp"

using namespace hypermap;

// (r!)^2 pair scans with the union-find transitivity filter.
static void BM_BruteForceTable(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_table(r, threads));
  }
}
BENCHMARK(BM_BruteForceTable)
    ->Args({5, 1})
    ->Args({6, 1})
    ->Args({6, 2})
    ->Unit(benchmark::kMillisecond);

static void BM_PBarSum(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(p_bar_sum({r - 2, 1, 1}, 2, 3));
  }
}
BENCHMARK(BM_PBarSum)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
