#include <benchmark/benchmark.h>

#include "hypermap/henum.hpp"
#include "hypermap/interpolate.hpp"

using namespace hypermap;

// Whole table recovery: grid evaluation plus the three Newton passes.
static void BM_InterpolateTable(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    FGrid fgrid;
    HGrid hgrid;
    auto eval = [&](int m, int n, int lambda) {
      return h_r_point(r, m, n, lambda, fgrid, hgrid);
    };
    benchmark::DoNotOptimize(interpolate_table(r, eval, threads));
  }
}
BENCHMARK(BM_InterpolateTable)
    ->Args({6, 1})
    ->Args({8, 1})
    ->Args({10, 1})
    ->Args({10, 2})
    ->Unit(benchmark::kMillisecond);

static void BM_TotalsSequence(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(totals(r));
  }
}
BENCHMARK(BM_TotalsSequence)->Arg(13)->Arg(50);
