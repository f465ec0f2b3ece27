#include <benchmark/benchmark.h>

#include "hypermap/fseries.hpp"

using namespace hypermap;

// Full F block at the cube diagonal: the composition count C(2r-1, r-1)
// makes this the hot spot of a table run.
static void BM_FBlockDiagonal(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FGrid grid;
    benchmark::DoNotOptimize(f_r(r, r, r, r, grid));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FBlockDiagonal)->DenseRange(6, 13, 1)->Unit(benchmark::kMillisecond)->Complexity();

// Skinny points (m = 1, 2) dominate by count, not by cost.
static void BM_FBlockSkinny(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FGrid grid;
    benchmark::DoNotOptimize(f_r(r, 2, r, r, grid));
  }
}
BENCHMARK(BM_FBlockSkinny)->DenseRange(8, 13, 1)->Unit(benchmark::kMicrosecond);
