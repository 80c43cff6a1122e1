#include <benchmark/benchmark.h>

#include "perfcubes/arith.hpp"
#include "perfcubes/search.hpp"
#include "perfcubes/simd/pair_scan.hpp"

namespace {

using perfcubes::simd::Backend;

void BM_PairScan(benchmark::State& state, Backend backend) {
  if (!perfcubes::simd::is_supported(backend)) {
    state.SkipWithError("backend not supported");
    return;
  }
  const auto kernel = perfcubes::simd::pair_scan_kernel(backend);
  const std::uint64_t residual = std::uint64_t{1} << state.range(0);
  const std::uint64_t y = perfcubes::icbrt(residual);
  std::vector<perfcubes::simd::PairHit> hits;
  std::uint64_t steps = 0;
  for (auto _ : state) {
    hits.clear();
    steps = kernel(residual, y, hits);
    benchmark::DoNotOptimize(hits.data());
  }
  state.counters["pairs/s"] = benchmark::Counter(static_cast<double>(steps), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_ThreeCubes(benchmark::State& state, Backend backend) {
  if (!perfcubes::simd::is_supported(backend)) {
    state.SkipWithError("backend not supported");
    return;
  }
  perfcubes::SearchOptions opt;
  opt.backend = backend;
  const perfcubes::Natural target{std::uint64_t{137438691328}};
  for (auto _ : state) benchmark::DoNotOptimize(perfcubes::search_three_cubes(target, opt));
}

}  // namespace

BENCHMARK_CAPTURE(BM_PairScan, scalar, Backend::scalar)->DenseRange(30, 50, 10);
BENCHMARK_CAPTURE(BM_PairScan, avx2, Backend::avx2)->DenseRange(30, 50, 10);
BENCHMARK_CAPTURE(BM_PairScan, avx512, Backend::avx512)->DenseRange(30, 50, 10);
BENCHMARK_CAPTURE(BM_PairScan, neon, Backend::neon)->DenseRange(30, 50, 10);
BENCHMARK_CAPTURE(BM_ThreeCubes, scalar, Backend::scalar)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ThreeCubes, avx2, Backend::avx2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ThreeCubes, avx512, Backend::avx512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
