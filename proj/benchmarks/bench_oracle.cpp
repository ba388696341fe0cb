// Matrix-group oracle benchmarks: BFS closure, involution scans, subgroup
// normalizers, and coset fixed-point counting.
#include <benchmark/benchmark.h>

#include "ifix/oracle.hpp"

using namespace ifix;

static void BM_BuildU33(benchmark::State& state) {
  GeneratorSet gs = builtin_group("U3(3)");
  for (auto _ : state) {
    MatGroup g = build_group(gs);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_BuildU33)->Unit(benchmark::kMillisecond);

static void BM_BuildSz8(benchmark::State& state) {
  GeneratorSet gs = builtin_group("Sz(8)");
  for (auto _ : state) {
    MatGroup g = build_group(gs);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_BuildSz8)->Unit(benchmark::kMillisecond);

static void BM_InvolutionScanSz8(benchmark::State& state) {
  MatGroup g = build_group(builtin_group("Sz(8)"));
  for (auto _ : state) {
    // force a fresh scan by querying element orders directly
    size_t count = 0;
    for (size_t i = 1; i < g.order(); ++i)
      if (g.element_order(i) == 2) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_InvolutionScanSz8)->Unit(benchmark::kMillisecond);

static void BM_SylowNormalizerU33(benchmark::State& state) {
  MatGroup g = build_group(builtin_group("U3(3)"));
  for (auto _ : state) {
    auto n = g.sylow_normalizer(3);
    benchmark::DoNotOptimize(n.size());
  }
}
BENCHMARK(BM_SylowNormalizerU33)->Unit(benchmark::kMillisecond);

static void BM_CosetFixityU33(benchmark::State& state) {
  MatGroup g = build_group(builtin_group("U3(3)"));
  auto sub = g.sylow_normalizer(3);
  for (auto _ : state) {
    CosetAction act(g, sub);
    benchmark::DoNotOptimize(act.ifix());
  }
}
BENCHMARK(BM_CosetFixityU33)->Unit(benchmark::kMillisecond);

static void BM_BurnsideCheckL28(benchmark::State& state) {
  MatGroup g = build_group(builtin_group("L2(8)"));
  auto sub = g.cyclic_normalizer(9);
  CosetAction act(g, sub);
  for (auto _ : state) {
    bool ok = act.burnside_check();
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_BurnsideCheckL28);

BENCHMARK_MAIN();
