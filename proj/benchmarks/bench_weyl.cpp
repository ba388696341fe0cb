// Weyl group benchmarks: enumeration, class partition, parabolic scans,
// and full fixed-point counts through the engine.
#include <benchmark/benchmark.h>

#include "ifix/fixity.hpp"
#include "ifix/rootdata.hpp"

using namespace ifix;

static void BM_EnumerateWeylF4(benchmark::State& state) {
  for (auto _ : state) {
    WeylGroup w(RootSystem::build(Family::F4, 4));
    benchmark::DoNotOptimize(w.order());
  }
}
BENCHMARK(BM_EnumerateWeylF4);

static void BM_EnumerateWeylE6(benchmark::State& state) {
  for (auto _ : state) {
    WeylGroup w(RootSystem::build(Family::E6, 6));
    benchmark::DoNotOptimize(w.order());
  }
}
BENCHMARK(BM_EnumerateWeylE6)->Unit(benchmark::kMillisecond);

static void BM_ConjugacyClassesE6(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    WeylGroup w(RootSystem::build(Family::E6, 6));
    state.ResumeTiming();
    benchmark::DoNotOptimize(w.classes().size());
  }
}
BENCHMARK(BM_ConjugacyClassesE6)->Unit(benchmark::kMillisecond);

static void BM_SigmaClassesE6Twisted(benchmark::State& state) {
  WeylGroup w(RootSystem::build(Family::E6, 6));
  w.classes();
  for (auto _ : state) {
    auto sc = w.sigma_classes(true);
    benchmark::DoNotOptimize(sc.size());
  }
}
BENCHMARK(BM_SigmaClassesE6Twisted)->Unit(benchmark::kMillisecond);

static void BM_ParabolicIndexPolyF4(benchmark::State& state) {
  WeylGroup w(RootSystem::build(Family::F4, 4));
  for (auto _ : state) {
    QPoly p = w.parabolic_index_poly({1}, false);
    benchmark::DoNotOptimize(p.degree());
  }
}
BENCHMARK(BM_ParabolicIndexPolyF4);

static void BM_EngineChiValueF4(benchmark::State& state) {
  ParabolicEngine engine(Family::F4, false);
  InvolutionRecord rec;
  rec.label = "t4";
  rec.has_pseudo_levi = true;
  rec.pseudo_levi = {0, 1, 2, 3};
  rec.centralizer = "SO9";
  Int q(5);
  // warm the caches once so the loop measures the per-query cost
  engine.chi_value({1}, rec, q);
  for (auto _ : state) {
    Rat v = engine.chi_value({1}, rec, q);
    benchmark::DoNotOptimize(v.get_num().get_mpz_t());
  }
}
BENCHMARK(BM_EngineChiValueF4);

static void BM_EngineChiPolyF4(benchmark::State& state) {
  ParabolicEngine engine(Family::F4, false);
  InvolutionRecord rec;
  rec.label = "t4";
  rec.has_pseudo_levi = true;
  rec.pseudo_levi = {0, 1, 2, 3};
  rec.centralizer = "SO9";
  engine.chi_value({1}, rec, Int(3));
  for (auto _ : state) {
    QPoly p = engine.chi_poly({1}, rec);
    benchmark::DoNotOptimize(p.degree());
  }
}
BENCHMARK(BM_EngineChiPolyF4);

BENCHMARK_MAIN();
