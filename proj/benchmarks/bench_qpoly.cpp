// Polynomial and big-integer benchmarks: order expansion, evaluation,
// exact division, and the power comparison behind every exponent claim.
#include <benchmark/benchmark.h>

#include "ifix/lieorders.hpp"
#include "ifix/qpoly.hpp"

using namespace ifix;

static void BM_ExpandOrderE8(benchmark::State& state) {
  FactoredOrder e8 = group_order("E8");
  for (auto _ : state) {
    QPoly p = e8.expand();
    benchmark::DoNotOptimize(p.degree());
  }
}
BENCHMARK(BM_ExpandOrderE8);

static void BM_EvalOrderE8(benchmark::State& state) {
  QPoly p = group_order("E8").expand();
  Int q(1 << state.range(0));
  for (auto _ : state) {
    Int v = p.eval_int(q);
    benchmark::DoNotOptimize(v.get_mpz_t());
  }
}
BENCHMARK(BM_EvalOrderE8)->Arg(4)->Arg(16)->Arg(30);

static void BM_ClassSizeDivision(benchmark::State& state) {
  QPoly e7 = group_order("E7").expand();
  QPoly cent = (group_order("SL2") * group_order("SO12+")).expand();
  for (auto _ : state) {
    auto quo = e7.divide_exact(cent);
    benchmark::DoNotOptimize(quo->degree());
  }
}
BENCHMARK(BM_ClassSizeDivision);

static void BM_ComparePow(benchmark::State& state) {
  // ifix^1000 vs n^427: the exponent-bracket comparison at its real size
  Int fix("131072");
  Int n = group_order("F4").value_int(Int(2)) / (49 * 72);
  for (auto _ : state) {
    int c = compare_pow(fix, 1000, n, 427);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ComparePow);

static void BM_ParseOrderExpr(benchmark::State& state) {
  for (auto _ : state) {
    FactoredOrder f = parse_order_expr("2*(q+1)*E6-");
    benchmark::DoNotOptimize(f.degree());
  }
}
BENCHMARK(BM_ParseOrderExpr);

static void BM_EvalGroupExpr(benchmark::State& state) {
  Int q(8);
  for (auto _ : state) {
    Int v = eval_group_expr("2E6/q^24/(q^2-1)/SO8-", q);
    benchmark::DoNotOptimize(v.get_mpz_t());
  }
}
BENCHMARK(BM_EvalGroupExpr);

BENCHMARK_MAIN();
