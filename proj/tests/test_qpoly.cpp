#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ifix/qpoly.hpp"

using namespace ifix;

namespace {

QPoly qminus1() { return QPoly::q() - QPoly(1); }

QPoly qpow_minus1(unsigned k) { return QPoly::q(k) - QPoly(1); }

}  // namespace

TEST_CASE("monomials and evaluation") {
  QPoly p = QPoly::q(2) - QPoly::q() + QPoly(1);  // q^2 - q + 1
  CHECK(p.degree() == 2);
  CHECK(p.eval(Int(3)) == 7);
  CHECK(p.eval(Int(1)) == 1);
  CHECK(p.str() == "q^2 - q + 1");
}

TEST_CASE("ring laws hold under evaluation") {
  QPoly a = QPoly::from_int_coeffs({3, -1, 0, 2});
  QPoly b = QPoly::from_int_coeffs({-5, 4, 1});
  QPoly c = QPoly::from_int_coeffs({1, 1, 1, 1, 1});
  for (long q = 2; q <= 16; ++q) {
    Int qi(q);
    CHECK((a + b).eval(qi) == a.eval(qi) + b.eval(qi));
    CHECK((a - b).eval(qi) == a.eval(qi) - b.eval(qi));
    CHECK((a * b).eval(qi) == a.eval(qi) * b.eval(qi));
    CHECK(((a + b) * c).eval(qi) == (a * c + b * c).eval(qi));
    CHECK((a * b) == (b * a));
    CHECK(((a * b) * c) == (a * (b * c)));
  }
}

TEST_CASE("exact division") {
  QPoly q6 = qpow_minus1(6);
  QPoly q2 = qpow_minus1(2);
  auto quot = q6.divide_exact(q2);
  REQUIRE(quot.has_value());
  CHECK(*quot == QPoly::from_int_coeffs({1, 0, 1, 0, 1}));  // q^4+q^2+1
  CHECK(!qpow_minus1(3).divide_exact(q2).has_value());
  CHECK(q6.divide_exact(qminus1()).has_value());
}

TEST_CASE("factor multiplicity") {
  // prod (q^d - 1) over the degrees of E7: each factor contributes one q-1.
  QPoly p(1);
  for (unsigned d : {2u, 6u, 8u, 10u, 12u, 14u, 18u}) p *= qpow_minus1(d);
  CHECK(p.factor_multiplicity(qminus1()) == 7);
  CHECK(p.factor_multiplicity(QPoly::q() + QPoly(1)) == 7);
  QPoly f = QPoly::from_int_coeffs({1, 0, 1});  // q^2 + 1 divides q^d-1 iff 4|d
  CHECK(p.factor_multiplicity(f) == 2);

  QPoly cube = qminus1().pow(3) * (QPoly::q() + QPoly(2));
  CHECK(cube.factor_multiplicity(qminus1()) == 3);
  CHECK(cube.factor_multiplicity(QPoly::q() + QPoly(2)) == 1);
  CHECK(cube.factor_multiplicity(QPoly::q() + QPoly(5)) == 0);
}

TEST_CASE("factored order expansion and p'-part") {
  // |G2(q)| = q^6 (q^6-1)(q^2-1)
  FactoredOrder g2;
  g2.qpow = 6;
  g2.mul_factor(qpow_minus1(6));
  g2.mul_factor(qpow_minus1(2));
  CHECK(g2.degree() == 14);
  CHECK(g2.value_int(Int(2)) == 12096);
  CHECK(g2.value_int(Int(3)) == 4245696);
  CHECK(g2.expand().eval_int(Int(4)) == g2.value_int(Int(4)));

  FactoredOrder pp = g2.pprime_part();
  for (long q = 2; q <= 16; ++q) {
    Int qi(q);
    Int qn;
    mpz_pow_ui(qn.get_mpz_t(), qi.get_mpz_t(), 6);
    CHECK(g2.expand().eval(qi) == Rat(qn) * pp.expand().eval(qi));
  }
}

TEST_CASE("factored order with scalar two") {
  // 2(q-1) |E6(q)|-shaped centralizer order: scalar survives expansion.
  FactoredOrder c(Rat(2));
  c.mul_factor(qminus1());
  CHECK(c.expand() == QPoly::from_int_coeffs({-2, 2}));
  CHECK(c.value_int(Int(5)) == 8);
}

TEST_CASE("half-integral polynomial evaluates to integers at odd q") {
  // (q^5+1)(q^9+1)(q^13+...+1)/2 has non-integer coefficients but integer
  // values at every odd q.
  QPoly p = (QPoly::q(5) + QPoly(1)) * (QPoly::q(9) + QPoly(1));
  QPoly s;
  for (unsigned i = 0; i <= 13; ++i) s += QPoly::q(i);
  p *= s;
  p *= QPoly(Rat(1, 2));
  CHECK(!p.is_integral());
  for (long q : {3, 5, 7, 9, 11}) CHECK_NOTHROW(p.eval_int(Int(q)));
}

TEST_CASE("power comparison") {
  // 266761 > 1210323465^(597/1000)
  CHECK(compare_pow(Int(266761), 1000, Int(1210323465), 597) > 0);
  CHECK(compare_pow(Int(4), 2, Int(2), 4) == 0);
  CHECK(compare_pow(Int(10), 3, Int(32), 2) < 0);
}

TEST_CASE("compose q power") {
  QPoly p = QPoly::q(2) + QPoly::q() + QPoly(1);
  QPoly p3 = p.compose_qpow(3);
  CHECK(p3 == QPoly::from_int_coeffs({1, 0, 0, 1, 0, 0, 1}));
  CHECK(p3.eval(Int(2)) == p.eval(Int(8)));
}
