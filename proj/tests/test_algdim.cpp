// Fixed-subvariety dimension arithmetic for involutions acting on coset
// varieties of exceptional algebraic groups, and the resulting growth
// exponents gamma = dim C_Omega(t) / dim Omega.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ifix/algdim.hpp"

using namespace ifix;

namespace {

DimRecord row(std::string g, std::string h, std::string cls, int dg, int dh,
              int dcls, int dcap, std::string cond = "") {
  DimRecord r;
  r.ambient = std::move(g);
  r.subgroup = std::move(h);
  r.cls = std::move(cls);
  r.condition = std::move(cond);
  r.dim_g = dg;
  r.dim_h = dh;
  r.dim_class = dcls;
  r.dim_class_in_h = dcap;
  return r;
}

Rat frac(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("headline exponent rows") {
  // Class dimensions from the ambient centralizer types:
  //   E8: t1 ~ D8 (cent 120, class 128); E7: t4 ~ A7 (cent 63, class 70);
  //   F4: t1 ~ A1C3 (cent 24, class 28); G2: t1 ~ A1A1 (cent 6, class 8).
  DimRecord e8_b2 = row("E8", "B2", "t1", 248, 10, 128, 6, "p>=5");
  CHECK(fixed_dim(e8_b2) == 116);
  CHECK(gamma(e8_b2) == frac(58, 119));

  DimRecord e8_a1 = row("E8", "A1", "t1", 248, 3, 128, 2);
  CHECK(fixed_dim(e8_a1) == 119);
  CHECK(gamma(e8_a1) == frac(17, 35));

  DimRecord e7_a1 = row("E7", "A1", "t4", 133, 3, 70, 2);
  CHECK(fixed_dim(e7_a1) == 62);
  CHECK(gamma(e7_a1) == frac(31, 65));

  DimRecord f4_g2 = row("F4", "G2", "t1", 52, 14, 28, 8, "p=7");
  CHECK(fixed_dim(f4_g2) == 18);
  CHECK(gamma(f4_g2) == frac(9, 19));

  DimRecord f4_a1 = row("F4", "A1", "t1", 52, 3, 28, 2, "p>=13");
  CHECK(fixed_dim(f4_a1) == 23);
  CHECK(gamma(f4_a1) == frac(23, 49));

  DimRecord g2_p1 = row("G2", "P1", "t1", 14, 9, 8, 5);
  CHECK(fixed_dim(g2_p1) == 2);
  CHECK(gamma(g2_p1) == frac(2, 5));

  DimRecord g2_p2 = row("G2", "P2", "t1", 14, 9, 8, 5);
  CHECK(gamma(g2_p2) == frac(2, 5));

  DimRecord g2_a1 = row("G2", "A1", "t1", 14, 3, 8, 2, "p>=7");
  CHECK(fixed_dim(g2_a1) == 5);
  CHECK(gamma(g2_a1) == frac(5, 11));

  for (const DimRecord& r :
       {e8_b2, e8_a1, e7_a1, f4_g2, f4_a1, g2_p1, g2_p2, g2_a1}) {
    CAPTURE(r.ambient + "/" + r.subgroup);
    CHECK(gamma(r) > 0);
    CHECK(gamma(r) <= 1);
  }
}

TEST_CASE("central class fixes everything") {
  DimRecord r = row("E8", "B2", "1", 248, 10, 0, 0);
  CHECK(fixed_dim(r) == 238);
  CHECK(gamma(r) == 1);
}

TEST_CASE("invalid records rejected") {
  CHECK_THROWS_AS(fixed_dim(row("G2", "G2", "t1", 14, 14, 8, 2)),
                  std::invalid_argument);
  // Intersection larger than the class.
  CHECK_THROWS_AS(fixed_dim(row("G2", "A1", "t1", 14, 3, 2, 3)),
                  std::invalid_argument);
  // Fixed dimension would be negative.
  CHECK_THROWS_AS(fixed_dim(row("G2", "A1", "t1", 14, 3, 13, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(gamma_max({}), std::invalid_argument);
}

TEST_CASE("monotone in the two class dimensions") {
  DimRecord base = row("F4", "A1", "t1", 52, 3, 28, 2);
  DimRecord more_overlap = base;
  more_overlap.dim_class_in_h = 3;
  CHECK(fixed_dim(more_overlap) == fixed_dim(base) + 1);
  DimRecord bigger_class = base;
  bigger_class.dim_class = 30;
  CHECK(fixed_dim(bigger_class) == fixed_dim(base) - 2);
}

TEST_CASE("maximum over classes of one pair") {
  // Only classes whose intersection data is recorded participate; the
  // maximum is over the supplied rows.
  std::vector<DimRecord> rows = {
      row("F4", "A1", "t1", 52, 3, 28, 2, "p>=13"),
      row("F4", "A1", "x", 52, 3, 30, 0, "p>=13"),
  };
  CHECK(gamma_max(rows) == frac(23, 49));
  CHECK(gamma_max({rows[1]}) == frac(19, 49));
}

TEST_CASE("toral involution centralizer dimension") {
  CHECK(torus_involution_dim(3, 1) == 1);
  CHECK(torus_involution_dim(14, 2) == 6);
  CHECK(torus_involution_dim(52, 4) == 24);
  CHECK(torus_involution_dim(78, 6) == 36);
  CHECK(torus_involution_dim(133, 7) == 63);
  CHECK(torus_involution_dim(248, 8) == 120);
  CHECK_THROWS_AS(torus_involution_dim(14, 3), std::invalid_argument);
  CHECK_THROWS_AS(torus_involution_dim(2, 4), std::invalid_argument);
}
