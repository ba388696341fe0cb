#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "ifix/rootdata.hpp"

using namespace ifix;

namespace {

WeylGroup& wg(Family f) {
  static std::map<Family, WeylGroup> cache;
  auto it = cache.find(f);
  if (it == cache.end()) {
    unsigned rank = 0;
    switch (f) {
      case Family::G2: rank = 2; break;
      case Family::F4: rank = 4; break;
      case Family::E6: rank = 6; break;
      case Family::E7: rank = 7; break;
      default: break;
    }
    it = cache.emplace(f, WeylGroup(RootSystem::build(f, rank))).first;
  }
  return it->second;
}

QPoly cyclo_quotient(const QPoly& num, const QPoly& den) {
  auto q = num.divide_exact(den);
  REQUIRE(q.has_value());
  return *q;
}

}  // namespace

TEST_CASE("root counts and highest roots") {
  struct Row {
    Family f;
    unsigned rank, nroots;
    std::vector<int> theta;
  };
  std::vector<Row> rows = {
      {Family::A, 2, 6, {1, 1}},
      {Family::B, 4, 32, {1, 2, 2, 2}},
      {Family::C, 4, 32, {2, 2, 2, 1}},
      {Family::D, 5, 40, {1, 2, 2, 1, 1}},
      {Family::G2, 2, 12, {3, 2}},
      {Family::F4, 4, 48, {2, 3, 4, 2}},
      {Family::E6, 6, 72, {1, 2, 2, 3, 2, 1}},
      {Family::E7, 7, 126, {2, 2, 3, 4, 3, 2, 1}},
  };
  for (const auto& r : rows) {
    auto rs = RootSystem::build(r.f, r.rank);
    CAPTURE(family_to_string(r.f));
    CHECK(rs.n_roots() == r.nroots);
    const Coord& th = rs.root(rs.highest_root());
    for (unsigned i = 0; i < r.rank; ++i) CHECK(th[i] == r.theta[i]);
    // simple root i sits at index i
    for (unsigned i = 0; i < r.rank; ++i) {
      Coord e{};
      e[i] = 1;
      CHECK(rs.root_index(e) == i);
    }
    // symmetrized Cartan matrix is symmetric
    for (unsigned i = 0; i < r.rank; ++i) {
      Coord ei{};
      ei[i] = 1;
      for (unsigned j = 0; j < r.rank; ++j) {
        Coord ej{};
        ej[j] = 1;
        CHECK(rs.bilinear(ei, ej) == rs.bilinear(ej, ei));
      }
    }
  }
}

TEST_CASE("reflections are involutions of length one") {
  for (Family f : {Family::G2, Family::F4, Family::E6}) {
    auto rs = RootSystem::build(f, 0);
    for (unsigned i = 0; i < rs.rank(); ++i) {
      const auto& s = rs.simple_reflection(i);
      CHECK(rs.length(s) == 1);
      CHECK(rs.compose(s, s) == rs.identity_perm());
    }
  }
}

TEST_CASE("group orders") {
  CHECK(wg(Family::G2).order() == 12);
  CHECK(wg(Family::F4).order() == 1152);
  CHECK(wg(Family::E6).order() == 51840);
  CHECK(WeylGroup(RootSystem::build(Family::A, 2)).order() == 6);
  CHECK(WeylGroup(RootSystem::build(Family::B, 4)).order() == 384);
  CHECK(WeylGroup(RootSystem::build(Family::D, 5)).order() == 1920);
}

TEST_CASE("longest word") {
  struct Row {
    Family f;
    unsigned len;
    bool minus_one;
  };
  for (auto [f, len, minus_one] : std::vector<Row>{{Family::G2, 6, true},
                                                   {Family::F4, 24, true},
                                                   {Family::E6, 36, false}}) {
    auto& w = wg(f);
    auto w0 = w.longest_word();
    CAPTURE(family_to_string(f));
    CHECK(w.root_system().length(w0) == len);
    CHECK(len == w.root_system().n_pos());
    auto m = w.root_system().matrix_of(w0);
    bool is_minus = true;
    for (unsigned i = 0; i < w.root_system().rank(); ++i)
      for (unsigned j = 0; j < w.root_system().rank(); ++j)
        is_minus &= (m[i][j] == (i == j ? -1 : 0));
    CHECK(is_minus == minus_one);
  }
  // E6: w0 = -tau with tau the diagram flip
  auto& e6 = wg(Family::E6);
  auto w0 = e6.longest_word();
  auto tau = e6.diagram_symmetry();
  CHECK(tau == std::vector<unsigned>{5, 1, 4, 3, 2, 0});
  const auto& rs = e6.root_system();
  for (unsigned i = 0; i < 6; ++i)
    CHECK(w0[i] == rs.negate(tau[i]));
}

TEST_CASE("conjugacy classes") {
  struct Row {
    Family f;
    size_t nclasses;
  };
  for (auto [f, nclasses] : std::vector<Row>{
           {Family::G2, 6}, {Family::F4, 25}, {Family::E6, 25}}) {
    auto& w = wg(f);
    const auto& cls = w.classes();
    CAPTURE(family_to_string(f));
    CHECK(cls.size() == nclasses);
    size_t total = 0;
    for (const auto& c : cls) total += c.size;
    CHECK(total == w.order());
    // class 0 is the identity
    CHECK(cls[0].size == 1);
    CHECK(cls[0].rep == w.root_system().identity_perm());
    // each size divides the group order
    for (const auto& c : cls) CHECK(w.order() % c.size == 0);
    // class_of(rep) round-trips
    for (size_t i = 0; i < cls.size(); ++i)
      CHECK(w.class_of(w.key_of(cls[i].rep)) == i);
  }
}

TEST_CASE("perm round trip through keys") {
  auto& e6 = wg(Family::E6);
  const auto& rs = e6.root_system();
  auto w = rs.identity_perm();
  for (unsigned step = 0; step < 40; ++step) {
    w = rs.compose(w, rs.simple_reflection(step % 6));
    CHECK(e6.perm_of(e6.key_of(w)) == w);
  }
}

TEST_CASE("parabolic and reflection subgroups") {
  auto& g2 = wg(Family::G2);
  CHECK(g2.parabolic_weyl({1}).keys.size() == 2);
  CHECK(g2.reflection_subgroup({1, 0}).keys.size() == 4);

  auto& f4 = wg(Family::F4);
  CHECK(f4.parabolic_weyl({2, 3}).keys.size() == 4);
  CHECK(f4.parabolic_weyl({1}).keys.size() == 48);
  CHECK(f4.reflection_subgroup({0, 2, 3, 4}).keys.size() == 96);
  CHECK(f4.reflection_subgroup({1, 2, 3, 0}).keys.size() == 384);

  auto& e6 = wg(Family::E6);
  CHECK(e6.parabolic_weyl({2}).keys.size() == 720);
  CHECK(e6.parabolic_weyl({1, 6}).keys.size() == 192);
  CHECK(e6.reflection_subgroup({2, 3, 4, 5, 0}).keys.size() == 1920);
  CHECK(e6.reflection_subgroup({0, 1, 3, 4, 5, 6}).keys.size() == 1440);
}

TEST_CASE("index polynomials") {
  auto& g2 = wg(Family::G2);
  QPoly n1 = g2.parabolic_index_poly({1}, false);
  QPoly n2 = g2.parabolic_index_poly({2}, false);
  QPoly expect = cyclo_quotient(QPoly::q(6) - QPoly(1), QPoly::q() - QPoly(1));
  CHECK(n1 == expect);
  CHECK(n2 == expect);
  QPoly borel = g2.parabolic_index_poly({1, 2}, false);
  CHECK(borel.eval(Int(1)) == Rat(12));
  CHECK(borel.degree() == 6);

  auto& f4 = wg(Family::F4);
  QPoly n23 = f4.parabolic_index_poly({2, 3}, false);
  QPoly num = (QPoly::q(12) - QPoly(1)) * (QPoly::q(8) - QPoly(1)) *
              (QPoly::q(4) + QPoly::q(2) + QPoly(1));
  QPoly den = (QPoly::q() - QPoly(1)) * (QPoly::q() - QPoly(1));
  CHECK(n23 == cyclo_quotient(num, den));
  CHECK(n23.eval(Int(1)) == Rat(288));

  auto& e6 = wg(Family::E6);
  QPoly nE6 = e6.parabolic_index_poly({2}, false);
  QPoly expectE6 = (QPoly::q(6) + QPoly::q(3) + QPoly(1)) *
                   (QPoly::q(6) + QPoly(1)) * (QPoly::q(4) + QPoly(1)) *
                   (QPoly::q(3) + QPoly(1)) *
                   (QPoly::q(2) + QPoly::q(1) + QPoly(1));
  CHECK(nE6 == expectE6);

  // untwisted two-node case against the order-formula quotient
  QPoly n16 = e6.parabolic_index_poly({1, 6}, false);
  QPoly numE6 = QPoly(1), denE6 = QPoly(1);
  for (int d : {2, 5, 6, 8, 9, 12}) numE6 *= QPoly::q(d) - QPoly(1);
  for (int d : {1, 1, 2, 4, 4, 6}) denE6 *= QPoly::q(d) - QPoly(1);
  CHECK(n16 == cyclo_quotient(numE6, denE6));
  CHECK(n16.eval(Int(1)) == Rat(270));
}

TEST_CASE("twisted index polynomials") {
  auto& e6 = wg(Family::E6);
  QPoly n16 = e6.parabolic_index_poly({1, 6}, true);
  CHECK(n16.degree() == 24);
  // every coefficient counts cosets, so they are nonnegative integers
  CHECK(n16.is_integral());
  for (int k = 0; k <= n16.degree(); ++k) CHECK(n16.coeff(unsigned(k)) >= 0);
  // constant and top coefficients come from the two tau-fixed extreme cosets
  CHECK(n16.coeff(0) == 1);
  CHECK(n16.coeff(24) == 1);
  QPoly n2 = e6.parabolic_index_poly({2}, true);
  CHECK(n2.degree() == 21);
  CHECK(n2.coeff(0) == 1);
}

TEST_CASE("torus polynomials") {
  auto& g2 = wg(Family::G2);
  auto sc = g2.sigma_classes(false);
  REQUIRE(sc.size() == 6);
  std::multiset<std::string> polys;
  for (const auto& s : sc) {
    CHECK(s.torus.degree() == 2);
    polys.insert(s.torus.str());
  }
  QPoly q = QPoly::q();
  std::multiset<std::string> expect = {
      ((q - QPoly(1)) * (q - QPoly(1))).str(),
      ((q + QPoly(1)) * (q + QPoly(1))).str(),
      ((q - QPoly(1)) * (q + QPoly(1))).str(),
      ((q - QPoly(1)) * (q + QPoly(1))).str(),
      (QPoly::q(2) + q + QPoly(1)).str(),
      (QPoly::q(2) - q + QPoly(1)).str(),
  };
  CHECK(polys == expect);
  // identity class: (q-1)^rank, relative rank = rank
  CHECK(sc[0].torus == (q - QPoly(1)) * (q - QPoly(1)));
  CHECK(sc[0].rel_rank == 2);

  auto& e6 = wg(Family::E6);
  auto sct = e6.sigma_classes(true);
  QPoly qp1 = q + QPoly(1);
  QPoly e6id = qp1;
  for (int i = 0; i < 5; ++i) e6id *= qp1;
  CHECK(sct[0].torus == e6id);  // class of the identity, twisted by -1
  CHECK(sct[0].rel_rank == 6);
  for (const auto& s : sct) CHECK(s.torus.degree() == 6);

  auto scu = e6.sigma_classes(false);
  for (const auto& s : scu) CHECK(s.torus.degree() == 6);
  // det(q - w) summed over the whole group is |W| q^rank, because the
  // exterior powers of the reflection representation have no invariants.
  // The same holds for the -1-twisted sum.  Checked at q = 2.
  const auto& cls = e6.classes();
  for (bool tw : {false, true}) {
    auto sc2 = e6.sigma_classes(tw);
    Rat total(0);
    for (size_t i = 0; i < cls.size(); ++i)
      total += Rat(long(cls[i].size)) * sc2[i].torus.eval(Int(2));
    CHECK(total == Rat(51840L * 64));
  }
}

TEST_CASE("class counts against subgroups") {
  auto& g2 = wg(Family::G2);
  auto sub = g2.reflection_subgroup({1, 0});
  auto counts = g2.class_counts(sub, nullptr);
  size_t total = 0;
  for (size_t c : counts) total += c;
  CHECK(total == 4);
  CHECK(counts[0] == 1);  // identity

  auto w0 = g2.longest_word();
  auto shifted = g2.class_counts(sub, &w0);
  total = 0;
  for (size_t c : shifted) total += c;
  CHECK(total == 4);
}

TEST_CASE("e7 enumeration") {
  auto& e7 = wg(Family::E7);
  CHECK(e7.order() == 2903040);

  auto w0 = e7.longest_word();
  auto m = e7.root_system().matrix_of(w0);
  for (unsigned i = 0; i < 7; ++i)
    for (unsigned j = 0; j < 7; ++j)
      CHECK(m[i][j] == (i == j ? -1 : 0));

  CHECK(e7.parabolic_weyl({2}).keys.size() == 5040);
  CHECK(e7.reflection_subgroup({2, 3, 4, 5, 6, 7, 0}).keys.size() == 46080);
  CHECK(e7.reflection_subgroup({0, 1, 3, 4, 5, 6, 7}).keys.size() == 40320);
  CHECK(e7.reflection_subgroup({1, 2, 3, 4, 5, 6}).keys.size() == 51840);

  QPoly n2 = e7.parabolic_index_poly({2}, false);
  CHECK(n2.eval(Int(1)) == Rat(576));
  CHECK(n2.degree() == 42);

  const auto& cls = e7.classes();
  CHECK(cls.size() == 60);
  size_t total = 0;
  for (const auto& c : cls) total += c.size;
  CHECK(total == 2903040);

  auto sc = e7.sigma_classes(false);
  for (const auto& s : sc) CHECK(s.torus.degree() == 7);
  // identity: (q-1)^7
  QPoly qm1 = QPoly::q() - QPoly(1);
  QPoly id7 = qm1;
  for (int i = 0; i < 6; ++i) id7 *= qm1;
  CHECK(sc[0].torus == id7);
  CHECK(sc[0].rel_rank == 7);
}
