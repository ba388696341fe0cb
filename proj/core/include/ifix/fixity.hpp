#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ifix/lieorders.hpp"
#include "ifix/rootdata.hpp"

namespace ifix {

// A semisimple involution class of an adjoint exceptional group, described
// by the data the fixed-point engine needs:
//   - pseudo_levi: node labels of the reflection subgroup W_J attached to
//     the connected centralizer (0 = the affine node, i.e. the reflection
//     in the highest root); empty + has_pseudo_levi=false when the class
//     has no such description in the sampled congruence class (those rows
//     carry their fixed-point value as explicit data instead).
//   - centralizer: order expression for the full connected centralizer
//     fixed-point group, e.g. "SL2*Sp6" or "(q-1)*SO10+".
//   - q ranges over q_res mod q_mod (odd characteristic only).
struct InvolutionRecord {
  std::string label;
  bool has_pseudo_levi = false;
  std::vector<unsigned> pseudo_levi;
  std::string centralizer;
  unsigned q_mod = 2;
  unsigned q_res = 1;
};

// Fixed points of semisimple involutions on G/P for one ambient group,
// untwisted or (for E6) twisted.  Owns the Weyl group enumeration and all
// per-class data; parabolic and centralizer subgroup scans are cached.
class ParabolicEngine {
 public:
  ParabolicEngine(Family f, bool twisted);

  Family family() const { return family_; }
  bool twisted() const { return twisted_; }
  WeylGroup& weyl() { return weyl_; }

  // Number of F_q-points of G/P (P = parabolic deleting `removed`).
  const QPoly& index_poly(const std::vector<unsigned>& removed);

  // Exact number of fixed points of the record's class on G/P at q.
  // Throws std::domain_error if q is outside the record's congruence class
  // or the record has no pseudo-Levi data.
  Rat chi_value(const std::vector<unsigned>& removed,
                const InvolutionRecord& rec, const Int& q);

  // chi as a polynomial in q on the record's congruence class, found by
  // exact interpolation; `holdout` extra sample points are checked against
  // the interpolated polynomial and a mismatch throws std::logic_error.
  // Every sample value is checked to be a nonnegative integer.
  QPoly chi_poly(const std::vector<unsigned>& removed,
                 const InvolutionRecord& rec, unsigned holdout = 2);

  // The record describing the identity element (chi = index_poly).
  InvolutionRecord identity_record() const;

 private:
  struct SubCounts {
    size_t order = 0;
    std::vector<size_t> counts;  // per ambient class, w*-shifted
  };
  const SubCounts& parabolic_counts(const std::vector<unsigned>& removed);
  const SubCounts& levi_counts(const std::vector<unsigned>& nodes);
  SubCounts scan(const WeylGroup::SubgroupData& sub);

  Family family_;
  bool twisted_;
  WeylGroup weyl_;
  std::vector<int> sign_;         // epsilon_{T_i} = (-1)^{split rank of T_i}
  std::vector<QPoly> torus_;      // |T_i|(q)
  std::vector<size_t> class_size_;
  std::optional<RootSystem::Perm> wstar_;
  std::map<std::vector<unsigned>, SubCounts> par_cache_;
  std::map<std::vector<unsigned>, SubCounts> levi_cache_;
  std::map<std::vector<unsigned>, QPoly> index_cache_;
};

// a > b^(num/den), exactly (a, b >= 1).
bool exceeds_power(const Int& a, const Int& b, unsigned long num,
                   unsigned long den);
// a >= b^(num/den), exactly.
bool meets_power(const Int& a, const Int& b, unsigned long num,
                 unsigned long den);

// Fixed points of an element class on a coset space by the orbit-counting
// ratio: fix = n * (members of the class meeting the point stabilizer) /
// (ambient class size).  Exact; throws if the result is not integral.
Int fix_count(const Int& n, const Int& class_total, const Int& class_in_stab);

// Exact involution fixity of T acting on the cosets of H when T has a single
// class of involutions: every involution of H lies in that class, so
// ifix = i2_H * n / i2_T.  Throws if the division is not exact.
Int ifix_single_class(const Int& i2_H, const Int& i2_T, const Int& n);

// Lower bound for a maximal-rank (or algebraic-subgroup) coset action: pick
// an involution t of the point stabilizer H0 whose H0-centralizer order is
// at most f(q); then at least |T| / (f(q) |t^T|) points are fixed.  The
// second component is the limiting exponent of that bound, the degree ratio
// (deg|T| - deg f - deg|t^T|) / deg n.
struct MaximalRankBound {
  Int ifix_lb;
  Rat liminf_lb;
};
MaximalRankBound maximal_rank_lower_bound(const FactoredOrder& orderT,
                                          const FactoredOrder& f,
                                          const Int& classT, int deg_classT,
                                          const Int& n, int deg_n,
                                          const Int& q);

// Inputs for the generic almost-simple comparisons: a = an involution class
// size of the socle S of the point stabilizer, b = the largest involution
// class size of T, c = |Aut(S)|, d = |T|.  Degrees n >= d/c.
struct BoundInput {
  Int a, b, c, d;
};

// Real lower bound 1 - (log b - log a)/(log d - log c) on log ifix / log n.
// Throws if c >= d.
double almost_simple_exponent(const BoundInput& in);

// Exact form of almost_simple_exponent(in) > num/den, by integer power
// comparison (no floating point).
bool almost_simple_exceeds(const BoundInput& in, unsigned long num,
                           unsigned long den);

// Exact comparison d^5 a^9 > c^5 b^9, the integer form of
// d^(5/9)/b > c^(5/9)/a.  When true, the almost-simple exponent bound
// exceeds 4/9.  False on degenerate a = 0.
bool abcd_check(const BoundInput& in);

// deg(fix)/deg(n) as an exact rational; both polynomials must be nonzero
// with positive leading coefficients and deg n >= 1.
Rat liminf_exponent(const QPoly& fix, const QPoly& n);

}  // namespace ifix
