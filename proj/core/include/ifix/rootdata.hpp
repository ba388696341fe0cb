#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ifix/qpoly.hpp"

namespace ifix {

// Irreducible root system families, Bourbaki numbering throughout.
enum class Family : uint8_t { A, B, C, D, G2, F4, E6, E7 };

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

// Maximum supported rank (E7 is the largest group we ever enumerate).
inline constexpr unsigned kMaxRank = 8;

using Coord = std::array<int16_t, kMaxRank>;

// A root system with all roots expressed in simple-root coordinates.
// Roots are indexed with the simple roots first (0..rank-1), then the
// remaining positive roots by increasing height (ties broken
// lexicographically), then the negatives mirrored: root n_pos + i = -root i.
class RootSystem {
 public:
  using Perm = std::vector<uint8_t>;

  static RootSystem build(Family f, unsigned rank);

  Family family() const { return family_; }
  unsigned rank() const { return rank_; }
  unsigned n_roots() const { return static_cast<unsigned>(roots_.size()); }
  unsigned n_pos() const { return n_roots() / 2; }
  const Coord& root(unsigned i) const { return roots_[i]; }
  int cartan(unsigned i, unsigned j) const { return cartan_[i][j]; }

  // Index of the root with the given coordinates; throws if not a root.
  unsigned root_index(const Coord& c) const;
  unsigned negate(unsigned i) const {
    return i < n_pos() ? i + n_pos() : i - n_pos();
  }
  // The highest root (index among positives).
  unsigned highest_root() const { return highest_; }

  // Symmetric bilinear form (integer normalization, short roots norm 2).
  long bilinear(const Coord& a, const Coord& b) const;
  // Pairing <a, b_check> = 2(a,b)/(b,b); exact.
  long pairing(const Coord& a, unsigned root_b) const;

  // The reflection in the given root as a permutation of all roots.
  Perm reflection(unsigned root) const;
  const Perm& simple_reflection(unsigned i) const { return simple_refl_[i]; }

  // Number of positive roots sent negative by w.
  unsigned length(const Perm& w) const;

  // Rank x rank matrix of w on the root lattice (columns = images of the
  // simple roots).
  std::array<std::array<long, kMaxRank>, kMaxRank> matrix_of(
      const Perm& w) const;

  // |det(q M - I)| as a polynomial with positive leading coefficient, where
  // M is the matrix of w, optionally negated (the twist used for the
  // quasi-split unitary form of E6).
  QPoly torus_poly(const Perm& w, bool negate_matrix) const;

  Perm identity_perm() const;
  Perm compose(const Perm& a, const Perm& b) const;  // (a b)(x) = a(b(x))
  Perm inverse(const Perm& a) const;

 private:
  Family family_;
  unsigned rank_ = 0;
  std::vector<Coord> roots_;
  std::array<std::array<int, kMaxRank>, kMaxRank> cartan_{};
  std::array<int, kMaxRank> sym_{};  // symmetrizers d_i = (a_i, a_i)/2
  std::vector<Perm> simple_refl_;
  unsigned highest_ = 0;
  // packed-coordinate -> root index lookup, sorted
  std::vector<std::pair<uint64_t, uint32_t>> index_;
  static uint64_t pack(const Coord& c, unsigned rank);
};

// A conjugacy class of a Weyl group.  Classes are ordered by (size,
// lexicographically least member), which is a total deterministic order.
struct ConjClass {
  uint64_t min_key = 0;
  size_t size = 0;
  RootSystem::Perm rep;  // the least member
};

// Per-class data used by the twisted fixed point formula:
// torus order polynomial and its (q - eps)-multiplicity.
struct SigmaClass {
  QPoly torus;
  unsigned rel_rank = 0;
};

// A finite Weyl group, fully enumerated with exact conjugacy classes.
//
// Elements are permutations of the roots; an element is identified by the
// images of the simple roots, packed into a 64-bit key.  Enumeration and
// class partition are deterministic.
class WeylGroup {
 public:
  using Perm = RootSystem::Perm;

  // Enumerates the group; throws if the order would exceed the budget.
  explicit WeylGroup(RootSystem rs, size_t budget = 3'000'000);

  const RootSystem& root_system() const { return rs_; }
  size_t order() const { return keys_.size(); }

  uint64_t key_of(const Perm& w) const;
  Perm perm_of(uint64_t key) const;
  bool contains(uint64_t key) const;

  // Conjugacy classes (computed on first use, then cached).
  const std::vector<ConjClass>& classes();
  // Class index of an element given by key; throws for non-members.
  uint16_t class_of(uint64_t key);

  // Longest element w0.
  Perm longest_word() const;

  // Closure of the given generators; throws if it exceeds the budget.
  // Returned keys are sorted; perms align with keys.
  struct SubgroupData {
    std::vector<uint64_t> keys;
    std::vector<Perm> perms;
  };
  SubgroupData subgroup_closure(const std::vector<Perm>& gens,
                                size_t budget = 3'000'000) const;

  // Weyl subgroup of the parabolic obtained by deleting the listed nodes
  // (1-based Bourbaki labels), i.e. generated by the remaining simple
  // reflections.
  SubgroupData parabolic_weyl(const std::vector<unsigned>& removed_nodes) const;

  // Reflection subgroup generated by a subset of {simple roots} + {lowest
  // root}; node label 0 denotes the affine node (reflection in the highest
  // root).
  SubgroupData reflection_subgroup(const std::vector<unsigned>& nodes) const;

  // Sum of q^{l(w)} over minimal coset representatives of W / W_P, where
  // W_P is generated by the simple reflections of the parabolic obtained by
  // removing `removed_nodes`.  With `twisted`, only cosets stable under the
  // order-2 diagram symmetry are counted (E6 only); this is the number of
  // F_q-points of G/P for the corresponding finite form.
  QPoly parabolic_index_poly(const std::vector<unsigned>& removed_nodes,
                             bool twisted) const;

  // Per-class torus polynomial |det(qM - I)| (or the negated-matrix variant
  // when twisted) and multiplicity of (q - eps), eps = -1 iff twisted.
  std::vector<SigmaClass> sigma_classes(bool twisted);

  // counts[i] = #{x in sub : x * wstar lies in class i}; pass wstar = null
  // for the untwisted case (wstar = identity).
  std::vector<size_t> class_counts(const SubgroupData& sub, const Perm* wstar);

  // The order-2 diagram symmetry as a permutation of node indices 0..rank-1
  // (E6/A/D families); identity otherwise.
  std::vector<unsigned> diagram_symmetry() const;

 private:
  void compute_classes();
  uint32_t id_of(uint64_t key) const;

  RootSystem rs_;
  std::vector<uint64_t> keys_;  // sorted
  std::vector<uint16_t> class_of_;
  std::vector<ConjClass> classes_;
  bool classes_done_ = false;
};

}  // namespace ifix
