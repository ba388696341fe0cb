#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ifix {

// Arithmetic tables for GF(p^k), p^k <= 81.  Elements are encoded as
// integers in [0, q): the base-p digits of the code are the coefficients
// of the residue polynomial, so 0 and 1 are the field's 0 and 1.  The
// modulus is the lexicographically least monic irreducible polynomial of
// degree k, making every table deterministic.  Field axioms are checked
// at construction (exhaustively for q <= 16, on dense samples above).
class FiniteField {
 public:
  FiniteField(unsigned p, unsigned k);

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  unsigned q() const { return q_; }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add(a, neg(b)); }
  // Throws std::domain_error for 0.
  uint8_t inv(uint8_t a) const;
  uint8_t pow(uint8_t a, unsigned long e) const;
  // x -> x^p, the field's generating automorphism.
  uint8_t frobenius(uint8_t a) const { return frob_[a]; }
  // A fixed generator of the multiplicative group (least encoding).
  uint8_t generator() const { return gen_; }

 private:
  void verify() const;

  unsigned p_, k_, q_;
  std::vector<uint8_t> add_, mul_, neg_, inv_, frob_;
  uint8_t gen_;
};

// Row-major square matrix over a small field, dimension <= 4.
struct Mat {
  unsigned d = 0;
  std::array<uint8_t, 16> a{};

  uint8_t& at(unsigned r, unsigned c) { return a[r * d + c]; }
  uint8_t at(unsigned r, unsigned c) const { return a[r * d + c]; }
  bool operator==(const Mat& o) const { return d == o.d && a == o.a; }
  // Lexicographic on the entry bytes; the determinization order.
  bool operator<(const Mat& o) const { return a < o.a; }
};

Mat mat_identity(unsigned d);
Mat mat_mul(const FiniteField& f, const Mat& x, const Mat& y);
// Gaussian elimination; throws std::domain_error if singular.
Mat mat_inverse(const FiniteField& f, const Mat& x);

// A finite matrix group held as an explicit element list, built by
// breadth-first closure of the generators.  Element 0 is the identity;
// indices follow the deterministic BFS discovery order.
class MatGroup {
 public:
  // Throws std::length_error if the closure exceeds cap elements.
  MatGroup(FiniteField field, unsigned dim, std::vector<Mat> generators,
           size_t cap = 100000);

  const FiniteField& field() const { return field_; }
  unsigned dim() const { return dim_; }
  size_t order() const { return elems_.size(); }
  const Mat& element(size_t i) const { return elems_[i]; }
  const std::vector<Mat>& generators() const { return gens_; }

  bool contains(const Mat& m) const;
  // Throws std::out_of_range if absent.
  size_t index_of(const Mat& m) const;
  size_t mul(size_t i, size_t j) const;
  size_t inverse(size_t i) const;
  unsigned element_order(size_t i) const;

  // Ascending indices of the elements of order 2.
  const std::vector<size_t>& involutions() const;
  size_t i2() const { return involutions().size(); }
  // Conjugacy classes of involutions, each ascending, ordered by least
  // member.
  std::vector<std::vector<size_t>> involution_classes() const;

  // Subgroup generated by the seed, as ascending indices.
  std::vector<size_t> closure(const std::vector<size_t>& seed) const;
  // N(<x>) for the least-encoded element x of order m.
  std::vector<size_t> cyclic_normalizer(unsigned m) const;
  // Normalizer of a Sylow p-subgroup (deterministic representative).
  std::vector<size_t> sylow_normalizer(unsigned p) const;

 private:
  FiniteField field_;
  unsigned dim_;
  std::vector<Mat> gens_;
  std::vector<Mat> elems_;
  std::vector<uint32_t> sorted_;  // element ids ordered by matrix bytes
  mutable std::vector<size_t> invols_;
};

// Right-coset action of a matrix group on the cosets of a subgroup,
// with exact fixed-point counting.
class CosetAction {
 public:
  // Verifies that the index set is multiplicatively closed and contains
  // the identity; throws std::invalid_argument otherwise.
  CosetAction(const MatGroup& g, std::vector<size_t> subgroup);

  size_t n() const { return reps_.size(); }
  size_t subgroup_order() const { return sub_.size(); }
  const MatGroup& group() const { return g_; }

  // Fixed cosets of one element.
  size_t fix(size_t element_index) const;
  // Largest fix over the involutions (0 if the group has none).
  size_t ifix() const;

  struct InvolutionClassFix {
    size_t class_size = 0;
    size_t in_subgroup = 0;  // class members lying in the subgroup
    size_t fixed = 0;        // fixed cosets, constant on the class
  };
  std::vector<InvolutionClassFix> class_table() const;

  // Consistency gates: fix is constant on classes, the per-class count
  // identity fix * |t^G| = |t^G meet H| * n holds, and the total pair
  // count equals n * i2(H).
  bool burnside_check() const;

 private:
  const MatGroup& g_;
  std::vector<size_t> sub_;
  std::vector<uint32_t> coset_of_;
  std::vector<size_t> reps_;
};

// Generator data for the built-in groups: "L2(8)", "U3(3)", "Sz(8)".
// Matrices are row-major entry codes in the field encoding above.
struct GeneratorSet {
  std::string id;
  unsigned p = 0, k = 0, dim = 0;
  std::vector<std::vector<unsigned>> matrices;
  size_t expected_order = 0;
};

// Throws std::invalid_argument for unknown ids.
GeneratorSet builtin_group(const std::string& id);
MatGroup build_group(const GeneratorSet& gs, size_t cap = 100000);

}  // namespace ifix
