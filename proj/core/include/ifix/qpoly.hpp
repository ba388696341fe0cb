#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ifix {

using Int = mpz_class;
using Rat = mpq_class;

// Dense univariate polynomial in q with exact rational coefficients.
//
// Group-order polynomials and fixed-point counts are integral; the rational
// coefficient type exists because a few class-size quotients are half-integral
// as polynomials while still integer-valued at every admissible q.  Use
// is_integral() where a contract requires integer coefficients.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);
  explicit QPoly(const Rat& c);
  explicit QPoly(const Int& c);

  // The monomial q^k.
  static QPoly q(unsigned k = 1);
  // Coefficient vector, index i = coefficient of q^i.
  static QPoly from_coeffs(std::vector<Rat> coeffs);
  static QPoly from_int_coeffs(const std::vector<long>& coeffs);

  // -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return c_.empty(); }
  bool is_integral() const;
  const Rat& coeff(unsigned i) const;
  const Rat& leading() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  QPoly pow(unsigned e) const;

  // Horner evaluation at an exact integer point.
  Rat eval(const Int& q) const;
  // eval() plus an integrality check; throws std::domain_error on failure.
  Int eval_int(const Int& q) const;

  // Quotient if the division is exact (zero remainder), otherwise nullopt.
  std::optional<QPoly> divide_exact(const QPoly& divisor) const;
  // Largest k with divisor^k | *this (0 if divisor does not divide).
  unsigned factor_multiplicity(const QPoly& divisor) const;

  // Substitute q -> q^k.
  QPoly compose_qpow(unsigned k) const;

  std::string str() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// A group order kept in factored shape: scalar * q^qpow * prod f_i^{m_i}.
//
// The scalar is 1 for every order in the catalogue except a handful of
// involution centralizers that are twice a monic polynomial.
struct FactoredOrder {
  Rat scalar = 1;
  unsigned qpow = 0;
  std::vector<std::pair<QPoly, unsigned>> factors;

  FactoredOrder() = default;
  explicit FactoredOrder(const Rat& s) : scalar(s) {}

  FactoredOrder& operator*=(const FactoredOrder& o);
  friend FactoredOrder operator*(FactoredOrder a, const FactoredOrder& b) {
    return a *= b;
  }
  FactoredOrder& mul_factor(const QPoly& f, unsigned m = 1);

  // Full product as a polynomial.
  QPoly expand() const;
  // Same order with the q-power part removed (the p'-part in the intended
  // use, where q is a power of the defining characteristic p).
  FactoredOrder pprime_part() const;

  Rat value(const Int& q) const;
  Int value_int(const Int& q) const;
  int degree() const;

  std::string str() const;
};

// Exact comparison a^x vs b^y for nonnegative big integers (a, b >= 1).
// Used for claims of the form ifix > n^alpha with alpha = y/x rational:
// ifix > n^(y/x)  <=>  ifix^x > n^y.
int compare_pow(const Int& a, unsigned long x, const Int& b, unsigned long y);

}  // namespace ifix
