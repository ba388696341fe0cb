#include "ifix/qpoly.hpp"

#include <sstream>

namespace ifix {

QPoly::QPoly(long c) {
  if (c != 0) c_.push_back(Rat(c));
}

QPoly::QPoly(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

QPoly::QPoly(const Int& c) {
  if (c != 0) c_.push_back(Rat(c));
}

QPoly QPoly::q(unsigned k) {
  QPoly p;
  p.c_.assign(k + 1, Rat(0));
  p.c_[k] = 1;
  return p;
}

QPoly QPoly::from_coeffs(std::vector<Rat> coeffs) {
  QPoly p;
  p.c_ = std::move(coeffs);
  for (auto& c : p.c_) c.canonicalize();
  p.trim();
  return p;
}

QPoly QPoly::from_int_coeffs(const std::vector<long>& coeffs) {
  std::vector<Rat> c(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) c[i] = Rat(coeffs[i]);
  return from_coeffs(std::move(c));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int QPoly::degree() const { return static_cast<int>(c_.size()) - 1; }

bool QPoly::is_integral() const {
  for (const auto& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

const Rat& QPoly::coeff(unsigned i) const {
  static const Rat zero(0);
  return i < c_.size() ? c_[i] : zero;
}

const Rat& QPoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading() of zero polynomial");
  return c_.back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

QPoly QPoly::pow(unsigned e) const {
  QPoly r(1);
  QPoly base = *this;
  while (e != 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Rat QPoly::eval(const Int& q) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= q;
    acc += *it;
  }
  return acc;
}

Int QPoly::eval_int(const Int& q) const {
  Rat v = eval(q);
  if (v.get_den() != 1)
    throw std::domain_error("polynomial value is not an integer at q=" +
                            q.get_str());
  return v.get_num();
}

std::optional<QPoly> QPoly::divide_exact(const QPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return QPoly();
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<Rat> rem = c_;
  std::vector<Rat> quot(c_.size() - divisor.c_.size() + 1, Rat(0));
  const Rat& lead = divisor.c_.back();
  for (int i = static_cast<int>(rem.size()) - 1;
       i >= static_cast<int>(divisor.c_.size()) - 1; --i) {
    if (rem[i] == 0) continue;
    Rat f = rem[i] / lead;
    int shift = i - (static_cast<int>(divisor.c_.size()) - 1);
    quot[shift] = f;
    for (size_t j = 0; j < divisor.c_.size(); ++j)
      rem[shift + j] -= f * divisor.c_[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return from_coeffs(std::move(quot));
}

unsigned QPoly::factor_multiplicity(const QPoly& divisor) const {
  if (divisor.degree() < 1) throw std::domain_error("constant divisor");
  unsigned k = 0;
  QPoly cur = *this;
  while (!cur.is_zero()) {
    auto next = cur.divide_exact(divisor);
    if (!next) break;
    cur = std::move(*next);
    ++k;
  }
  return k;
}

QPoly QPoly::compose_qpow(unsigned k) const {
  if (k == 0) throw std::domain_error("compose_qpow(0)");
  if (c_.empty()) return QPoly();
  std::vector<Rat> r((c_.size() - 1) * k + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
  return from_coeffs(std::move(r));
}

std::string QPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeff(i);
    if (c == 0) continue;
    Rat a = c > 0 ? c : Rat(-c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

FactoredOrder& FactoredOrder::operator*=(const FactoredOrder& o) {
  scalar *= o.scalar;
  qpow += o.qpow;
  for (const auto& f : o.factors) mul_factor(f.first, f.second);
  return *this;
}

FactoredOrder& FactoredOrder::mul_factor(const QPoly& f, unsigned m) {
  if (m == 0) return *this;
  for (auto& g : factors) {
    if (g.first == f) {
      g.second += m;
      return *this;
    }
  }
  factors.emplace_back(f, m);
  return *this;
}

QPoly FactoredOrder::expand() const {
  if (scalar == 0) return QPoly();
  QPoly r = QPoly(scalar) * QPoly::q(qpow);
  for (const auto& f : factors) r *= f.first.pow(f.second);
  return r;
}

FactoredOrder FactoredOrder::pprime_part() const {
  FactoredOrder r = *this;
  r.qpow = 0;
  return r;
}

Rat FactoredOrder::value(const Int& q) const {
  Rat v = scalar;
  Int qp;
  mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), qpow);
  v *= qp;
  for (const auto& f : factors) {
    Rat fv = f.first.eval(q);
    for (unsigned i = 0; i < f.second; ++i) v *= fv;
  }
  return v;
}

Int FactoredOrder::value_int(const Int& q) const {
  Rat v = value(q);
  if (v.get_den() != 1)
    throw std::domain_error("factored order not integral at q=" + q.get_str());
  return v.get_num();
}

int FactoredOrder::degree() const {
  int d = static_cast<int>(qpow);
  for (const auto& f : factors) {
    if (f.first.is_zero()) return -1;
    d += f.first.degree() * static_cast<int>(f.second);
  }
  return d;
}

std::string FactoredOrder::str() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() {
    if (!first) os << " * ";
    first = false;
  };
  if (scalar != 1) {
    sep();
    os << scalar.get_str();
  }
  if (qpow > 0) {
    sep();
    os << "q^" << qpow;
  }
  for (const auto& f : factors) {
    sep();
    os << "(" << f.first.str() << ")";
    if (f.second > 1) os << "^" << f.second;
  }
  if (first) os << "1";
  return os.str();
}

int compare_pow(const Int& a, unsigned long x, const Int& b, unsigned long y) {
  Int ax, by;
  mpz_pow_ui(ax.get_mpz_t(), a.get_mpz_t(), x);
  mpz_pow_ui(by.get_mpz_t(), b.get_mpz_t(), y);
  return cmp(ax, by);
}

}  // namespace ifix
