#include "ifix/lieorders.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace ifix {

namespace {

// q^d - eps
QPoly cyc(unsigned d, int eps) { return QPoly::q(d) - QPoly(eps); }

FactoredOrder chev(unsigned qpow, const std::vector<std::pair<unsigned, int>>& fs) {
  FactoredOrder f;
  f.qpow = qpow;
  for (auto [d, eps] : fs) f.mul_factor(cyc(d, eps));
  return f;
}

struct NameParts {
  std::string base;   // leading letters
  unsigned num = 0;   // trailing number (0 if none)
  int sign = 0;       // +1 / -1 / 0 if no sign suffix
};

bool split_name(const std::string& name, NameParts& out) {
  size_t i = 0;
  // allow a single leading digit for the twisted types (2E6, 3D4, ...)
  if (i < name.size() && std::isdigit(name[i]) && i + 1 < name.size() &&
      std::isalpha(name[i + 1]))
    ++i;
  size_t letters_end = i;
  while (letters_end < name.size() && std::isalpha(name[letters_end]))
    ++letters_end;
  if (letters_end == i && i == 0) return false;
  out.base = name.substr(0, letters_end);
  size_t j = letters_end;
  out.num = 0;
  while (j < name.size() && std::isdigit(name[j])) {
    out.num = out.num * 10 + unsigned(name[j] - '0');
    ++j;
  }
  out.sign = 0;
  if (j < name.size() && (name[j] == '+' || name[j] == '-')) {
    out.sign = name[j] == '+' ? 1 : -1;
    ++j;
  }
  return j == name.size();
}

// Generic order of the named group, or nullopt.
std::optional<FactoredOrder> lookup_order(const std::string& name) {
  // fixed exceptional names first (they carry their digits)
  if (name == "G2") return chev(6, {{2, 1}, {6, 1}});
  if (name == "F4") return chev(24, {{2, 1}, {6, 1}, {8, 1}, {12, 1}});
  if (name == "E6" || name == "E6+")
    return chev(36, {{2, 1}, {5, 1}, {6, 1}, {8, 1}, {9, 1}, {12, 1}});
  if (name == "2E6" || name == "E6-")
    return chev(36, {{2, 1}, {5, -1}, {6, 1}, {8, 1}, {9, -1}, {12, 1}});
  if (name == "E7")
    return chev(63,
                {{2, 1}, {6, 1}, {8, 1}, {10, 1}, {12, 1}, {14, 1}, {18, 1}});
  if (name == "E8")
    return chev(120, {{2, 1},
                      {8, 1},
                      {12, 1},
                      {14, 1},
                      {18, 1},
                      {20, 1},
                      {24, 1},
                      {30, 1}});
  if (name == "3D4") {
    FactoredOrder f;
    f.qpow = 12;
    f.mul_factor(QPoly::q(8) + QPoly::q(4) + QPoly(1));
    f.mul_factor(cyc(6, 1));
    f.mul_factor(cyc(2, 1));
    return f;
  }
  if (name == "2B2") return chev(2, {{2, -1}, {1, 1}});
  if (name == "2G2") return chev(3, {{3, -1}, {1, 1}});
  if (name == "2F4") return chev(12, {{6, -1}, {4, 1}, {3, -1}, {1, 1}});

  NameParts p;
  if (!split_name(name, p) || p.num == 0) return std::nullopt;
  unsigned n = p.num;
  if ((p.base == "SL" || p.base == "SU" || p.base == "GL" || p.base == "GU") &&
      n >= 2 && n <= 9) {
    bool unitary = (p.base == "SU" || p.base == "GU") ? (p.sign != 1)
                                                      : (p.sign == -1);
    bool full = p.base == "GL" || p.base == "GU";
    std::vector<std::pair<unsigned, int>> fs;
    for (unsigned i = full ? 1 : 2; i <= n; ++i)
      fs.push_back({i, unitary && (i % 2 == 1) ? -1 : 1});
    return chev(n * (n - 1) / 2, fs);
  }
  if (p.base == "Sp" && n % 2 == 0 && n >= 4 && n <= 16 && p.sign == 0) {
    unsigned m = n / 2;
    std::vector<std::pair<unsigned, int>> fs;
    for (unsigned i = 1; i <= m; ++i) fs.push_back({2 * i, 1});
    return chev(m * m, fs);
  }
  if ((p.base == "SO" || p.base == "Omega") && n >= 3 && n <= 16) {
    if (n % 2 == 1) {
      if (p.sign != 0) return std::nullopt;
      unsigned m = (n - 1) / 2;
      std::vector<std::pair<unsigned, int>> fs;
      for (unsigned i = 1; i <= m; ++i) fs.push_back({2 * i, 1});
      return chev(m * m, fs);
    }
    if (p.sign == 0) return std::nullopt;
    unsigned m = n / 2;
    std::vector<std::pair<unsigned, int>> fs;
    fs.push_back({m, p.sign});
    for (unsigned i = 1; i + 1 <= m; ++i) fs.push_back({2 * i, 1});
    return chev(m * (m - 1), fs);
  }
  return std::nullopt;
}

// Centre order of the simply connected form; 1 where not applicable.
Int centre_for(const std::string& name, const Int& q) {
  if (name == "E6" || name == "E6+") return gcd(Int(3), Int(q - 1));
  if (name == "2E6" || name == "E6-") return gcd(Int(3), Int(q + 1));
  if (name == "E7") return gcd(Int(2), Int(q - 1));
  NameParts p;
  if (!split_name(name, p) || p.num == 0) return 1;
  bool minus = p.sign == -1;
  if (p.base == "SL" || p.base == "SU") {
    bool unitary = p.base == "SU" || minus;
    return gcd(Int(p.num), Int(unitary ? Int(q + 1) : Int(q - 1)));
  }
  if (p.base == "GL" || p.base == "GU") {
    bool unitary = p.base == "GU" || minus;
    return unitary ? Int(q + 1) : Int(q - 1);
  }
  if (p.base == "Sp") return gcd(Int(2), Int(q - 1));
  if (p.base == "SO" || p.base == "Omega") {
    if (p.num % 2 == 1) return gcd(Int(2), Int(q - 1));
    Int qm;
    mpz_pow_ui(qm.get_mpz_t(), q.get_mpz_t(), p.num / 2);
    return gcd(Int(4), Int(qm - p.sign));
  }
  return 1;
}

// Quotient names: returns (base name, divide-by-centre?).
std::optional<std::pair<std::string, bool>> resolve_name(
    const std::string& name) {
  if (lookup_order(name)) return {{name, false}};
  if (name == "Sz") return {{"2B2", false}};
  if (name == "Ree") return {{"2G2", false}};
  NameParts p;
  if (!split_name(name, p)) return std::nullopt;
  std::string sign = p.sign == 1 ? "+" : p.sign == -1 ? "-" : "";
  auto quot = [&](const std::string& base) {
    return std::make_optional(
        std::make_pair(base + std::to_string(p.num) + sign, true));
  };
  if (p.base == "PSL") return quot("SL");
  if (p.base == "PSU") return quot("SU");
  if (p.base == "PGL") return quot("GL");
  if (p.base == "PGU") return quot("GU");
  if (p.base == "PSp") return quot("Sp");
  if (p.base == "POmega") return quot("SO");
  if (p.base == "L") return quot(p.sign == -1 ? "SU" : "SL");
  if (p.base == "U") {
    p.sign = 0;
    return std::make_optional(
        std::make_pair("SU" + std::to_string(p.num), true));
  }
  return std::nullopt;
}

Int sqrt_exact(const Int& x) {
  if (mpz_perfect_square_p(x.get_mpz_t()) == 0)
    throw std::domain_error("not a perfect square: " + x.get_str());
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

// Recursive-descent parser over a product grammar.  In symbolic mode the
// result is a FactoredOrder; in numeric mode everything is evaluated at a
// fixed q (allowing quotient names, division and r2q/r3q terms).
struct Parser {
  const std::string& s;
  size_t i = 0;
  const Int* qval = nullptr;  // numeric mode if set

  explicit Parser(const std::string& str, const Int* q = nullptr)
      : s(str), qval(q) {}

  void skip() {
    while (i < s.size() && std::isspace(s[i])) ++i;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("bad order expression '" + s + "' at " +
                                std::to_string(i) + ": " + why);
  }
  unsigned long read_uint() {
    skip();
    if (i >= s.size() || !std::isdigit(s[i])) fail("expected integer");
    unsigned long v = 0;
    while (i < s.size() && std::isdigit(s[i])) v = v * 10 + (s[i++] - '0');
    return v;
  }
  std::string read_name() {
    skip();
    size_t start = i;
    if (std::isdigit(s[i])) ++i;  // twisted-type prefix digit
    while (i < s.size() && (std::isalnum(s[i]))) ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    return s.substr(start, i - start);
  }

  // Parenthesized sum of integer multiples of q-powers (and, in numeric
  // mode, of r2q / r3q).  The opening '(' has been consumed.
  // Returns the symbolic poly; in numeric mode val receives the value.
  QPoly read_poly(Rat* val) {
    QPoly p;
    Rat v(0);
    bool first = true;
    while (true) {
      char c = peek();
      if (c == ')') {
        ++i;
        break;
      }
      long sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++i;
        c = peek();
      } else if (!first) {
        fail("expected '+', '-' or ')'");
      }
      first = false;
      long coef = 1;
      bool have_coef = false;
      if (std::isdigit(c)) {
        coef = long(read_uint());
        have_coef = true;
        c = peek();
      }
      if (c == 'q' && !(i + 1 < s.size() && std::isalnum(s[i + 1]))) {
        ++i;
        unsigned k = 1;
        if (peek() == '^') {
          ++i;
          k = unsigned(read_uint());
        }
        p += QPoly(sign * coef) * QPoly::q(k);
        if (qval) v += Rat(sign * coef) * QPoly::q(k).eval(*qval);
      } else if (c == 'r') {
        if (!qval) fail("square root term needs numeric context");
        size_t start = i;
        while (i < s.size() && std::isalnum(s[i])) ++i;
        std::string nm = s.substr(start, i - start);
        Int mult;
        if (nm == "r2q")
          mult = 2;
        else if (nm == "r3q")
          mult = 3;
        else
          fail("unknown term " + nm);
        v += Rat(sign * coef) * Rat(sqrt_exact(Int(mult * *qval)));
      } else if (have_coef) {
        p += QPoly(sign * coef);
        if (qval) v += sign * coef;
      } else {
        fail("expected term");
      }
    }
    if (val) *val = v;
    return p;
  }

  // One atom with optional exponent, multiplied into the accumulators.
  void apply_factor(FactoredOrder& acc, Rat& num, bool invert) {
    char c = peek();
    FactoredOrder part;
    Rat value(1);
    if (c == '(') {
      ++i;
      Rat v;
      QPoly p = read_poly(qval ? &v : nullptr);
      if (qval)
        value = v;
      else
        part.mul_factor(p);
    } else if (c == 'q' && (i + 1 >= s.size() || !std::isalnum(s[i + 1]))) {
      ++i;
      unsigned k = 1;
      if (peek() == '^') {
        ++i;
        k = unsigned(read_uint());
      }
      part.qpow = k;
      if (qval) {
        Int qk;
        mpz_pow_ui(qk.get_mpz_t(), qval->get_mpz_t(), k);
        value = Rat(qk);
      }
    } else if (std::isdigit(c) &&
               !(i + 1 < s.size() && std::isalpha(s[i + 1]))) {
      unsigned long n = read_uint();
      part.scalar = Rat(long(n));
      value = Rat(long(n));
    } else if (std::isalpha(c) || std::isdigit(c)) {
      std::string name = read_name();
      auto resolved = resolve_name(name);
      if (!resolved) fail("unknown group name " + name);
      auto [base, quotient] = *resolved;
      FactoredOrder ord = *lookup_order(base);
      Int at = qval ? *qval : Int(0);
      bool at_known = qval != nullptr;
      if (peek() == '(') {
        ++i;
        if (peek() == 'q') {
          ++i;
          unsigned k = 1;
          if (peek() == '^') {
            ++i;
            k = unsigned(read_uint());
          }
          if (peek() != ')') fail("expected ')'");
          ++i;
          if (qval) {
            Int qk;
            mpz_pow_ui(qk.get_mpz_t(), qval->get_mpz_t(), k);
            at = qk;
          } else {
            FactoredOrder comp;
            comp.scalar = ord.scalar;
            comp.qpow = ord.qpow * k;
            for (auto& [f, m] : ord.factors)
              comp.mul_factor(f.compose_qpow(k), m);
            ord = comp;
          }
        } else {
          unsigned long a = read_uint();
          if (peek() != ')') fail("expected ')'");
          ++i;
          at = Int(long(a));
          at_known = true;
        }
      }
      if (at_known) {
        Int v = ord.value_int(at);
        if (quotient) {
          Int z = centre_for(base, at);
          if (v % z != 0) fail("centre does not divide order");
          v /= z;
        }
        if (qval)
          value = Rat(v);
        else
          part.scalar = Rat(v);
      } else {
        if (quotient) fail("quotient name needs a numeric argument");
        part *= ord;
      }
    } else {
      fail("expected factor");
    }

    unsigned long e = 1;
    if (peek() == '^') {
      ++i;
      e = read_uint();
    }
    if (qval) {
      Rat pw(1);
      for (unsigned long t = 0; t < e; ++t) pw *= value;
      if (invert) {
        if (pw == 0) fail("division by zero");
        num /= pw;
      } else {
        num *= pw;
      }
    } else {
      if (invert) fail("division needs numeric context");
      for (unsigned long t = 0; t < e; ++t) acc *= part;
    }
  }

  void run(FactoredOrder& acc, Rat& num) {
    bool invert = false;
    apply_factor(acc, num, false);
    while (true) {
      char c = peek();
      if (c == '\0') break;
      if (c == '*' || c == '.' || c == ':')
        invert = false;
      else if (c == '/')
        invert = true;
      else
        fail("expected separator");
      ++i;
      apply_factor(acc, num, invert);
    }
  }
};

}  // namespace

FactoredOrder group_order(const std::string& name) {
  auto f = lookup_order(name);
  if (!f) throw std::invalid_argument("unknown group name: " + name);
  return *f;
}

bool has_group_order(const std::string& name) {
  return lookup_order(name).has_value();
}

Int center_order(const std::string& name, const Int& q) {
  if (!lookup_order(name))
    throw std::invalid_argument("unknown group name: " + name);
  return centre_for(name, q);
}

FactoredOrder parse_order_expr(const std::string& expr) {
  Parser p(expr);
  FactoredOrder acc;
  Rat num(1);
  p.run(acc, num);
  acc.scalar *= num;
  return acc;
}

Int eval_group_expr(const std::string& expr, const Int& q) {
  Parser p(expr, &q);
  FactoredOrder acc;
  Rat num(1);
  p.run(acc, num);
  if (num.get_den() != 1)
    throw std::domain_error("expression value not integral: " + expr);
  return Int(num.get_num());
}

QPoly class_size(const InvolutionClassRecord& rec) {
  QPoly order = group_order(rec.family).expand();
  auto quot = order.divide_exact(rec.centralizer.expand());
  if (!quot)
    throw std::domain_error("centralizer does not divide the group order (" +
                            rec.family + " " + rec.label + ")");
  return *quot;
}

Int long_root_class_size(char base, unsigned n, int eps, const Int& q) {
  if (q % 2 != 0)
    throw std::invalid_argument("long-root class sizes implemented for even q");
  auto qp = [&](unsigned k) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), k);
    return r;
  };
  if (base == 'S') {
    if (n < 4 || n % 2 != 0)
      throw std::invalid_argument("symplectic rank out of range");
    return Int(qp(n) - 1);
  }
  if (eps != 1 && eps != -1) throw std::invalid_argument("sign required");
  auto eps_pow = [&](unsigned k) { return k % 2 == 0 ? 1 : eps; };
  if (base == 'L') {
    if (n < 2) throw std::invalid_argument("linear dimension out of range");
    Int num = (qp(n - 1) - eps_pow(n - 1)) * (qp(n) - eps_pow(n));
    Int den = q - eps;
    if (num % den != 0) throw std::logic_error("non-exact long-root quotient");
    return Int(num / den);
  }
  if (base == 'O') {
    if (n < 8 || n % 2 != 0)
      throw std::invalid_argument("orthogonal dimension out of range");
    Int num = (qp(n / 2 - 2) + eps) * (qp(n - 2) - 1) * (qp(n / 2) - eps);
    Int den = q * q - 1;
    if (num % den != 0) throw std::logic_error("non-exact long-root quotient");
    return Int(num / den);
  }
  throw std::invalid_argument("unknown classical base");
}

QPoly i2_closed_form(const std::string& key) {
  QPoly q1 = QPoly::q();
  if (key == "2B2") return (QPoly::q(2) + QPoly(1)) * (q1 - QPoly(1));
  if (key == "2G2") return QPoly::q(2) * (QPoly::q(2) - q1 + QPoly(1));
  if (key == "G2:odd")
    return QPoly::q(4) * (QPoly::q(4) + QPoly::q(2) + QPoly(1));
  if (key == "3D4:odd")
    return QPoly::q(8) * (QPoly::q(8) + QPoly::q(4) + QPoly(1));
  if (key == "PGL3+:odd")
    return QPoly::q(2) * (QPoly::q(2) + q1 + QPoly(1));
  if (key == "PGL3-:odd")
    return QPoly::q(2) * (QPoly::q(2) - q1 + QPoly(1));
  if (key == "PGL3+:even")
    return (q1 + QPoly(1)) * (QPoly::q(3) - QPoly(1));
  if (key == "PGL3-:even")
    return (q1 - QPoly(1)) * (QPoly::q(3) + QPoly(1));
  throw std::invalid_argument("no closed-form involution count for " + key);
}

Int central_product_centralizer_bound(const Int& y2prime,
                                      const std::vector<Int>& factor_cents) {
  if (y2prime <= 0)
    throw std::invalid_argument("centre part must be positive");
  Int prod = 1;
  for (const Int& c : factor_cents) {
    if (c <= 0) throw std::invalid_argument("centralizer orders must be > 0");
    prod *= c;
  }
  Int out;
  mpz_cdiv_q(out.get_mpz_t(), prod.get_mpz_t(), y2prime.get_mpz_t());
  return out;
}

}  // namespace ifix
