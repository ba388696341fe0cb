#include "ifix/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace ifix {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over F_p as coefficient vectors, index = degree.
using Poly = std::vector<unsigned>;

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f by monic g.
Poly poly_rem(Poly f, const Poly& g, unsigned p) {
  poly_trim(f);
  while (f.size() >= g.size()) {
    unsigned lead = f.back();
    size_t shift = f.size() - g.size();
    for (size_t i = 0; i < g.size(); ++i)
      f[shift + i] = (f[shift + i] + p * p - lead * g[i] % p % p) % p;
    poly_trim(f);
  }
  return f;
}

bool poly_irreducible(const Poly& f, unsigned p) {
  unsigned k = unsigned(f.size()) - 1;
  // Trial division by every monic polynomial of degree 1..k/2.
  for (unsigned deg = 1; 2 * deg <= k; ++deg) {
    unsigned count = 1;
    for (unsigned i = 0; i < deg; ++i) count *= p;
    for (unsigned code = 0; code < count; ++code) {
      Poly g(deg + 1, 0);
      unsigned c = code;
      for (unsigned i = 0; i < deg; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[deg] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(unsigned p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (k < 1) throw std::invalid_argument("extension degree must be positive");
  unsigned q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  if (q > 81) throw std::invalid_argument("field size capped at 81");
  q_ = q;

  // Least monic irreducible modulus, coefficients compared low-degree first.
  Poly mod;
  if (k == 1) {
    mod = {0, 1};
  } else {
    unsigned count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (unsigned code = 0; code < count && mod.empty(); ++code) {
      Poly f(k + 1, 0);
      unsigned c = code;
      for (unsigned i = 0; i < k; ++i) {
        f[i] = c % p;
        c /= p;
      }
      f[k] = 1;
      if (poly_irreducible(f, p)) mod = f;
    }
    if (mod.empty()) throw std::logic_error("no irreducible modulus found");
  }

  auto decode = [&](unsigned v) {
    Poly f(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
      f[i] = v % p_;
      v /= p_;
    }
    return f;
  };
  auto encode = [&](Poly f) {
    f.resize(k_, 0);
    unsigned v = 0;
    for (unsigned i = k_; i-- > 0;) v = v * p_ + f[i];
    return uint8_t(v);
  };

  add_.resize(size_t(q_) * q_);
  mul_.resize(size_t(q_) * q_);
  neg_.resize(q_);
  for (unsigned a = 0; a < q_; ++a) {
    Poly fa = decode(a);
    Poly na(k_);
    for (unsigned i = 0; i < k_; ++i) na[i] = (p_ - fa[i]) % p_;
    neg_[a] = encode(na);
    for (unsigned b = 0; b < q_; ++b) {
      Poly fb = decode(b);
      Poly s(k_);
      for (unsigned i = 0; i < k_; ++i) s[i] = (fa[i] + fb[i]) % p_;
      add_[a * q_ + b] = encode(s);
      Poly prod(2 * k_ - 1, 0);
      for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j)
          prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
      mul_[a * q_ + b] = encode(poly_rem(prod, mod, p_));
    }
  }

  inv_.assign(q_, 0);
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = uint8_t(b);
        break;
      }

  frob_.resize(q_);
  for (unsigned a = 0; a < q_; ++a) frob_[a] = pow(uint8_t(a), p_);

  gen_ = 0;
  for (unsigned a = 2; a < q_ && gen_ == 0; ++a) {
    unsigned ord = 1;
    uint8_t x = uint8_t(a);
    while (x != 1) {
      x = mul(x, uint8_t(a));
      ++ord;
    }
    if (ord == q_ - 1) gen_ = uint8_t(a);
  }
  if (q_ == 2) gen_ = 1;
  if (gen_ == 0) throw std::logic_error("no multiplicative generator");

  verify();
}

uint8_t FiniteField::inv(uint8_t a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  return inv_[a];
}

uint8_t FiniteField::pow(uint8_t a, unsigned long e) const {
  uint8_t r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

void FiniteField::verify() const {
  for (unsigned a = 0; a < q_; ++a) {
    if (add(uint8_t(a), 0) != a || mul(uint8_t(a), 1) != a ||
        mul(uint8_t(a), 0) != 0 || add(uint8_t(a), neg(uint8_t(a))) != 0)
      throw std::logic_error("field unit/zero law failure");
    if (a != 0 && mul(uint8_t(a), inv_[a]) != 1)
      throw std::logic_error("field inverse failure");
    for (unsigned b = 0; b < q_; ++b) {
      if (add(uint8_t(a), uint8_t(b)) != add(uint8_t(b), uint8_t(a)) ||
          mul(uint8_t(a), uint8_t(b)) != mul(uint8_t(b), uint8_t(a)))
        throw std::logic_error("field commutativity failure");
    }
  }
  // Associativity and distributivity: exhaustive up to 16, strided above.
  unsigned step = q_ <= 16 ? 1 : 5;
  for (unsigned a = 0; a < q_; a += step)
    for (unsigned b = 0; b < q_; b += step)
      for (unsigned c = 0; c < q_; c += step) {
        uint8_t x = uint8_t(a), y = uint8_t(b), z = uint8_t(c);
        if (add(add(x, y), z) != add(x, add(y, z)) ||
            mul(mul(x, y), z) != mul(x, mul(y, z)) ||
            mul(x, add(y, z)) != add(mul(x, y), mul(x, z)))
          throw std::logic_error("field ring-axiom failure");
      }
}

Mat mat_identity(unsigned d) {
  Mat m;
  m.d = d;
  for (unsigned i = 0; i < d; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const FiniteField& f, const Mat& x, const Mat& y) {
  Mat r;
  r.d = x.d;
  for (unsigned i = 0; i < x.d; ++i)
    for (unsigned j = 0; j < x.d; ++j) {
      uint8_t s = 0;
      for (unsigned l = 0; l < x.d; ++l)
        s = f.add(s, f.mul(x.at(i, l), y.at(l, j)));
      r.at(i, j) = s;
    }
  return r;
}

Mat mat_inverse(const FiniteField& f, const Mat& x) {
  unsigned d = x.d;
  Mat a = x, inv = mat_identity(d);
  for (unsigned col = 0; col < d; ++col) {
    unsigned pivot = col;
    while (pivot < d && a.at(pivot, col) == 0) ++pivot;
    if (pivot == d) throw std::domain_error("singular matrix");
    if (pivot != col)
      for (unsigned j = 0; j < d; ++j) {
        std::swap(a.a[pivot * d + j], a.a[col * d + j]);
        std::swap(inv.a[pivot * d + j], inv.a[col * d + j]);
      }
    uint8_t s = f.inv(a.at(col, col));
    for (unsigned j = 0; j < d; ++j) {
      a.at(col, j) = f.mul(a.at(col, j), s);
      inv.at(col, j) = f.mul(inv.at(col, j), s);
    }
    for (unsigned r = 0; r < d; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      uint8_t c = a.at(r, col);
      for (unsigned j = 0; j < d; ++j) {
        a.at(r, j) = f.sub(a.at(r, j), f.mul(c, a.at(col, j)));
        inv.at(r, j) = f.sub(inv.at(r, j), f.mul(c, inv.at(col, j)));
      }
    }
  }
  return inv;
}

MatGroup::MatGroup(FiniteField field, unsigned dim, std::vector<Mat> generators,
                   size_t cap)
    : field_(std::move(field)), dim_(dim), gens_(std::move(generators)) {
  if (dim_ < 1 || dim_ > 4) throw std::invalid_argument("dimension 1..4 only");
  if (gens_.empty()) throw std::invalid_argument("no generators");
  for (const Mat& g : gens_) {
    if (g.d != dim_) throw std::invalid_argument("generator dimension mismatch");
    mat_inverse(field_, g);  // throws if singular
  }

  std::map<std::array<uint8_t, 16>, uint32_t> seen;
  elems_.push_back(mat_identity(dim_));
  seen.emplace(elems_[0].a, 0);
  std::deque<uint32_t> queue = {0};
  while (!queue.empty()) {
    uint32_t id = queue.front();
    queue.pop_front();
    for (const Mat& g : gens_) {
      Mat prod = mat_mul(field_, elems_[id], g);
      auto [it, fresh] = seen.emplace(prod.a, uint32_t(elems_.size()));
      if (fresh) {
        elems_.push_back(prod);
        if (elems_.size() > cap)
          throw std::length_error("group enumeration exceeded cap");
        queue.push_back(it->second);
      }
    }
  }

  sorted_.resize(elems_.size());
  for (uint32_t i = 0; i < sorted_.size(); ++i) sorted_[i] = i;
  std::sort(sorted_.begin(), sorted_.end(), [&](uint32_t x, uint32_t y) {
    return elems_[x].a < elems_[y].a;
  });
}

bool MatGroup::contains(const Mat& m) const {
  auto it = std::lower_bound(
      sorted_.begin(), sorted_.end(), m,
      [&](uint32_t id, const Mat& key) { return elems_[id].a < key.a; });
  return it != sorted_.end() && elems_[*it].a == m.a;
}

size_t MatGroup::index_of(const Mat& m) const {
  auto it = std::lower_bound(
      sorted_.begin(), sorted_.end(), m,
      [&](uint32_t id, const Mat& key) { return elems_[id].a < key.a; });
  if (it == sorted_.end() || !(elems_[*it].a == m.a))
    throw std::out_of_range("element not in group");
  return *it;
}

size_t MatGroup::mul(size_t i, size_t j) const {
  return index_of(mat_mul(field_, elems_[i], elems_[j]));
}

size_t MatGroup::inverse(size_t i) const {
  return index_of(mat_inverse(field_, elems_[i]));
}

unsigned MatGroup::element_order(size_t i) const {
  unsigned ord = 1;
  size_t cur = i;
  while (cur != 0) {
    cur = mul(cur, i);
    ++ord;
    if (ord > elems_.size()) throw std::logic_error("order runaway");
  }
  return ord;
}

const std::vector<size_t>& MatGroup::involutions() const {
  if (invols_.empty()) {
    for (size_t i = 1; i < elems_.size(); ++i)
      if (mul(i, i) == 0) invols_.push_back(i);
  }
  return invols_;
}

std::vector<std::vector<size_t>> MatGroup::involution_classes() const {
  const std::vector<size_t>& inv = involutions();
  std::set<size_t> left(inv.begin(), inv.end());
  std::vector<size_t> gidx, ginv;
  for (const Mat& g : gens_) {
    gidx.push_back(index_of(g));
    ginv.push_back(inverse(gidx.back()));
  }
  std::vector<std::vector<size_t>> classes;
  while (!left.empty()) {
    size_t seed = *left.begin();
    std::set<size_t> orbit = {seed};
    std::deque<size_t> queue = {seed};
    left.erase(seed);
    while (!queue.empty()) {
      size_t x = queue.front();
      queue.pop_front();
      for (size_t gi = 0; gi < gidx.size(); ++gi) {
        size_t y = mul(mul(ginv[gi], x), gidx[gi]);
        if (orbit.insert(y).second) {
          left.erase(y);
          queue.push_back(y);
        }
      }
    }
    classes.emplace_back(orbit.begin(), orbit.end());
  }
  return classes;
}

std::vector<size_t> MatGroup::closure(const std::vector<size_t>& seed) const {
  std::set<size_t> sub = {0};
  std::deque<size_t> queue = {0};
  for (size_t s : seed)
    if (sub.insert(s).second) queue.push_back(s);
  while (!queue.empty()) {
    size_t x = queue.front();
    queue.pop_front();
    for (size_t s : seed) {
      size_t y = mul(x, s);
      if (sub.insert(y).second) queue.push_back(y);
    }
  }
  return std::vector<size_t>(sub.begin(), sub.end());
}

std::vector<size_t> MatGroup::cyclic_normalizer(unsigned m) const {
  size_t x = SIZE_MAX;
  for (uint32_t id : sorted_) {
    if (element_order(id) == m) {
      x = id;
      break;
    }
  }
  if (x == SIZE_MAX) throw std::domain_error("no element of that order");
  std::vector<size_t> cyc = closure({x});
  std::vector<size_t> norm;
  for (size_t g = 0; g < elems_.size(); ++g) {
    size_t conj = mul(mul(g, x), inverse(g));
    if (std::binary_search(cyc.begin(), cyc.end(), conj)) norm.push_back(g);
  }
  return norm;
}

std::vector<size_t> MatGroup::sylow_normalizer(unsigned p) const {
  size_t pp = 1;
  while (elems_.size() % (pp * p) == 0) pp *= p;
  if (pp == 1) throw std::domain_error("order not divisible by p");

  size_t x = SIZE_MAX;
  for (uint32_t id : sorted_) {
    if (element_order(id) == p) {
      x = id;
      break;
    }
  }
  if (x == SIZE_MAX) throw std::logic_error("no element of order p");

  std::vector<size_t> seeds = {x};
  std::vector<size_t> sub = closure(seeds);
  auto is_p_power = [&](size_t n) {
    while (n % p == 0) n /= p;
    return n == 1;
  };
  auto normalizes = [&](size_t g) {
    size_t gi = inverse(g);
    for (size_t s : seeds) {
      size_t conj = mul(mul(g, s), gi);
      if (!std::binary_search(sub.begin(), sub.end(), conj)) return false;
    }
    return true;
  };
  while (sub.size() < pp) {
    size_t grow = SIZE_MAX;
    for (size_t g = 0; g < elems_.size(); ++g) {
      if (std::binary_search(sub.begin(), sub.end(), g)) continue;
      if (!is_p_power(element_order(g)) || !normalizes(g)) continue;
      grow = g;
      break;
    }
    if (grow == SIZE_MAX)
      throw std::logic_error("Sylow climb stalled");
    seeds.push_back(grow);
    sub = closure(seeds);
    if (!is_p_power(sub.size()))
      throw std::logic_error("Sylow climb left the p-subgroup lattice");
  }

  std::vector<size_t> norm;
  for (size_t g = 0; g < elems_.size(); ++g)
    if (normalizes(g)) norm.push_back(g);
  return norm;
}

CosetAction::CosetAction(const MatGroup& g, std::vector<size_t> subgroup)
    : g_(g), sub_(std::move(subgroup)) {
  std::sort(sub_.begin(), sub_.end());
  sub_.erase(std::unique(sub_.begin(), sub_.end()), sub_.end());
  if (sub_.empty() || sub_[0] != 0)
    throw std::invalid_argument("subgroup must contain the identity");
  if (g_.order() % sub_.size() != 0)
    throw std::invalid_argument("subgroup order does not divide group order");
  for (size_t a : sub_)
    for (size_t b : sub_)
      if (!std::binary_search(sub_.begin(), sub_.end(), g_.mul(a, b)))
        throw std::invalid_argument("index set not multiplicatively closed");

  coset_of_.assign(g_.order(), UINT32_MAX);
  std::vector<size_t> gidx;
  for (const Mat& gen : g_.generators()) gidx.push_back(g_.index_of(gen));
  auto open_coset = [&](size_t rep) {
    uint32_t cid = uint32_t(reps_.size());
    reps_.push_back(rep);
    for (size_t h : sub_) coset_of_[g_.mul(h, rep)] = cid;
    return cid;
  };
  open_coset(0);
  for (size_t j = 0; j < reps_.size(); ++j) {
    for (size_t gi : gidx) {
      size_t t = g_.mul(reps_[j], gi);
      if (coset_of_[t] == UINT32_MAX) open_coset(t);
    }
  }
  for (uint32_t c : coset_of_)
    if (c == UINT32_MAX)
      throw std::logic_error("coset table incomplete");
  if (reps_.size() * sub_.size() != g_.order())
    throw std::logic_error("coset count mismatch");
}

size_t CosetAction::fix(size_t element_index) const {
  size_t count = 0;
  for (size_t j = 0; j < reps_.size(); ++j)
    if (coset_of_[g_.mul(reps_[j], element_index)] == j) ++count;
  return count;
}

size_t CosetAction::ifix() const {
  size_t best = 0;
  for (size_t t : g_.involutions()) best = std::max(best, fix(t));
  return best;
}

std::vector<CosetAction::InvolutionClassFix> CosetAction::class_table() const {
  std::vector<InvolutionClassFix> rows;
  for (const auto& cls : g_.involution_classes()) {
    InvolutionClassFix row;
    row.class_size = cls.size();
    for (size_t t : cls)
      if (std::binary_search(sub_.begin(), sub_.end(), t)) ++row.in_subgroup;
    row.fixed = fix(cls.front());
    rows.push_back(row);
  }
  return rows;
}

bool CosetAction::burnside_check() const {
  size_t total = 0;
  for (const auto& cls : g_.involution_classes()) {
    size_t f0 = fix(cls.front());
    size_t in_sub = 0;
    for (size_t t : cls) {
      if (fix(t) != f0) return false;  // fix must be a class function
      if (std::binary_search(sub_.begin(), sub_.end(), t)) ++in_sub;
    }
    if (f0 * cls.size() != in_sub * n()) return false;
    total += f0 * cls.size();
  }
  size_t sub_i2 = 0;
  for (size_t t : g_.involutions())
    if (std::binary_search(sub_.begin(), sub_.end(), t)) ++sub_i2;
  return total == n() * sub_i2;
}

GeneratorSet builtin_group(const std::string& id) {
  GeneratorSet gs;
  gs.id = id;
  if (id == "L2(8)") {
    gs.p = 2;
    gs.k = 3;
    gs.dim = 2;
    gs.expected_order = 504;
    FiniteField f(2, 3);
    unsigned g = f.generator();
    gs.matrices = {
        {1, 1, 0, 1},
        {g, 0, 0, f.inv(uint8_t(g))},
        {0, 1, 1, 0},
    };
  } else if (id == "U3(3)") {
    gs.p = 3;
    gs.k = 2;
    gs.dim = 3;
    gs.expected_order = 6048;
    FiniteField f(3, 2);
    unsigned l = f.generator();
    unsigned l2 = f.mul(uint8_t(l), uint8_t(l));
    unsigned l5 = f.pow(uint8_t(l), 5);
    gs.matrices = {
        {1, 1, 1, 0, 1, 2, 0, 0, 1},
        {l, 0, 0, 0, l2, 0, 0, 0, l5},
        {0, 0, 1, 0, 2, 0, 1, 0, 0},
    };
  } else if (id == "Sz(8)") {
    gs.p = 2;
    gs.k = 3;
    gs.dim = 4;
    gs.expected_order = 29120;
    FiniteField f(2, 3);
    unsigned g = f.generator();
    unsigned g2 = f.mul(uint8_t(g), uint8_t(g));
    unsigned g3 = f.mul(uint8_t(g2), uint8_t(g));
    unsigned gi2 = f.inv(uint8_t(g2));
    unsigned gi3 = f.inv(uint8_t(g3));
    gs.matrices = {
        // Unipotent family members S(1,0) and S(0,1).
        {1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0, 1, 0, 1, 1},
        {1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1},
        {g3, 0, 0, 0, 0, g2, 0, 0, 0, 0, gi2, 0, 0, 0, 0, gi3},
        {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0},
    };
  } else {
    throw std::invalid_argument("unknown builtin group: " + id);
  }
  return gs;
}

MatGroup build_group(const GeneratorSet& gs, size_t cap) {
  FiniteField f(gs.p, gs.k);
  std::vector<Mat> mats;
  for (const auto& entries : gs.matrices) {
    if (entries.size() != size_t(gs.dim) * gs.dim)
      throw std::invalid_argument("matrix entry count mismatch");
    Mat m;
    m.d = gs.dim;
    for (size_t i = 0; i < entries.size(); ++i) {
      if (entries[i] >= f.q())
        throw std::invalid_argument("entry outside the field");
      m.a[i] = uint8_t(entries[i]);
    }
    mats.push_back(m);
  }
  MatGroup grp(std::move(f), gs.dim, std::move(mats), cap);
  if (gs.expected_order != 0 && grp.order() != gs.expected_order)
    throw std::logic_error(gs.id + ": enumerated order " +
                           std::to_string(grp.order()) + " != expected " +
                           std::to_string(gs.expected_order));
  return grp;
}

}  // namespace ifix
