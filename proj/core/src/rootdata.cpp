#include "ifix/rootdata.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace ifix {

namespace {

constexpr uint64_t kEmptyKey = ~uint64_t(0);

// Open-addressing set of 64-bit keys, linear probing.  Deterministic and
// lean enough for W(E7) (2.9M keys).
class FlatKeySet {
 public:
  explicit FlatKeySet(size_t expected) {
    size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    slots_.assign(cap, kEmptyKey);
    mask_ = cap - 1;
  }

  // Returns true if the key was inserted (not already present).
  bool insert(uint64_t k) {
    if (size_ * 2 >= slots_.size()) grow();
    size_t i = splitmix(k) & mask_;
    while (slots_[i] != kEmptyKey) {
      if (slots_[i] == k) return false;
      i = (i + 1) & mask_;
    }
    slots_[i] = k;
    ++size_;
    return true;
  }

  bool contains(uint64_t k) const {
    size_t i = splitmix(k) & mask_;
    while (slots_[i] != kEmptyKey) {
      if (slots_[i] == k) return true;
      i = (i + 1) & mask_;
    }
    return false;
  }

  size_t size() const { return size_; }

 private:
  static uint64_t splitmix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  void grow() {
    std::vector<uint64_t> old = std::move(slots_);
    slots_.assign(old.size() * 2, kEmptyKey);
    mask_ = slots_.size() - 1;
    size_ = 0;
    for (uint64_t k : old)
      if (k != kEmptyKey) insert(k);
  }

  std::vector<uint64_t> slots_;
  size_t mask_ = 0;
  size_t size_ = 0;
};

struct CartanData {
  unsigned rank;
  std::array<std::array<int, kMaxRank>, kMaxRank> A{};
  std::array<int, kMaxRank> d{};
};

CartanData cartan_for(Family f, unsigned rank) {
  CartanData c;
  auto chain = [&](unsigned r) {
    c.rank = r;
    for (unsigned i = 0; i < r; ++i) {
      c.A[i][i] = 2;
      c.d[i] = 1;
      if (i + 1 < r) {
        c.A[i][i + 1] = -1;
        c.A[i + 1][i] = -1;
      }
    }
  };
  switch (f) {
    case Family::A:
      if (rank < 1) throw std::invalid_argument("A_r needs r >= 1");
      chain(rank);
      break;
    case Family::B:
      if (rank < 2) throw std::invalid_argument("B_r needs r >= 2");
      chain(rank);
      // last node short, the rest long
      for (unsigned i = 0; i + 1 < rank; ++i) c.d[i] = 2;
      c.d[rank - 1] = 1;
      c.A[rank - 2][rank - 1] = -1;
      c.A[rank - 1][rank - 2] = -2;
      break;
    case Family::C:
      if (rank < 2) throw std::invalid_argument("C_r needs r >= 2");
      chain(rank);
      for (unsigned i = 0; i + 1 < rank; ++i) c.d[i] = 1;
      c.d[rank - 1] = 2;
      c.A[rank - 2][rank - 1] = -2;
      c.A[rank - 1][rank - 2] = -1;
      break;
    case Family::D:
      if (rank < 4) throw std::invalid_argument("D_r needs r >= 4");
      chain(rank);
      c.A[rank - 2][rank - 1] = 0;
      c.A[rank - 1][rank - 2] = 0;
      c.A[rank - 3][rank - 1] = -1;
      c.A[rank - 1][rank - 3] = -1;
      break;
    case Family::G2:
      chain(2);
      c.A[0][1] = -3;
      c.A[1][0] = -1;
      c.d[0] = 1;
      c.d[1] = 3;
      break;
    case Family::F4:
      chain(4);
      c.d[0] = c.d[1] = 2;
      c.d[2] = c.d[3] = 1;
      c.A[1][2] = -1;
      c.A[2][1] = -2;
      break;
    case Family::E6:
      chain(6);
      // Bourbaki: the branch node 2 hangs off node 4; the chain is 1-3-4-5-6.
      c.A[0][1] = c.A[1][0] = 0;
      c.A[1][2] = c.A[2][1] = 0;
      c.A[0][2] = c.A[2][0] = -1;
      c.A[1][3] = c.A[3][1] = -1;
      break;
    case Family::E7:
      chain(7);
      c.A[0][1] = c.A[1][0] = 0;
      c.A[1][2] = c.A[2][1] = 0;
      c.A[0][2] = c.A[2][0] = -1;
      c.A[1][3] = c.A[3][1] = -1;
      break;
  }
  return c;
}

int height(const Coord& c, unsigned rank) {
  int h = 0;
  for (unsigned i = 0; i < rank; ++i) h += c[i];
  return h;
}

}  // namespace

Family family_from_string(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "G2") return Family::G2;
  if (s == "F4") return Family::F4;
  if (s == "E6") return Family::E6;
  if (s == "E7") return Family::E7;
  throw std::invalid_argument("unknown family: " + s);
}

std::string family_to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
  }
  return "?";
}

uint64_t RootSystem::pack(const Coord& c, unsigned rank) {
  uint64_t k = 0;
  for (unsigned i = 0; i < rank; ++i)
    k |= uint64_t(uint8_t(int(c[i]) + 32)) << (8 * i);
  return k;
}

RootSystem RootSystem::build(Family f, unsigned rank) {
  CartanData cd = cartan_for(f, rank);
  RootSystem rs;
  rs.family_ = f;
  rs.rank_ = cd.rank;
  for (unsigned i = 0; i < cd.rank; ++i) {
    for (unsigned j = 0; j < cd.rank; ++j) rs.cartan_[i][j] = cd.A[i][j];
    rs.sym_[i] = cd.d[i];
  }

  // Closure of the simple roots under simple reflections.
  std::set<std::array<int16_t, kMaxRank>> seen;
  std::deque<Coord> queue;
  for (unsigned i = 0; i < cd.rank; ++i) {
    Coord c{};
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    Coord c = queue.front();
    queue.pop_front();
    for (unsigned i = 0; i < cd.rank; ++i) {
      long pair = 0;
      for (unsigned j = 0; j < cd.rank; ++j) pair += long(c[j]) * cd.A[i][j];
      Coord n = c;
      n[i] = int16_t(n[i] - pair);
      if (seen.insert(n).second) queue.push_back(n);
    }
  }

  // Order: simple roots, other positives by (height, lex), mirrored negatives.
  std::vector<Coord> pos;
  for (const auto& c : seen)
    if (height(c, cd.rank) > 0) pos.push_back(c);
  std::sort(pos.begin(), pos.end(), [&](const Coord& a, const Coord& b) {
    int ha = height(a, cd.rank), hb = height(b, cd.rank);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  // simple root i must sit at index i
  std::sort(pos.begin(), pos.begin() + cd.rank,
            [&](const Coord& a, const Coord& b) {
              for (unsigned i = 0; i < cd.rank; ++i) {
                if (a[i] != 0) return true;
                if (b[i] != 0) return false;
              }
              return false;
            });
  rs.roots_ = pos;
  for (const auto& c : pos) {
    Coord n{};
    for (unsigned i = 0; i < cd.rank; ++i) n[i] = int16_t(-c[i]);
    rs.roots_.push_back(n);
  }

  for (uint32_t i = 0; i < rs.roots_.size(); ++i)
    rs.index_.emplace_back(pack(rs.roots_[i], cd.rank), i);
  std::sort(rs.index_.begin(), rs.index_.end());

  int best = -1;
  for (unsigned i = 0; i < rs.n_pos(); ++i) {
    int h = height(rs.roots_[i], cd.rank);
    if (h > best) {
      best = h;
      rs.highest_ = i;
    }
  }

  for (unsigned i = 0; i < cd.rank; ++i)
    rs.simple_refl_.push_back(rs.reflection(i));
  return rs;
}

unsigned RootSystem::root_index(const Coord& c) const {
  uint64_t k = pack(c, rank_);
  auto it = std::lower_bound(index_.begin(), index_.end(),
                             std::make_pair(k, uint32_t(0)));
  if (it == index_.end() || it->first != k)
    throw std::domain_error("not a root");
  return it->second;
}

long RootSystem::bilinear(const Coord& a, const Coord& b) const {
  long s = 0;
  for (unsigned i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < rank_; ++j)
      s += long(a[i]) * b[j] * sym_[i] * cartan_[i][j];
  }
  return s;
}

long RootSystem::pairing(const Coord& a, unsigned root_b) const {
  const Coord& b = roots_[root_b];
  long num = bilinear(a, b);
  long den = bilinear(b, b) / 2;
  if (num % den != 0) throw std::logic_error("non-integral root pairing");
  return num / den;
}

RootSystem::Perm RootSystem::reflection(unsigned root) const {
  Perm p(n_roots());
  for (unsigned g = 0; g < n_roots(); ++g) {
    long pair = pairing(roots_[g], root);
    Coord img = roots_[g];
    for (unsigned i = 0; i < rank_; ++i)
      img[i] = int16_t(img[i] - pair * roots_[root][i]);
    p[g] = uint8_t(root_index(img));
  }
  return p;
}

unsigned RootSystem::length(const Perm& w) const {
  unsigned np = n_pos(), l = 0;
  for (unsigned i = 0; i < np; ++i)
    if (w[i] >= np) ++l;
  return l;
}

std::array<std::array<long, kMaxRank>, kMaxRank> RootSystem::matrix_of(
    const Perm& w) const {
  std::array<std::array<long, kMaxRank>, kMaxRank> m{};
  for (unsigned j = 0; j < rank_; ++j) {
    const Coord& img = roots_[w[j]];
    for (unsigned i = 0; i < rank_; ++i) m[i][j] = img[i];
  }
  return m;
}

QPoly RootSystem::torus_poly(const Perm& w, bool negate_matrix) const {
  auto m = matrix_of(w);
  if (negate_matrix)
    for (unsigned i = 0; i < rank_; ++i)
      for (unsigned j = 0; j < rank_; ++j) m[i][j] = -m[i][j];

  // det(qM - I) by interpolation at q = 0..rank (exact rational Gaussian
  // elimination), then Lagrange reconstruction.
  unsigned r = rank_;
  std::vector<Rat> xs, ys;
  for (unsigned t = 0; t <= r; ++t) {
    std::vector<std::vector<Rat>> a(r, std::vector<Rat>(r));
    for (unsigned i = 0; i < r; ++i)
      for (unsigned j = 0; j < r; ++j) {
        a[i][j] = Rat(long(t) * m[i][j] - (i == j ? 1 : 0));
      }
    Rat det(1);
    bool zero = false;
    for (unsigned c = 0; c < r && !zero; ++c) {
      unsigned piv = c;
      while (piv < r && a[piv][c] == 0) ++piv;
      if (piv == r) {
        zero = true;
        break;
      }
      if (piv != c) {
        std::swap(a[piv], a[c]);
        det = -det;
      }
      det *= a[c][c];
      for (unsigned i = c + 1; i < r; ++i) {
        if (a[i][c] == 0) continue;
        Rat f = a[i][c] / a[c][c];
        for (unsigned j = c; j < r; ++j) a[i][j] -= f * a[c][j];
      }
    }
    xs.emplace_back(long(t));
    ys.emplace_back(zero ? Rat(0) : det);
  }

  QPoly p;
  for (unsigned i = 0; i <= r; ++i) {
    QPoly basis(1);
    Rat denom(1);
    for (unsigned j = 0; j <= r; ++j) {
      if (j == i) continue;
      basis *= QPoly::q() - QPoly(xs[j]);
      denom *= xs[i] - xs[j];
    }
    basis *= QPoly(Rat(ys[i] / denom));
    p += basis;
  }
  if (!p.is_integral()) throw std::logic_error("torus polynomial not integral");
  if (p.leading() < 0) p = -p;
  return p;
}

RootSystem::Perm RootSystem::identity_perm() const {
  Perm p(n_roots());
  for (unsigned i = 0; i < n_roots(); ++i) p[i] = uint8_t(i);
  return p;
}

RootSystem::Perm RootSystem::compose(const Perm& a, const Perm& b) const {
  Perm c(n_roots());
  for (unsigned i = 0; i < n_roots(); ++i) c[i] = a[b[i]];
  return c;
}

RootSystem::Perm RootSystem::inverse(const Perm& a) const {
  Perm c(n_roots());
  for (unsigned i = 0; i < n_roots(); ++i) c[a[i]] = uint8_t(i);
  return c;
}

// ---------------------------------------------------------------------------

WeylGroup::WeylGroup(RootSystem rs, size_t budget) : rs_(std::move(rs)) {
  const unsigned r = rs_.rank();
  auto key_from_perm = [&](const Perm& p) {
    uint64_t k = 0;
    for (unsigned i = 0; i < r; ++i) k |= uint64_t(p[i]) << (8 * i);
    return k;
  };

  FlatKeySet seen(1 << 16);
  std::deque<Perm> queue;
  Perm id = rs_.identity_perm();
  seen.insert(key_from_perm(id));
  keys_.push_back(key_from_perm(id));
  queue.push_back(std::move(id));

  while (!queue.empty()) {
    Perm w = std::move(queue.front());
    queue.pop_front();
    for (unsigned i = 0; i < r; ++i) {
      const Perm& si = rs_.simple_reflection(i);
      // key of w * s_i from the images of the simple roots only
      uint64_t k = 0;
      for (unsigned j = 0; j < r; ++j)
        k |= uint64_t(w[si[j]]) << (8 * j);
      if (seen.contains(k)) continue;
      if (seen.size() >= budget)
        throw std::runtime_error("Weyl group exceeds enumeration budget");
      seen.insert(k);
      keys_.push_back(k);
      Perm nw(rs_.n_roots());
      for (unsigned t = 0; t < rs_.n_roots(); ++t) nw[t] = w[si[t]];
      queue.push_back(std::move(nw));
    }
  }
  std::sort(keys_.begin(), keys_.end());
}

uint64_t WeylGroup::key_of(const Perm& w) const {
  uint64_t k = 0;
  for (unsigned i = 0; i < rs_.rank(); ++i) k |= uint64_t(w[i]) << (8 * i);
  return k;
}

uint32_t WeylGroup::id_of(uint64_t key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key)
    throw std::domain_error("element not in Weyl group");
  return uint32_t(it - keys_.begin());
}

bool WeylGroup::contains(uint64_t key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  return it != keys_.end() && *it == key;
}

WeylGroup::Perm WeylGroup::perm_of(uint64_t key) const {
  const unsigned r = rs_.rank(), np = rs_.n_pos();
  Perm p(rs_.n_roots());
  // images of the simple roots, as coordinates
  std::vector<Coord> img(np);
  for (unsigned j = 0; j < r; ++j) {
    p[j] = uint8_t((key >> (8 * j)) & 0xff);
    img[j] = rs_.root(p[j]);
  }
  // every non-simple positive root is (lower positive root) + (simple root)
  for (unsigned t = r; t < np; ++t) {
    const Coord& c = rs_.root(t);
    unsigned b = 0, a = 0;
    bool found = false;
    for (b = 0; b < r && !found; ++b) {
      if (c[b] == 0) continue;
      Coord lower = c;
      lower[b] = int16_t(lower[b] - 1);
      try {
        a = rs_.root_index(lower);
        if (a < np) found = true;
      } catch (const std::domain_error&) {
      }
      if (found) break;
    }
    if (!found) throw std::logic_error("root decomposition failed");
    Coord sum{};
    for (unsigned i = 0; i < r; ++i)
      sum[i] = int16_t(img[a][i] + img[b][i]);
    img[t] = sum;
    p[t] = uint8_t(rs_.root_index(sum));
  }
  for (unsigned t = 0; t < np; ++t) p[np + t] = uint8_t(rs_.negate(p[t]));
  return p;
}

WeylGroup::Perm WeylGroup::longest_word() const {
  Perm w = rs_.identity_perm();
  const unsigned np = rs_.n_pos();
  while (true) {
    bool done = true;
    for (unsigned i = 0; i < rs_.rank(); ++i) {
      if (w[i] < np) {  // w(alpha_i) still positive
        w = rs_.compose(w, rs_.simple_reflection(i));
        done = false;
        break;
      }
    }
    if (done) return w;
  }
}

void WeylGroup::compute_classes() {
  if (classes_done_) return;
  const unsigned r = rs_.rank();
  const size_t n = keys_.size();
  class_of_.assign(n, uint16_t(0xffff));

  struct RawClass {
    uint64_t min_key;
    std::vector<uint32_t> members;
  };
  std::vector<RawClass> raw;

  std::deque<Perm> queue;
  for (uint32_t start = 0; start < n; ++start) {
    if (class_of_[start] != 0xffff) continue;
    uint16_t cid = uint16_t(raw.size());
    raw.push_back({keys_[start], {}});
    class_of_[start] = cid;
    raw[cid].members.push_back(start);
    queue.push_back(perm_of(keys_[start]));
    while (!queue.empty()) {
      Perm w = std::move(queue.front());
      queue.pop_front();
      for (unsigned i = 0; i < r; ++i) {
        const Perm& si = rs_.simple_reflection(i);
        uint64_t k = 0;
        for (unsigned j = 0; j < r; ++j)
          k |= uint64_t(si[w[si[j]]]) << (8 * j);
        uint32_t id = id_of(k);
        if (class_of_[id] != 0xffff) continue;
        class_of_[id] = cid;
        raw[cid].members.push_back(id);
        Perm c(rs_.n_roots());
        for (unsigned t = 0; t < rs_.n_roots(); ++t) c[t] = si[w[si[t]]];
        queue.push_back(std::move(c));
      }
    }
  }

  // canonical order: size ascending, then least member
  std::vector<uint16_t> order(raw.size());
  for (uint16_t i = 0; i < raw.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](uint16_t a, uint16_t b) {
    if (raw[a].members.size() != raw[b].members.size())
      return raw[a].members.size() < raw[b].members.size();
    return raw[a].min_key < raw[b].min_key;
  });
  std::vector<uint16_t> newid(raw.size());
  for (uint16_t i = 0; i < order.size(); ++i) newid[order[i]] = i;

  classes_.resize(raw.size());
  for (uint16_t i = 0; i < order.size(); ++i) {
    const RawClass& rc = raw[order[i]];
    classes_[i].min_key = rc.min_key;
    classes_[i].size = rc.members.size();
    classes_[i].rep = perm_of(rc.min_key);
  }
  for (size_t i = 0; i < n; ++i) class_of_[i] = newid[class_of_[i]];
  classes_done_ = true;
}

const std::vector<ConjClass>& WeylGroup::classes() {
  compute_classes();
  return classes_;
}

uint16_t WeylGroup::class_of(uint64_t key) {
  compute_classes();
  return class_of_[id_of(key)];
}

WeylGroup::SubgroupData WeylGroup::subgroup_closure(
    const std::vector<Perm>& gens, size_t budget) const {
  SubgroupData sd;
  FlatKeySet seen(1 << 10);
  std::deque<Perm> queue;
  Perm id = rs_.identity_perm();
  seen.insert(key_of(id));
  queue.push_back(id);
  std::vector<Perm> elems;
  elems.push_back(std::move(id));
  while (!queue.empty()) {
    Perm w = std::move(queue.front());
    queue.pop_front();
    for (const Perm& g : gens) {
      Perm c = rs_.compose(w, g);
      uint64_t k = key_of(c);
      if (seen.contains(k)) continue;
      if (seen.size() >= budget)
        throw std::runtime_error("subgroup exceeds closure budget");
      seen.insert(k);
      elems.push_back(c);
      queue.push_back(std::move(c));
    }
  }
  std::vector<std::pair<uint64_t, size_t>> idx;
  idx.reserve(elems.size());
  for (size_t i = 0; i < elems.size(); ++i)
    idx.emplace_back(key_of(elems[i]), i);
  std::sort(idx.begin(), idx.end());
  for (auto& [k, i] : idx) {
    sd.keys.push_back(k);
    sd.perms.push_back(std::move(elems[i]));
  }
  return sd;
}

WeylGroup::SubgroupData WeylGroup::parabolic_weyl(
    const std::vector<unsigned>& removed_nodes) const {
  std::vector<Perm> gens;
  for (unsigned i = 1; i <= rs_.rank(); ++i) {
    bool removed = false;
    for (unsigned rn : removed_nodes) removed |= (rn == i);
    if (!removed) gens.push_back(rs_.simple_reflection(i - 1));
  }
  return subgroup_closure(gens);
}

WeylGroup::SubgroupData WeylGroup::reflection_subgroup(
    const std::vector<unsigned>& nodes) const {
  std::vector<Perm> gens;
  for (unsigned n : nodes) {
    if (n == 0)
      gens.push_back(rs_.reflection(rs_.highest_root()));
    else
      gens.push_back(rs_.simple_reflection(n - 1));
  }
  return subgroup_closure(gens);
}

std::vector<unsigned> WeylGroup::diagram_symmetry() const {
  const unsigned r = rs_.rank();
  std::vector<unsigned> tau(r);
  for (unsigned i = 0; i < r; ++i) tau[i] = i;
  switch (rs_.family()) {
    case Family::A:
      for (unsigned i = 0; i < r; ++i) tau[i] = r - 1 - i;
      break;
    case Family::D:
      std::swap(tau[r - 2], tau[r - 1]);
      break;
    case Family::E6:
      tau = {5, 1, 4, 3, 2, 0};
      break;
    default:
      break;
  }
  return tau;
}

QPoly WeylGroup::parabolic_index_poly(
    const std::vector<unsigned>& removed_nodes, bool twisted) const {
  const unsigned r = rs_.rank();
  // Solve A m = sum of e_k over removed nodes: v = sum m_j alpha_j then
  // pairs to 1 with each removed simple coroot and 0 with the kept ones,
  // so its stabilizer in W is exactly W_P.
  std::vector<std::vector<Rat>> a(r, std::vector<Rat>(r + 1, Rat(0)));
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j) a[i][j] = Rat(rs_.cartan(i, j));
  for (unsigned rn : removed_nodes) {
    if (rn < 1 || rn > r) throw std::invalid_argument("bad node label");
    a[rn - 1][r] = 1;
  }
  // Gaussian elimination; A (Cartan) is invertible.
  for (unsigned c = 0; c < r; ++c) {
    unsigned piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    for (unsigned i = 0; i < r; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (unsigned j = c; j <= r; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<Rat> m(r);
  Int scale(1);
  for (unsigned i = 0; i < r; ++i) {
    m[i] = a[i][r] / a[i][i];
    scale = lcm(scale, Int(m[i].get_den()));
  }
  std::array<long, kMaxRank> v{};
  for (unsigned i = 0; i < r; ++i) {
    Rat s = m[i] * Rat(scale);
    v[i] = long(s.get_num().get_si());
  }

  auto tau = diagram_symmetry();

  std::map<std::array<long, kMaxRank>, unsigned> depth;
  std::deque<std::array<long, kMaxRank>> queue;
  depth[v] = 0;
  queue.push_back(v);
  QPoly n;
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    unsigned d = depth[x];
    bool tau_fixed = true;
    for (unsigned i = 0; i < r && tau_fixed; ++i)
      tau_fixed = (x[tau[i]] == x[i]);
    if (!twisted || tau_fixed) n += QPoly::q(d);
    for (unsigned i = 0; i < r; ++i) {
      long pair = 0;
      for (unsigned j = 0; j < r; ++j) pair += x[j] * rs_.cartan(i, j);
      if (pair <= 0) continue;  // only walk away from the dominant chamber
      auto y = x;
      y[i] -= pair;
      if (depth.emplace(y, d + 1).second) queue.push_back(y);
    }
  }
  return n;
}

std::vector<SigmaClass> WeylGroup::sigma_classes(bool twisted) {
  compute_classes();
  std::vector<SigmaClass> out;
  QPoly qme = QPoly::q() - QPoly(twisted ? -1 : 1);
  for (const auto& c : classes_) {
    SigmaClass sc;
    sc.torus = rs_.torus_poly(c.rep, twisted);
    sc.rel_rank = sc.torus.factor_multiplicity(qme);
    out.push_back(std::move(sc));
  }
  return out;
}

std::vector<size_t> WeylGroup::class_counts(const SubgroupData& sub,
                                            const Perm* wstar) {
  compute_classes();
  std::vector<size_t> counts(classes_.size(), 0);
  for (const Perm& x : sub.perms) {
    uint64_t k;
    if (wstar) {
      Perm y = rs_.compose(x, *wstar);
      k = key_of(y);
    } else {
      k = key_of(x);
    }
    counts[class_of_[id_of(k)]]++;
  }
  return counts;
}

}  // namespace ifix
