#include "ifix/fixity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ifix {

namespace {

unsigned rank_for(Family f) {
  switch (f) {
    case Family::G2: return 2;
    case Family::F4: return 4;
    case Family::E6: return 6;
    case Family::E7: return 7;
    default:
      throw std::invalid_argument("engine supports the exceptional families");
  }
}

std::string order_name(Family f, bool twisted) {
  switch (f) {
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return twisted ? "2E6" : "E6";
    case Family::E7: return "E7";
    default: throw std::invalid_argument("no order name");
  }
}

}  // namespace

ParabolicEngine::ParabolicEngine(Family f, bool twisted)
    : family_(f), twisted_(twisted), weyl_(RootSystem::build(f, rank_for(f))) {
  if (twisted && f != Family::E6)
    throw std::invalid_argument("twisted engine exists only for E6");
  auto sc = weyl_.sigma_classes(twisted);
  QPoly qm1 = QPoly::q() - QPoly(1);
  for (auto& s : sc) {
    sign_.push_back(s.torus.factor_multiplicity(qm1) % 2 == 0 ? 1 : -1);
    torus_.push_back(s.torus);
  }
  for (const auto& c : weyl_.classes()) class_size_.push_back(c.size);
  if (twisted) wstar_ = weyl_.longest_word();
}

ParabolicEngine::SubCounts ParabolicEngine::scan(
    const WeylGroup::SubgroupData& sub) {
  SubCounts sc;
  sc.order = sub.keys.size();
  sc.counts =
      weyl_.class_counts(sub, wstar_ ? &*wstar_ : nullptr);
  return sc;
}

const ParabolicEngine::SubCounts& ParabolicEngine::parabolic_counts(
    const std::vector<unsigned>& removed) {
  auto it = par_cache_.find(removed);
  if (it == par_cache_.end())
    it = par_cache_.emplace(removed, scan(weyl_.parabolic_weyl(removed)))
             .first;
  return it->second;
}

const ParabolicEngine::SubCounts& ParabolicEngine::levi_counts(
    const std::vector<unsigned>& nodes) {
  auto it = levi_cache_.find(nodes);
  if (it == levi_cache_.end())
    it = levi_cache_.emplace(nodes, scan(weyl_.reflection_subgroup(nodes)))
             .first;
  return it->second;
}

const QPoly& ParabolicEngine::index_poly(
    const std::vector<unsigned>& removed) {
  auto it = index_cache_.find(removed);
  if (it == index_cache_.end())
    it = index_cache_
             .emplace(removed, weyl_.parabolic_index_poly(removed, twisted_))
             .first;
  return it->second;
}

Rat ParabolicEngine::chi_value(const std::vector<unsigned>& removed,
                               const InvolutionRecord& rec, const Int& q) {
  if (!rec.has_pseudo_levi)
    throw std::domain_error("record " + rec.label + " has no engine data");
  if (rec.q_mod != 0 && q % rec.q_mod != rec.q_res)
    throw std::domain_error("q outside the record's congruence class");

  const SubCounts& par = parabolic_counts(removed);
  const SubCounts& levi = levi_counts(rec.pseudo_levi);

  FactoredOrder cent = parse_order_expr(rec.centralizer);
  QPoly qm1 = QPoly::q() - QPoly(1);
  int eps_c = cent.expand().factor_multiplicity(qm1) % 2 == 0 ? 1 : -1;
  Rat cent_pp = cent.pprime_part().value(q);

  size_t order_w = weyl_.order();
  Rat chi(0);
  for (size_t i = 0; i < class_size_.size(); ++i) {
    if (par.counts[i] == 0 || levi.counts[i] == 0) continue;
    Int num = Int(long(order_w)) * long(par.counts[i]) * long(levi.counts[i]);
    Int den = Int(long(class_size_[i])) * long(par.order) * long(levi.order);
    Rat term = Rat(num) / Rat(den) * cent_pp / torus_[i].eval(q);
    if (eps_c * sign_[i] < 0)
      chi -= term;
    else
      chi += term;
  }
  return chi;
}

QPoly ParabolicEngine::chi_poly(const std::vector<unsigned>& removed,
                                const InvolutionRecord& rec,
                                unsigned holdout) {
  unsigned mod = rec.q_mod == 0 ? 2 : rec.q_mod;
  unsigned res = rec.q_res;
  if (mod % 2 == 1) {  // force odd sample points
    mod *= 2;
    if (res % 2 == 0) res += rec.q_mod;
  }
  int max_deg = index_poly(removed).degree();
  unsigned points = unsigned(max_deg) + 1;

  std::vector<Int> xs;
  std::vector<Rat> ys;
  Int q = res;
  while (q < 3) q += mod;
  for (unsigned k = 0; k < points + holdout; ++k, q += mod) {
    Rat v = chi_value(removed, rec, q);
    if (v.get_den() != 1 || v < 0)
      throw std::logic_error("sampled value not a nonnegative integer at q=" +
                             q.get_str() + " for " + rec.label);
    xs.push_back(q);
    ys.push_back(v);
  }

  QPoly p;
  for (unsigned i = 0; i < points; ++i) {
    QPoly basis(1);
    Rat denom(1);
    for (unsigned j = 0; j < points; ++j) {
      if (j == i) continue;
      basis *= QPoly::q() - QPoly(Rat(xs[j]));
      denom *= Rat(Int(xs[i] - xs[j]));
    }
    basis *= QPoly(Rat(ys[i] / denom));
    p += basis;
  }
  for (unsigned k = points; k < points + holdout; ++k) {
    if (p.eval(xs[k]) != ys[k])
      throw std::logic_error("interpolation failed held-out check for " +
                             rec.label);
  }
  if (!p.is_integral())
    throw std::logic_error("fixed-point polynomial not integral for " +
                           rec.label);
  return p;
}

InvolutionRecord ParabolicEngine::identity_record() const {
  InvolutionRecord rec;
  rec.label = "identity";
  rec.has_pseudo_levi = true;
  for (unsigned i = 1; i <= weyl_.root_system().rank(); ++i)
    rec.pseudo_levi.push_back(i);
  rec.centralizer = order_name(family_, twisted_);
  rec.q_mod = 2;
  rec.q_res = 1;
  return rec;
}

bool exceeds_power(const Int& a, const Int& b, unsigned long num,
                   unsigned long den) {
  return compare_pow(a, den, b, num) > 0;
}

bool meets_power(const Int& a, const Int& b, unsigned long num,
                 unsigned long den) {
  return compare_pow(a, den, b, num) >= 0;
}

Int fix_count(const Int& n, const Int& class_total, const Int& class_in_stab) {
  Int prod = n * class_in_stab;
  if (prod % class_total != 0)
    throw std::domain_error("fixed-point ratio not integral");
  return prod / class_total;
}

Int ifix_single_class(const Int& i2_H, const Int& i2_T, const Int& n) {
  if (i2_T <= 0 || n <= 0)
    throw std::invalid_argument("single-class fixity needs positive inputs");
  Int prod = i2_H * n;
  if (prod % i2_T != 0)
    throw std::domain_error("single-class fixity not integral");
  return prod / i2_T;
}

MaximalRankBound maximal_rank_lower_bound(const FactoredOrder& orderT,
                                          const FactoredOrder& f,
                                          const Int& classT, int deg_classT,
                                          const Int& n, int deg_n,
                                          const Int& q) {
  if (classT <= 0 || n <= 0 || deg_n <= 0)
    throw std::invalid_argument("maximal-rank bound needs positive inputs");
  MaximalRankBound out;
  Int denom = f.value_int(q) * classT;
  if (denom <= 0) throw std::invalid_argument("centralizer bound must be > 0");
  Int tval = orderT.value_int(q);
  mpz_fdiv_q(out.ifix_lb.get_mpz_t(), tval.get_mpz_t(), denom.get_mpz_t());
  out.liminf_lb = Rat(long(orderT.degree() - f.degree() - deg_classT),
                      long(deg_n));
  out.liminf_lb.canonicalize();
  return out;
}

namespace {

double log_int(const Int& x) {
  signed long exp2;
  double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(mant) + double(exp2) * std::log(2.0);
}

Int pow_ui(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

double almost_simple_exponent(const BoundInput& in) {
  if (in.a <= 0 || in.b <= 0 || in.c <= 0 || in.d <= 0)
    throw std::invalid_argument("bound inputs must be positive");
  if (in.c >= in.d)
    throw std::invalid_argument("|Aut(S)| must be smaller than |T|");
  return 1.0 - (log_int(in.b) - log_int(in.a)) / (log_int(in.d) - log_int(in.c));
}

bool almost_simple_exceeds(const BoundInput& in, unsigned long num,
                           unsigned long den) {
  if (in.a <= 0 || in.b <= 0 || in.c <= 0 || in.d <= 0)
    throw std::invalid_argument("bound inputs must be positive");
  if (in.c >= in.d)
    throw std::invalid_argument("|Aut(S)| must be smaller than |T|");
  if (den == 0) throw std::invalid_argument("zero denominator");
  // 1 - (log b - log a)/(log d - log c) > num/den, cleared of logarithms:
  // (den - num) log(d/c) > den log(b/a), with the sign of den - num folded
  // into which side each power lands on.
  if (num <= den) {
    unsigned long k = den - num;
    return pow_ui(in.d, k) * pow_ui(in.a, den) >
           pow_ui(in.c, k) * pow_ui(in.b, den);
  }
  unsigned long k = num - den;
  return pow_ui(in.a, den) * pow_ui(in.c, k) >
         pow_ui(in.b, den) * pow_ui(in.d, k);
}

bool abcd_check(const BoundInput& in) {
  if (in.a <= 0) return false;
  if (in.b <= 0 || in.c <= 0 || in.d <= 0)
    throw std::invalid_argument("bound inputs must be positive");
  return pow_ui(in.d, 5) * pow_ui(in.a, 9) > pow_ui(in.c, 5) * pow_ui(in.b, 9);
}

Rat liminf_exponent(const QPoly& fix, const QPoly& n) {
  if (fix.is_zero() || n.is_zero())
    throw std::domain_error("liminf exponent of the zero polynomial");
  if (fix.leading() <= 0 || n.leading() <= 0)
    throw std::domain_error("liminf exponent needs positive leading terms");
  if (n.degree() < 1)
    throw std::domain_error("degree of n must be at least 1");
  Rat r(long(fix.degree()), long(n.degree()));
  r.canonicalize();
  return r;
}

}  // namespace ifix
