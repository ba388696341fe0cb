#include "ifix/fixtures.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ifix {

namespace {

using nlohmann::json;

json load_file(const std::string& dir, const std::string& name) {
  std::ifstream in(dir + "/" + name);
  if (!in) throw std::runtime_error("cannot open " + dir + "/" + name);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error(name + ": parse error: " + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    throw std::runtime_error(name + ": expected an object with a rows array");
  return j;
}

// rows array by value: safe as a ranged-for range expression
json load_rows(const std::string& dir, const std::string& name) {
  return load_file(dir, name)["rows"];
}

[[noreturn]] void bad(const std::string& file, const std::string& row,
                      const std::string& why) {
  throw std::runtime_error(file + (row.empty() ? "" : " row " + row) + ": " +
                           why);
}

std::string s_req(const json& r, const char* k, const std::string& file,
                  const std::string& row) {
  if (!r.contains(k) || !r[k].is_string()) bad(file, row, std::string("missing string field ") + k);
  return r[k].get<std::string>();
}

std::string s_opt(const json& r, const char* k) {
  return r.contains(k) ? r[k].get<std::string>() : std::string();
}

Int int_field(const json& v, const char* k, const std::string& file,
              const std::string& row) {
  if (!v.contains(k)) bad(file, row, std::string("missing field ") + k);
  const json& x = v[k];
  if (x.is_string()) return Int(x.get<std::string>());
  if (x.is_number_integer()) return Int(x.get<long>());
  bad(file, row, std::string("field ") + k + " is not an integer");
}

std::vector<unsigned> unodes(const json& arr, const std::string& file,
                             const std::string& row) {
  std::vector<unsigned> out;
  for (const auto& v : arr) {
    long x = v.get<long>();
    if (x < 0 || x > 8) bad(file, row, "node label out of range");
    out.push_back(unsigned(x));
  }
  return out;
}

char parity_field(const json& r, const std::string& file,
                  const std::string& row) {
  std::string p = s_req(r, "parity", file, row);
  if (p == "odd") return 'o';
  if (p == "even") return 'e';
  bad(file, row, "parity must be odd or even");
}

// --- positive-root counts from the Dynkin diagrams ---

struct Diagram {
  unsigned rank;
  unsigned npos;
  // (a, b, multiplicity), 1-based Bourbaki node labels
  std::vector<std::array<unsigned, 3>> edges;
};

const Diagram& ambient_diagram(const std::string& name) {
  static const std::map<std::string, Diagram> d = {
      {"G2", {2, 6, {{1, 2, 3}}}},
      {"F4", {4, 24, {{1, 2, 1}, {2, 3, 2}, {3, 4, 1}}}},
      {"E6", {6, 36, {{1, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1}, {2, 4, 1}}}},
      {"E7",
       {7, 63, {{1, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1}, {6, 7, 1}, {2, 4, 1}}}},
      {"E8",
       {8,
        120,
        {{1, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1}, {6, 7, 1}, {7, 8, 1}, {2, 4, 1}}}},
      {"D4", {4, 12, {{1, 2, 1}, {2, 3, 1}, {2, 4, 1}}}},
      {"B2", {2, 4, {{1, 2, 2}}}},
  };
  auto it = d.find(name);
  if (it == d.end()) throw std::invalid_argument("no diagram for " + name);
  return it->second;
}

unsigned component_npos(const std::vector<unsigned>& nodes,
                        const std::vector<std::array<unsigned, 3>>& edges) {
  unsigned n = unsigned(nodes.size());
  for (const auto& e : edges)
    if (e[2] == 3) return 6;  // G2 component
  for (const auto& e : edges)
    if (e[2] == 2) return n * n;  // B/C chain
  std::map<unsigned, std::vector<unsigned>> adj;
  for (unsigned x : nodes) adj[x];
  for (const auto& e : edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  unsigned branch = 0;
  for (unsigned x : nodes)
    if (adj[x].size() == 3) branch = x;
  if (branch == 0) return n * (n + 1) / 2;  // A_n
  std::vector<unsigned> arms;
  for (unsigned start : adj[branch]) {
    unsigned len = 1, prev = branch, cur = start;
    while (true) {
      unsigned next = 0;
      for (unsigned y : adj[cur])
        if (y != prev) next = y;
      if (next == 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return n * (n - 1);  // D_n
  if (arms == std::vector<unsigned>{1, 2, 2}) return 36;
  if (arms == std::vector<unsigned>{1, 2, 3}) return 63;
  if (arms == std::vector<unsigned>{1, 2, 4}) return 120;
  throw std::invalid_argument("unrecognized diagram component");
}

unsigned levi_npos(const Diagram& d, const std::vector<unsigned>& removed) {
  std::set<unsigned> gone(removed.begin(), removed.end());
  std::vector<unsigned> nodes;
  for (unsigned x = 1; x <= d.rank; ++x)
    if (!gone.count(x)) nodes.push_back(x);
  std::map<unsigned, std::vector<unsigned>> adj;
  std::vector<std::array<unsigned, 3>> kept;
  for (const auto& e : d.edges)
    if (!gone.count(e[0]) && !gone.count(e[1])) {
      kept.push_back(e);
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
  unsigned total = 0;
  std::set<unsigned> seen;
  for (unsigned x : nodes) {
    if (seen.count(x)) continue;
    std::vector<unsigned> comp, stack{x};
    seen.insert(x);
    while (!stack.empty()) {
      unsigned y = stack.back();
      stack.pop_back();
      comp.push_back(y);
      for (unsigned z : adj[y])
        if (!seen.count(z)) {
          seen.insert(z);
          stack.push_back(z);
        }
    }
    std::vector<std::array<unsigned, 3>> cedges;
    std::set<unsigned> cset(comp.begin(), comp.end());
    for (const auto& e : kept)
      if (cset.count(e[0]) && cset.count(e[1])) cedges.push_back(e);
    total += component_npos(comp, cedges);
  }
  return total;
}

std::string translate_sqrt(std::string s) {
  for (const auto& [from, to] :
       {std::pair<std::string, std::string>{"sqrt(2q)", "r2q"},
        {"sqrt(3q)", "r3q"}}) {
    size_t pos;
    while ((pos = s.find(from)) != std::string::npos)
      s.replace(pos, from.size(), to);
  }
  return s;
}

Int eval_expr(const std::string& expr, const Int& q) {
  return eval_group_expr(translate_sqrt(expr), q);
}

double log2_of(const Int& v) {
  long exp2 = 0;
  double m = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return double(exp2) + std::log2(m);
}

std::vector<Int> parity_samples(const std::string& family, char parity) {
  if (family == "2G2") return {Int(27), Int(243)};
  if (family == "2B2" || family == "2F4") return {Int(8), Int(32)};
  if (parity == 'o') return {Int(3), Int(5)};
  return {Int(2), Int(4)};
}

std::vector<Int> chi_samples(const std::string& family, char parity) {
  if (family == "2G2") return {Int(3), Int(27)};
  if (family == "2B2" || family == "2F4") return {Int(2), Int(8), Int(32)};
  if (parity == 'o') return {Int(3), Int(5), Int(7)};
  return {Int(2), Int(4), Int(8)};
}

Int pow_int(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

unsigned long to_ul(const Int& v) { return mpz_get_ui(v.get_mpz_t()); }

}  // namespace

// ---------------------------------------------------------------------------
// public helpers

std::string locate_data_dir() {
  std::vector<std::string> candidates;
  if (const char* env = std::getenv("IFIX_DATA_DIR")) candidates.push_back(env);
#ifdef IFIX_DATA_SOURCE_DIR
  candidates.push_back(IFIX_DATA_SOURCE_DIR);
#endif
#ifdef IFIX_DATA_INSTALL_DIR
  candidates.push_back(IFIX_DATA_INSTALL_DIR);
#endif
  for (const auto& c : candidates)
    if (std::filesystem::exists(c + "/coverage.json")) return c;
  std::string tried;
  for (const auto& c : candidates) tried += " " + c;
  throw std::runtime_error("no data directory found; tried:" + tried);
}

Rat parse_fraction(const std::string& s) {
  if (s.empty() || s.find('.') != std::string::npos)
    throw std::invalid_argument("not a fraction: " + s);
  Rat r(s);
  r.canonicalize();
  return r;
}

std::optional<int> parse_millis(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return std::nullopt;
  std::string frac = s.substr(dot + 1);
  if (frac.size() != 3 || s.substr(0, dot).empty())
    throw std::invalid_argument("expected a 3-decimal exponent: " + s);
  long whole = std::stol(s.substr(0, dot));
  return int(whole * 1000 + std::stol(frac));
}

int expr_degree(const std::string& expr) {
  try {
    return parse_order_expr(expr).degree();
  } catch (const std::exception&) {
    // quotient or numeric-only form: exact two-point evaluation
    Int q1 = pow_int(Int(2), 40), q2 = pow_int(Int(2), 50);
    Int v1 = eval_expr(expr, q1), v2 = eval_expr(expr, q2);
    if (v1 <= 0 || v2 <= 0)
      throw std::domain_error("expression not positive at large q: " + expr);
    double d = (log2_of(v2) - log2_of(v1)) / 10.0;
    return int(std::lround(d));
  }
}

Int simple_group_order(const std::string& family, const Int& q, int eps) {
  std::string name = family;
  if (family == "E6") name = eps < 0 ? "2E6" : "E6";
  Int v = group_order(name).value_int(q);
  Int z = center_order(name, q);
  if (v % z != 0) throw std::domain_error("centre does not divide order");
  return v / z;
}

Int inndiag_order(const std::string& family, const Int& q, int eps) {
  std::string name = family;
  if (family == "E6") name = eps < 0 ? "2E6" : "E6";
  return group_order(name).value_int(q);
}

int parabolic_degree(const std::string& family,
                     const std::vector<unsigned>& removed) {
  static const std::map<std::string, std::string> amb = {
      {"2B2", "B2"}, {"2G2", "G2"}, {"2F4", "F4"}, {"3D4", "D4"}, {"2E6", "E6"}};
  auto it = amb.find(family);
  const Diagram& d = ambient_diagram(it == amb.end() ? family : it->second);
  bool half = family == "2B2" || family == "2G2" || family == "2F4";
  unsigned nl;
  if ((family == "2B2" || family == "2G2") && removed.empty())
    nl = 0;  // relative rank one: the empty list denotes the Borel
  else
    nl = levi_npos(d, removed);
  unsigned deg = d.npos - nl;
  if (half) {
    if (deg % 2 != 0)
      throw std::domain_error("odd root-count difference for " + family);
    deg /= 2;
  }
  return int(deg);
}

// ---------------------------------------------------------------------------
// parsing

TableSet::TableSet(std::string dir) : dir_(std::move(dir)) {
  // tabinv
  {
    const std::string f = "tabinv.json";
    for (const auto& r : load_rows(dir_, f)) {
      InvolutionEntry e;
      e.id = s_req(r, "id", f, "");
      e.family = s_req(r, "family", f, e.id);
      e.parity = parity_field(r, f, e.id);
      e.label = s_req(r, "label", f, e.id);
      e.centralizer = s_req(r, "centralizer", f, e.id);
      if (r.contains("q_mod")) {
        e.q_mod = r["q_mod"].get<unsigned>();
        e.q_res = r["q_res"].get<unsigned>();
        if (e.q_mod == 0 || e.q_res >= e.q_mod)
          bad(f, e.id, "invalid congruence restriction");
      }
      if (r.contains("pseudo_levi")) {
        const auto& pl = r["pseudo_levi"];
        e.has_pseudo_levi = true;
        e.levi_nodes = unodes(pl.at("nodes"), f, e.id);
        e.connected_centralizer = s_opt(pl, "connected_centralizer");
        e.basis = s_opt(pl, "basis");
      }
      inv_.push_back(std::move(e));
    }
  }
  // chi_printed
  {
    const std::string f = "chi_printed.json";
    for (const auto& r : load_rows(dir_, f)) {
      ChiEntry e;
      e.id = s_req(r, "id", f, "");
      e.family = s_req(r, "family", f, e.id);
      e.parabolic = unodes(r.at("parabolic"), f, e.id);
      e.parity = parity_field(r, f, e.id);
      e.cls = s_req(r, "class", f, e.id);
      e.chi_expr = s_req(r, "chi", f, e.id);
      e.n_expr = s_req(r, "n", f, e.id);
      e.stabilizer_expr = s_opt(r, "stabilizer");
      chi_.push_back(std::move(e));
    }
  }
  // tabb_par
  {
    const std::string f = "tabb_par.json";
    for (const auto& r : load_rows(dir_, f)) {
      GammaParabolicRow e;
      e.id = s_req(r, "id", f, "");
      e.family = s_req(r, "family", f, e.id);
      e.subgroup = s_opt(r, "subgroup");
      e.parabolic = unodes(r.at("parabolic"), f, e.id);
      e.gamma = parse_fraction(s_req(r, "gamma", f, e.id));
      e.deg_n = r.at("deg_n").get<int>();
      e.conditions = s_opt(r, "conditions");
      if (r.contains("engine")) {
        EngineSpec spec;
        spec.parity = parity_field(r["engine"], f, e.id);
        for (const auto& c : r["engine"].at("classes"))
          spec.classes.push_back(c.get<std::string>());
        e.engine = std::move(spec);
      }
      gpar_.push_back(std::move(e));
    }
  }
  // tab_par1/2/3
  for (int t = 1; t <= 3; ++t) {
    const std::string f = "tab_par" + std::to_string(t) + ".json";
    auto& dst = t == 1 ? par1_ : t == 2 ? par2_ : par3_;
    for (const auto& r : load_rows(dir_, f)) {
      AlphaParabolicRow e;
      e.id = s_req(r, "id", f, "");
      e.family = s_req(r, "family", f, e.id);
      if (r.contains("node"))
        e.parabolic = {r["node"].get<unsigned>()};
      else
        e.parabolic = unodes(r.at("parabolic"), f, e.id);
      if (r.contains("alpha"))
        e.alpha = parse_fraction(s_req(r, "alpha", f, e.id));
      if (r.contains("beta")) e.beta = parse_fraction(s_req(r, "beta", f, e.id));
      e.deg_n = r.at("deg_n").get<int>();
      if (r.contains("chi_refs"))
        for (const auto& c : r["chi_refs"]) e.chi_refs.push_back(c.get<std::string>());
      dst.push_back(std::move(e));
    }
  }
  // tab_mr
  {
    const std::string f = "tab_mr.json";
    for (const auto& r : load_rows(dir_, f)) {
      TorusNormalizerRow e;
      e.id = s_req(r, "id", f, "");
      e.family = s_req(r, "family", f, e.id);
      e.torus = s_req(r, "torus", f, e.id);
      e.normalizer = s_opt(r, "normalizer");
      e.weyl_order = r.at("weyl_order").get<long>();
      e.conditions = s_opt(r, "conditions");
      for (const auto& c : r.at("checks")) {
        TorusCheck k;
        k.q = int_field(c, "q", f, e.id);
        k.torus_order = int_field(c, "torus_order", f, e.id);
        k.cls = s_req(c, "class", f, e.id);
        k.ifix = int_field(c, "ifix", f, e.id);
        auto m = parse_millis(s_req(c, "alpha", f, e.id));
        if (!m) bad(f, e.id, "torus checks carry 3-decimal exponents");
        k.alpha_millis = *m;
        e.checks.push_back(std::move(k));
      }
      mr_.push_back(std::move(e));
    }
  }
  // tab_mr20/21/22, tab_nonmr
  for (const std::string base : {"tab_mr20", "tab_mr21", "tab_mr22", "tab_nonmr"}) {
    const std::string f = base + ".json";
    for (const auto& r : load_rows(dir_, f)) {
      DegreeBoundRow e;
      e.id = s_req(r, "id", f, "");
      e.table = base;
      e.type = s_opt(r, "type");
      e.conditions = s_opt(r, "conditions");
      e.note = s_opt(r, "note");
      e.flag = s_opt(r, "flag");
      e.gamma = parse_fraction(s_req(r, "gamma", f, e.id));
      if (r.contains("gamma_from_f"))
        e.gamma_from_f = parse_fraction(s_req(r, "gamma_from_f", f, e.id));
      auto read_variant = [&](const json& src, const DegreeVariant* base_v) {
        DegreeVariant v;
        if (base_v) v = *base_v;
        if (src.contains("family")) v.family = src["family"].get<std::string>();
        if (src.contains("h_order")) v.h_order = src["h_order"].get<std::string>();
        if (src.contains("dim_hbar")) v.dim_hbar = src["dim_hbar"].get<int>();
        if (src.contains("target")) v.target = src["target"].get<std::string>();
        if (src.contains("f_options")) {
          v.options.clear();
          for (const auto& o : src["f_options"])
            v.options.push_back(
                {s_req(o, "inv", f, e.id), s_req(o, "f", f, e.id)});
        } else if (src.contains("f")) {
          v.options = {{s_opt(src, "inv"), src["f"].get<std::string>()}};
        }
        return v;
      };
      e.plus = read_variant(r, nullptr);
      if (e.plus.family.empty()) bad(f, e.id, "missing family");
      if (e.plus.target.empty()) bad(f, e.id, "missing target");
      if (e.plus.options.empty()) bad(f, e.id, "missing f");
      if (e.plus.h_order.empty() && e.plus.dim_hbar < 0)
        bad(f, e.id, "need h_order or dim_hbar");
      if (r.contains("minus")) e.minus = read_variant(r["minus"], &e.plus);
      deg_.push_back(std::move(e));
    }
  }
  // ratio tables
  for (const std::string base :
       {"tabb_loc", "tabb_as", "tabb_sub", "tab_alb", "tab_fin"}) {
    const std::string f = base + ".json";
    for (const auto& r : load_rows(dir_, f)) {
      RatioRow e;
      e.id = s_req(r, "id", f, "");
      e.table = base;
      e.family = s_req(r, "family", f, e.id);
      e.h0_desc = s_opt(r, "h0");
      e.kind = s_req(r, "kind", f, e.id);
      e.conditions = s_opt(r, "conditions");
      if (e.kind == "const") {
        e.a = int_field(r, "a", f, e.id);
        e.h0_order = int_field(r, "h0_order", f, e.id);
        e.target = s_req(r, "target", f, e.id);
      } else if (e.kind == "samefield" || e.kind == "subfield") {
        e.h0_name = s_req(r, "h0_name", f, e.id);
        const char* ak_odd = e.kind == "subfield" ? "a0_expr_odd" : "a_expr_odd";
        const char* ak_even = e.kind == "subfield" ? "a0_expr_even" : "a_expr_even";
        e.a_expr_odd = s_opt(r, ak_odd);
        e.a_expr_even = s_opt(r, ak_even);
        e.target_odd = s_opt(r, "target_odd");
        e.target_even = s_opt(r, "target_even");
        if (e.a_expr_odd.empty() && e.a_expr_even.empty())
          bad(f, e.id, "no class-count expression");
        if (e.a_expr_odd.empty() != e.target_odd.empty() ||
            e.a_expr_even.empty() != e.target_even.empty())
          bad(f, e.id, "class-count expressions and targets must pair up");
      } else {
        bad(f, e.id, "unknown kind " + e.kind);
      }
      e.alpha = s_opt(r, "alpha");
      e.alpha_odd = s_opt(r, "alpha_odd");
      e.alpha_even = s_opt(r, "alpha_even");
      if (r.contains("upper"))
        e.upper = parse_fraction(s_req(r, "upper", f, e.id));
      if (r.contains("beta")) e.beta = parse_fraction(s_req(r, "beta", f, e.id));
      if (r.contains("degree_ratio_odd"))
        e.degree_ratio_odd = parse_fraction(s_req(r, "degree_ratio_odd", f, e.id));
      if (r.contains("degree_ratio_even"))
        e.degree_ratio_even =
            parse_fraction(s_req(r, "degree_ratio_even", f, e.id));
      if (r.contains("closed_forms")) {
        e.fix_closed_form = s_req(r["closed_forms"], "fix", f, e.id);
        e.n_closed_form = s_req(r["closed_forms"], "n", f, e.id);
      }
      for (const auto& s : r.at("samples")) {
        RatioSample m;
        m.q = int_field(s, "q", f, e.id);
        if (s.contains("q0")) m.q0 = int_field(s, "q0", f, e.id);
        if (s.contains("eps")) m.eps = s["eps"].get<int>();
        m.fix = int_field(s, "fix", f, e.id);
        if (s.contains("attains")) m.attains = s["attains"].get<bool>();
        if (s.contains("above49")) m.above49 = s["above49"].get<bool>();
        if (m.q < 2 || m.fix < 1) bad(f, e.id, "degenerate sample");
        if (e.kind == "subfield" && m.q0 == 0) bad(f, e.id, "subfield sample needs q0");
        e.samples.push_back(std::move(m));
      }
      if (e.samples.empty()) bad(f, e.id, "no samples");
      ratio_.push_back(std::move(e));
    }
  }
  // tab_main, tab_main2
  for (const std::string base : {"tab_main", "tab_main2"}) {
    const std::string f = base + ".json";
    auto& dst = base == "tab_main" ? main_ : main2_;
    for (const auto& r : load_rows(dir_, f)) {
      XrefRow e;
      e.id = s_req(r, "id", f, "");
      e.family = s_req(r, "family", f, e.id);
      e.subgroup = base == "tab_main" ? s_req(r, "subgroup", f, e.id)
                                      : s_req(r, "type", f, e.id);
      e.value = base == "tab_main" ? s_req(r, "alpha", f, e.id)
                                   : s_req(r, "beta", f, e.id);
      e.conditions = s_opt(r, "conditions");
      const auto& x = r.at("xref");
      e.xref_table = s_req(x, "table", f, e.id);
      e.xref_row = s_req(x, "row", f, e.id);
      e.xref_field = s_req(x, "field", f, e.id);
      dst.push_back(std::move(e));
    }
  }
  // tab_main3
  {
    const std::string f = "tab_main3.json";
    for (const auto& r : load_rows(dir_, f)) {
      DimSummaryRow e;
      e.id = s_req(r, "id", f, "");
      e.rec.ambient = s_req(r, "group", f, e.id);
      e.rec.subgroup = s_req(r, "subgroup", f, e.id);
      e.rec.condition = s_opt(r, "conditions");
      const auto& d = r.at("dims");
      e.rec.dim_g = d.at("dim_g").get<int>();
      e.rec.dim_h = d.at("dim_h").get<int>();
      e.rec.dim_class = d.at("dim_class").get<int>();
      e.rec.dim_class_in_h = d.at("dim_meet").get<int>();
      e.expected_dim = d.at("ifix").get<int>();
      e.gamma = parse_fraction(s_req(r, "gamma", f, e.id));
      main3_.push_back(std::move(e));
    }
  }
  // tab_small
  {
    const std::string f = "tab_small.json";
    for (const auto& r : load_rows(dir_, f)) {
      SmallActionRow e;
      e.id = s_req(r, "id", f, "");
      e.family = s_req(r, "family", f, e.id);
      e.group = s_req(r, "group", f, e.id);
      e.subgroup = s_opt(r, "subgroup");
      e.q = int_field(r, "q", f, e.id);
      const auto& o = r.at("oracle");
      e.oracle.stabilizer = s_req(o, "stabilizer", f, e.id);
      e.oracle.parameter = o.at("parameter").get<unsigned>();
      e.n = r.at("n").get<long>();
      e.ifix = r.at("ifix").get<long>();
      e.alpha = s_req(r, "alpha", f, e.id);
      e.chi_ref = s_opt(r, "chi_ref");
      small_.push_back(std::move(e));
    }
  }
  // oracle_groups
  {
    const std::string f = "oracle_groups.json";
    for (const auto& r : load_rows(dir_, f)) {
      GeneratorSet g;
      g.id = s_req(r, "id", f, "");
      g.p = r.at("p").get<unsigned>();
      g.k = r.at("k").get<unsigned>();
      g.dim = r.at("dim").get<unsigned>();
      g.expected_order = r.at("expected_order").get<size_t>();
      for (const auto& m : r.at("matrices")) {
        std::vector<unsigned> row;
        for (const auto& v : m) row.push_back(v.get<unsigned>());
        g.matrices.push_back(std::move(row));
      }
      gens_.push_back(std::move(g));
    }
  }
  // coverage
  {
    std::ifstream in(dir_ + "/coverage.json");
    if (!in) throw std::runtime_error("cannot open coverage.json");
    json j;
    in >> j;
    for (const std::string key : {"theorem_tables", "supporting_files"}) {
      for (const auto& r : j.at(key)) {
        CoverageFile e;
        e.name = s_req(r, "name", "coverage.json", "");
        e.file = s_req(r, "file", "coverage.json", e.name);
        for (const auto& v : r.at("row_ids"))
          e.row_ids.push_back(v.get<std::string>());
        e.theorem_table = key == "theorem_tables";
        cov_.push_back(std::move(e));
      }
    }
    for (const auto& r : j.at("out_of_scope")) {
      OutOfScopeEntry e;
      e.name = s_req(r, "name", "coverage.json", "");
      e.reason = s_req(r, "reason", "coverage.json", e.name);
      oos_.push_back(std::move(e));
    }
  }
}

const TableSet& TableSet::bundled() {
  static TableSet ts(locate_data_dir());
  return ts;
}

// ---------------------------------------------------------------------------
// accessors

std::vector<const InvolutionEntry*> TableSet::involution_classes(
    const std::string& family, char parity) const {
  std::vector<const InvolutionEntry*> out;
  for (const auto& e : inv_)
    if (e.family == family && e.parity == parity) out.push_back(&e);
  return out;
}

std::vector<const InvolutionEntry*> TableSet::target_classes(
    const std::string& family, const std::string& prefix) const {
  std::vector<const InvolutionEntry*> out;
  for (const auto& e : inv_)
    if (e.family == family && (e.label == prefix || e.label == prefix + "'"))
      out.push_back(&e);
  if (out.empty())
    throw std::out_of_range("no class " + prefix + " in " + family);
  return out;
}

const InvolutionEntry& TableSet::involution(const std::string& family,
                                            char parity,
                                            const std::string& label) const {
  for (const auto& e : inv_)
    if (e.family == family && e.parity == parity && e.label == label) return e;
  throw std::out_of_range("no class " + label + " in " + family);
}

InvolutionRecord TableSet::engine_record(const InvolutionEntry& e) const {
  if (!e.has_pseudo_levi)
    throw std::invalid_argument(e.id + " has no pseudo-Levi data");
  InvolutionRecord r;
  r.label = e.label;
  r.has_pseudo_levi = true;
  r.pseudo_levi = e.levi_nodes;
  r.centralizer = e.connected_centralizer.empty() ? e.centralizer
                                                  : e.connected_centralizer;
  r.q_mod = e.q_mod ? e.q_mod : 2;
  r.q_res = e.q_mod ? e.q_res : 1;
  return r;
}

InvolutionClassRecord TableSet::class_record(const InvolutionEntry& e) const {
  InvolutionClassRecord r;
  r.family = e.family;
  r.parity = e.parity;
  r.label = e.label;
  r.centralizer = parse_order_expr(e.centralizer);
  r.q_mod = e.q_mod;
  r.q_res = e.q_res;
  return r;
}

const ChiEntry& TableSet::chi(const std::string& id) const {
  for (const auto& e : chi_)
    if (e.id == id) return e;
  throw std::out_of_range("no chi row " + id);
}

const std::vector<AlphaParabolicRow>& TableSet::alpha_parabolic(int table) const {
  switch (table) {
    case 1: return par1_;
    case 2: return par2_;
    case 3: return par3_;
  }
  throw std::out_of_range("parabolic tables are numbered 1..3");
}

// ---------------------------------------------------------------------------
// validation gates

struct TableGates {
  const TableSet& ts;
  std::vector<CheckResult> out;

  void record(const std::string& table, const std::string& row,
              const std::string& what, bool pass, std::string detail = {}) {
    out.push_back({table, row, what, pass, pass ? std::string() : detail});
  }

  template <typename Fn>
  void guarded(const std::string& table, const std::string& row, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      record(table, row, "exception", false, e.what());
    }
  }

  // -- tabinv --
  void tabinv() {
    for (const auto& e : ts.involutions())
      guarded("tabinv", e.id, [&] {
        FactoredOrder cent = parse_order_expr(e.centralizer);
        record("tabinv", e.id, "centralizer parses", cent.degree() >= 0);
        QPoly cls = class_size(ts.class_record(e));
        record("tabinv", e.id, "class size divides the group order",
               cls.degree() >= 0);
        for (const Int& q : parity_samples(e.family, e.parity)) {
          if (e.q_mod && q % e.q_mod != e.q_res) continue;
          Int v = cls.eval_int(q);
          record("tabinv", e.id, "class size positive at q=" + q.get_str(),
                 v > 0);
        }
        if (e.has_pseudo_levi)
          record("tabinv", e.id, "pseudo-Levi node budget",
                 e.levi_nodes.size() <= 8);
      });
  }

  // -- chi_printed --
  void chi_printed() {
    for (const auto& e : ts.chi_rows())
      guarded("chi_printed", e.id, [&] {
        for (const Int& q : chi_samples(e.family, e.parity)) {
          Int n = eval_expr(e.n_expr, q);
          if (!e.stabilizer_expr.empty()) {
            Int stab = eval_expr(e.stabilizer_expr, q);
            record("chi_printed", e.id, "n * stabilizer = |G| at q=" + q.get_str(),
                   n * stab == inndiag_order(e.family, q));
          } else {
            record("chi_printed", e.id, "n integral at q=" + q.get_str(), n > 0);
          }
          Int c = eval_expr(e.chi_expr, q);
          record("chi_printed", e.id, "0 <= chi <= n at q=" + q.get_str(),
                 c >= 0 && c <= n);
        }
      });
  }

  // -- parabolic exponent tables --
  void check_ref_degrees(const std::string& table, const std::string& id,
                         const std::string& family,
                         const std::vector<unsigned>& parabolic, int deg_n,
                         const std::optional<Rat>& alpha,
                         const std::optional<Rat>& beta,
                         const std::vector<std::string>& refs) {
    std::vector<int> degs, even_degs;
    for (const auto& rid : refs) {
      const ChiEntry& c = ts.chi(rid);
      record(table, id, "ref " + rid + " matches the parabolic",
             c.family == family && c.parabolic == parabolic);
      int d = expr_degree(c.chi_expr);
      degs.push_back(d);
      if (c.parity == 'e') even_degs.push_back(d);
    }
    if (alpha) {
      Rat v = *alpha * deg_n;
      record(table, id, "alpha * deg n integral", v.get_den() == 1);
      if (!even_degs.empty())
        record(table, id, "alpha matches the largest even-q count degree",
               v == *std::max_element(even_degs.begin(), even_degs.end()),
               "alpha*deg_n=" + v.get_str());
    }
    if (beta) {
      Rat v = *beta * deg_n;
      record(table, id, "beta * deg n integral", v.get_den() == 1);
      if (!degs.empty())
        record(table, id, "beta matches the least count degree",
               v == *std::min_element(degs.begin(), degs.end()),
               "beta*deg_n=" + v.get_str());
    }
  }

  void par_tables() {
    for (int t = 1; t <= 3; ++t) {
      std::string table = "tab_par" + std::to_string(t);
      for (const auto& e : ts.alpha_parabolic(t))
        guarded(table, e.id, [&] {
          record(table, e.id, "deg n from the root system",
                 parabolic_degree(e.family, e.parabolic) == e.deg_n,
                 "expected " + std::to_string(e.deg_n));
          check_ref_degrees(table, e.id, e.family, e.parabolic, e.deg_n,
                            e.alpha, e.beta, e.chi_refs);
        });
    }
    for (const auto& e : ts.gamma_parabolic())
      guarded("tabb_par", e.id, [&] {
        record("tabb_par", e.id, "deg n from the root system",
               parabolic_degree(e.family, e.parabolic) == e.deg_n);
        Rat v = e.gamma * e.deg_n;
        record("tabb_par", e.id, "gamma * deg n integral", v.get_den() == 1);
        if (e.engine) {
          for (const auto& cls : e.engine->classes)
            record("tabb_par", e.id, "engine class " + cls + " resolves",
                   !ts.target_classes(e.family, cls).empty());
        } else {
          bool odd_only = e.conditions.find("q odd") != std::string::npos;
          std::vector<int> degs;
          for (const auto& c : ts.chi_rows())
            if (c.family == e.family && c.parabolic == e.parabolic &&
                (!odd_only || c.parity == 'o'))
              degs.push_back(expr_degree(c.chi_expr));
          record("tabb_par", e.id, "printed counts exist", !degs.empty());
          if (!degs.empty())
            record("tabb_par", e.id, "gamma matches the largest count degree",
                   v == *std::max_element(degs.begin(), degs.end()));
        }
      });
  }

  // -- torus normalizer rows --
  void tab_mr() {
    for (const auto& e : ts.torus_normalizers())
      guarded("tab_mr", e.id, [&] {
        for (const auto& k : e.checks) {
          std::string at = " at q=" + k.q.get_str();
          Int S = eval_expr(e.torus, k.q);
          record("tab_mr", e.id, "torus order" + at, S == k.torus_order,
                 S.get_str());
          Int T = inndiag_order(e.family, k.q);
          Int den = S * e.weyl_order;
          record("tab_mr", e.id, "degree integral" + at, T % den == 0);
          Int n = T / den;
          char parity = k.q % 2 == 0 ? 'e' : 'o';
          const InvolutionEntry& cls = ts.involution(e.family, parity, k.cls);
          Int C = eval_expr(cls.centralizer, k.q);
          record("tab_mr", e.id, "class size integral" + at, T % C == 0);
          Int b = T / C;
          record("tab_mr", e.id, "fixity equals centralizer over Weyl" + at,
                 C % e.weyl_order == 0 && k.ifix == C / e.weyl_order,
                 "C=" + C.get_str());
          record("tab_mr", e.id, "class members in the normalizer integral" + at,
                 (k.ifix * b) % n == 0);
          Int a = k.ifix * b / n;
          record("tab_mr", e.id, "member count within the normalizer" + at,
                 a >= 1 && a <= den);
          record("tab_mr", e.id, "exponent lower bound" + at,
                 compare_pow(k.ifix, 1000, n, k.alpha_millis) > 0);
          record("tab_mr", e.id, "exponent upper bound" + at,
                 compare_pow(k.ifix, 1000, n, k.alpha_millis + 1) <= 0);
        }
      });
  }

  // -- degree rows --
  void degree_rows() {
    for (const auto& e : ts.degree_bounds())
      guarded(e.table, e.id, [&] {
        bool flagged = !e.flag.empty();
        record(e.table, e.id, "flag carries the recomputed exponent",
               flagged == e.gamma_from_f.has_value());
        if (flagged) {
          bool dir_ok = e.flag == "conservative"
                            ? e.gamma < *e.gamma_from_f
                            : e.flag == "stated-exceeds-derived" &&
                                  e.gamma > *e.gamma_from_f;
          record(e.table, e.id, "flag direction", dir_ok, e.flag);
        }
        Rat expect = e.gamma_from_f ? *e.gamma_from_f : e.gamma;
        std::vector<const DegreeVariant*> variants{&e.plus};
        if (e.minus) variants.push_back(&*e.minus);
        for (const DegreeVariant* v : variants) {
          std::string side = v == &e.plus ? "" : " (minus form)";
          int degT = group_order(v->family).degree();
          int degh = v->h_order.empty() ? v->dim_hbar
                                        : expr_degree(v->h_order);
          record(e.table, e.id, "stabilizer degree below ambient" + side,
                 degh > 0 && degh < degT);
          auto targets = ts.target_classes(v->family, v->target);
          std::set<int> cdeg;
          std::set<char> par;
          for (const auto* t : targets) {
            cdeg.insert(expr_degree(t->centralizer));
            par.insert(t->parity);
          }
          record(e.table, e.id, "target degree well defined" + side,
                 cdeg.size() == 1 && par.size() == 1);
          int degC = *cdeg.begin();
          Rat best(-1);
          for (const auto& o : v->options) {
            int degf = expr_degree(o.f);
            record(e.table, e.id, "bound degree below centralizer" + side,
                   degf <= degC, o.f);
            for (const Int& q : parity_samples(v->family, *par.begin()))
              record(e.table, e.id,
                     "bound positive at q=" + q.get_str() + side,
                     eval_expr(o.f, q) > 0);
            Rat g(degC - degf, degT - degh);
            g.canonicalize();
            best = std::max(best, g);
          }
          record(e.table, e.id, "exponent recomputed from degrees" + side,
                 best == expect,
                 "derived " + best.get_str() + " stated " + expect.get_str());
        }
      });
  }

  // -- ratio rows --
  std::string applicable_alpha(const RatioRow& e, char parity) {
    if (!e.alpha.empty()) return e.alpha;
    return parity == 'o' ? e.alpha_odd : e.alpha_even;
  }

  void ratio_rows() {
    for (const auto& e : ts.ratio_rows())
      guarded(e.table, e.id, [&] {
        int degT = group_order(e.family).degree();
        // per-parity degree identities
        for (char parity : {'o', 'e'}) {
          if (e.kind == "const") break;
          const std::string& ae = parity == 'o' ? e.a_expr_odd : e.a_expr_even;
          const std::string& tg = parity == 'o' ? e.target_odd : e.target_even;
          if (ae.empty()) continue;
          int degC = expr_degree(ts.involution(e.family, parity, tg).centralizer);
          std::string side = parity == 'o' ? " (odd q)" : " (even q)";
          if (e.kind == "subfield") {
            record(e.table, e.id, "class-count degree identity" + side,
                   expr_degree(ae) == degT - degC);
          } else {
            int degh = expr_degree(e.h0_name);
            Rat dr(expr_degree(ae) + degC - degh, degT - degh);
            dr.canonicalize();
            const auto& printed =
                parity == 'o' ? e.degree_ratio_odd : e.degree_ratio_even;
            if (printed)
              record(e.table, e.id, "degree ratio" + side, dr == *printed,
                     dr.get_str());
          }
        }
        if (e.beta) {
          Rat lo(2);
          if (e.kind == "subfield") {
            for (char parity : {'o', 'e'}) {
              const std::string& tg =
                  parity == 'o' ? e.target_odd : e.target_even;
              if (tg.empty()) continue;
              Rat r(expr_degree(ts.involution(e.family, parity, tg).centralizer),
                    degT);
              r.canonicalize();
              lo = std::min(lo, r);
            }
          } else {
            if (e.degree_ratio_odd) lo = std::min(lo, *e.degree_ratio_odd);
            if (e.degree_ratio_even) lo = std::min(lo, *e.degree_ratio_even);
          }
          record(e.table, e.id, "liminf exponent from degrees", lo == *e.beta,
                 lo.get_str());
        }
        // per-sample exact counts
        for (const auto& s : e.samples) {
          char parity = s.q % 2 == 0 ? 'e' : 'o';
          std::string at = " at q=" + s.q.get_str() +
                           (s.q0 != 0 ? ",q0=" + s.q0.get_str() : "");
          std::string family_eff = e.family;
          if (e.family == "E6" && s.eps < 0) family_eff = "2E6";
          std::string target =
              e.kind == "const" ? e.target
                                : (parity == 'o' ? e.target_odd : e.target_even);
          record(e.table, e.id, "sample parity covered" + at, !target.empty());
          if (target.empty()) continue;
          const InvolutionEntry& cls = ts.involution(family_eff, parity, target);
          Int C = eval_expr(cls.centralizer, s.q);
          Int a_val, h0_val;
          if (e.kind == "const") {
            a_val = e.a;
            h0_val = e.h0_order;
          } else {
            const Int& base_q = e.kind == "subfield" ? s.q0 : s.q;
            a_val = eval_expr(parity == 'o' ? e.a_expr_odd : e.a_expr_even,
                              base_q);
            h0_val = eval_expr(e.h0_name, base_q);
          }
          Int Ts = simple_group_order(e.family, s.q, s.eps);
          record(e.table, e.id, "degree integral" + at, Ts % h0_val == 0);
          Int n = Ts / h0_val;
          Int ind = inndiag_order(e.family, s.q, s.eps);
          record(e.table, e.id, "class size integral" + at, ind % C == 0);
          Int b = ind / C;
          record(e.table, e.id, "count identity" + at, a_val * n == s.fix * b,
                 "a=" + a_val.get_str() + " n=" + n.get_str() +
                     " fix=" + s.fix.get_str() + " cls=" + b.get_str());
          if (!e.fix_closed_form.empty()) {
            record(e.table, e.id, "closed form for the count" + at,
                   eval_expr(e.fix_closed_form, s.q) == s.fix);
            record(e.table, e.id, "closed form for the degree" + at,
                   eval_expr(e.n_closed_form, s.q) == n);
          }
          std::string alpha = applicable_alpha(e, parity);
          record(e.table, e.id, "exponent present" + at, !alpha.empty());
          if (alpha == "0") {
            record(e.table, e.id, "single fixed point" + at, s.fix == 1);
          } else if (auto m = parse_millis(alpha)) {
            record(e.table, e.id, "exponent lower bound" + at,
                   compare_pow(s.fix, 1000, n, *m) > 0);
            if (s.attains)
              record(e.table, e.id, "exponent attained" + at,
                     compare_pow(s.fix, 1000, n, *m + 1) <= 0);
          } else if (!alpha.empty()) {
            Rat r = parse_fraction(alpha);
            record(e.table, e.id, "exponent lower bound" + at,
                   compare_pow(s.fix, to_ul(r.get_den()), n,
                               to_ul(r.get_num())) > 0);
            if (s.attains)
              record(e.table, e.id, "exponent attained" + at, false,
                     "attained samples need a decimal exponent");
          }
          if (e.upper)
            record(e.table, e.id, "upper exponent bound" + at,
                   compare_pow(s.fix, to_ul(e.upper->get_den()), n,
                               to_ul(e.upper->get_num())) < 0);
          if (s.above49)
            record(e.table, e.id, "four-ninths comparison" + at,
                   (compare_pow(s.fix, 9, n, 4) > 0) == *s.above49);
        }
      });
  }

  // -- summary cross references --
  const TorusNormalizerRow* find_mr(const std::string& id) {
    for (const auto& r : ts.torus_normalizers())
      if (r.id == id) return &r;
    return nullptr;
  }
  const RatioRow* find_ratio(const std::string& id) {
    for (const auto& r : ts.ratio_rows())
      if (r.id == id) return &r;
    return nullptr;
  }

  void xref(const std::string& table, const XrefRow& e) {
    guarded(table, e.id, [&] {
      const std::string& t = e.xref_table;
      const std::string& field = e.xref_field;
      bool ok = false;
      std::string detail = t + "/" + e.xref_row + "/" + field;
      if (t == "tab_mr" && field == "alpha_min") {
        const auto* r = find_mr(e.xref_row);
        if (r) {
          int lo = r->checks.front().alpha_millis;
          for (const auto& k : r->checks) lo = std::min(lo, k.alpha_millis);
          auto m = parse_millis(e.value);
          ok = m && *m == lo;
        }
      } else if (t == "chi_printed" && field == "chi_degree_zero") {
        const ChiEntry& c = ts.chi(e.xref_row);
        ok = expr_degree(c.chi_expr) == 0 && e.value == "0";
      } else if (t == "tabb_par" && field == "gamma") {
        for (const auto& r : ts.gamma_parabolic())
          if (r.id == e.xref_row) ok = parse_fraction(e.value) == r.gamma;
      } else if ((t == "tab_nonmr" || t == "tab_mr20" || t == "tab_mr21" ||
                  t == "tab_mr22") &&
                 field == "gamma") {
        for (const auto& r : ts.degree_bounds())
          if (r.id == e.xref_row) ok = parse_fraction(e.value) == r.gamma;
      } else if (t == "tab_small" && field == "alpha") {
        for (const auto& r : ts.small_rows())
          if (r.id == e.xref_row) ok = r.alpha == e.value;
      } else if (const RatioRow* r = find_ratio(e.xref_row)) {
        std::string v = field == "alpha"        ? r->alpha
                        : field == "alpha_odd"  ? r->alpha_odd
                        : field == "alpha_even" ? r->alpha_even
                                                : std::string();
        ok = !v.empty() && v == e.value;
      }
      record(table, e.id, "cross reference agrees", ok, detail);
    });
  }

  void summaries() {
    for (const auto& e : ts.main_rows()) xref("tab_main", e);
    for (const auto& e : ts.main2_rows()) xref("tab_main2", e);
    for (const auto& e : ts.dim_rows())
      guarded("tab_main3", e.id, [&] {
        record("tab_main3", e.id, "fixed-space dimension",
               fixed_dim(e.rec) == e.expected_dim);
        record("tab_main3", e.id, "dimension exponent", gamma(e.rec) == e.gamma);
      });
  }

  // -- small actions and oracle generators --
  void small_rows() {
    for (const auto& e : ts.small_rows())
      guarded("tab_small", e.id, [&] {
        bool known = true;
        try {
          builtin_group(e.group);
        } catch (const std::exception&) {
          known = false;
        }
        record("tab_small", e.id, "group available", known, e.group);
        record("tab_small", e.id, "stabilizer kind known",
               e.oracle.stabilizer == "sylow-normalizer" ||
                   e.oracle.stabilizer == "cyclic-normalizer");
        record("tab_small", e.id, "degree and fixity positive",
               e.n >= 2 && e.ifix >= 1 && e.ifix <= e.n);
        if (e.alpha != "0") {
          auto m = parse_millis(e.alpha);
          record("tab_small", e.id, "exponent lower bound",
                 m && compare_pow(Int(e.ifix), 1000, Int(e.n), *m) > 0);
          record("tab_small", e.id, "exponent upper bound",
                 m && compare_pow(Int(e.ifix), 1000, Int(e.n), *m + 1) <= 0);
        } else {
          record("tab_small", e.id, "single fixed point", e.ifix == 1);
        }
        if (!e.chi_ref.empty()) {
          const ChiEntry& c = ts.chi(e.chi_ref);
          record("tab_small", e.id, "count matches the printed formula",
                 eval_expr(c.chi_expr, e.q) == e.ifix &&
                     eval_expr(c.n_expr, e.q) == e.n);
        }
      });
  }

  void oracle_groups() {
    for (const auto& g : ts.oracle_groups())
      guarded("oracle_groups", g.id, [&] {
        GeneratorSet b = builtin_group(g.id);
        record("oracle_groups", g.id, "field parameters match",
               b.p == g.p && b.k == g.k && b.dim == g.dim);
        record("oracle_groups", g.id, "expected order matches",
               b.expected_order == g.expected_order);
        record("oracle_groups", g.id, "generator matrices match",
               b.matrices == g.matrices);
      });
  }

  void run(const std::string& only) {
    auto want = [&](const std::string& t) { return only.empty() || only == t; };
    if (want("tabinv")) tabinv();
    if (want("chi_printed")) chi_printed();
    if (want("tabb_par") || want("tab_par1") || want("tab_par2") ||
        want("tab_par3")) {
      if (only.empty())
        par_tables();
      else {
        // filtered run: reuse the full pass and drop other tables
        TableGates sub{ts};
        sub.par_tables();
        for (auto& r : sub.out)
          if (r.table == only) out.push_back(std::move(r));
      }
    }
    if (want("tab_mr")) tab_mr();
    if (only.empty()) {
      degree_rows();
      ratio_rows();
      summaries();
      small_rows();
      oracle_groups();
    } else {
      if (only == "tab_mr20" || only == "tab_mr21" || only == "tab_mr22" ||
          only == "tab_nonmr") {
        TableGates sub{ts};
        sub.degree_rows();
        for (auto& r : sub.out)
          if (r.table == only) out.push_back(std::move(r));
      }
      if (only == "tabb_loc" || only == "tabb_as" || only == "tabb_sub" ||
          only == "tab_alb" || only == "tab_fin") {
        TableGates sub{ts};
        sub.ratio_rows();
        for (auto& r : sub.out)
          if (r.table == only) out.push_back(std::move(r));
      }
      if (only == "tab_main" || only == "tab_main2" || only == "tab_main3") {
        TableGates sub{ts};
        sub.summaries();
        for (auto& r : sub.out)
          if (r.table == only) out.push_back(std::move(r));
      }
      if (only == "tab_small") small_rows();
      if (only == "oracle_groups") oracle_groups();
    }
  }
};

const std::vector<std::string>& TableSet::table_names() {
  static const std::vector<std::string> names = {
      "tabinv",   "chi_printed", "tabb_par", "tab_par1", "tab_par2",
      "tab_par3", "tab_mr",      "tab_mr20", "tab_mr21", "tab_mr22",
      "tab_nonmr", "tabb_loc",   "tabb_sub", "tabb_as",  "tab_alb",
      "tab_fin",  "tab_main",    "tab_main2", "tab_main3", "tab_small",
      "oracle_groups"};
  return names;
}

std::vector<CheckResult> TableSet::validate(const std::string& table) const {
  if (!table.empty()) {
    const auto& names = table_names();
    if (std::find(names.begin(), names.end(), table) == names.end())
      throw std::invalid_argument("unknown table " + table);
  }
  TableGates g{*this};
  g.run(table);
  return std::move(g.out);
}

std::vector<CheckResult> TableSet::audit_coverage() const {
  std::vector<CheckResult> out;
  std::set<std::string> listed{"coverage.json"};
  for (const auto& e : cov_) {
    listed.insert(e.file);
    try {
      json j = load_file(dir_, e.file);
      std::vector<std::string> ids;
      for (const auto& r : j["rows"])
        ids.push_back(r.at("id").get<std::string>());
      bool ok = ids == e.row_ids;
      out.push_back({"coverage", e.name, "row ids match the manifest", ok,
                     ok ? "" : e.file});
    } catch (const std::exception& ex) {
      out.push_back({"coverage", e.name, "file loads", false, ex.what()});
    }
  }
  std::set<std::string> actual;
  for (const auto& p : std::filesystem::directory_iterator(dir_))
    if (p.path().extension() == ".json")
      actual.insert(p.path().filename().string());
  std::string diff;
  for (const auto& f : actual)
    if (!listed.count(f)) diff += " unlisted:" + f;
  for (const auto& f : listed)
    if (!actual.count(f)) diff += " missing:" + f;
  out.push_back({"coverage", "", "directory matches the manifest", diff.empty(),
                 diff});
  for (const auto& e : oos_)
    out.push_back({"coverage", e.name, "exclusion carries a reason",
                   !e.reason.empty(), ""});
  return out;
}

}  // namespace ifix
