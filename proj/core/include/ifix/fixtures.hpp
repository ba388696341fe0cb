#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ifix/algdim.hpp"
#include "ifix/fixity.hpp"
#include "ifix/lieorders.hpp"
#include "ifix/oracle.hpp"

namespace ifix {

// Directory holding the bundled JSON tables.  Resolution order: the
// IFIX_DATA_DIR environment variable, then the source-tree data directory
// recorded at build time, then the install location.  The first candidate
// containing coverage.json wins; throws std::runtime_error if none does.
std::string locate_data_dir();

// "3/7" or "19" as an exact rational; throws on anything else.
Rat parse_fraction(const std::string& s);
// Decimal exponents are printed with three digits: "0.427" -> 427.
// Returns nullopt for fraction-shaped strings.
std::optional<int> parse_millis(const std::string& s);

// Degree of a multiplicative order expression: symbolic parse when the
// grammar allows it, otherwise an exact two-point evaluation at large q.
int expr_degree(const std::string& expr);

// Order of the simple group of the named exceptional family at q (the
// generic order divided by the centre of the universal form).  eps picks
// the form for E6: +1 untwisted, -1 quasi-split twisted.
Int simple_group_order(const std::string& family, const Int& q, int eps = +1);
// Order of the group of inner-diagonal automorphisms (the generic order).
Int inndiag_order(const std::string& family, const Int& q, int eps = +1);

// Degree of the coset-count polynomial |G/P|_q for the parabolic obtained
// by deleting the listed nodes, computed from positive-root counts of the
// ambient diagram.  Handles G2, F4, E6, E7, E8 and the twisted families
// 2B2, 2G2, 2F4, 3D4, 2E6; for the rank-one twisted families an empty node
// list denotes the Borel subgroup.
int parabolic_degree(const std::string& family, const std::vector<unsigned>& removed);

// ---------------------------------------------------------------------------
// Typed rows mirroring the JSON files.

// tabinv.json: involution classes of the ambient exceptional groups.
struct InvolutionEntry {
  std::string id;
  std::string family;  // order-catalogue name
  char parity = 'o';   // 'o' odd q, 'e' even q
  std::string label;
  std::string centralizer;  // order expression
  unsigned q_mod = 0, q_res = 0;
  bool has_pseudo_levi = false;
  std::vector<unsigned> levi_nodes;        // 0 = affine node
  std::string connected_centralizer;       // empty: centralizer is connected
  std::string basis;                       // how the node set was fixed
};

// chi_printed.json: fixed-point counts on parabolic coset spaces, stored as
// expressions; stabilizer_expr may be empty when n is given as a quotient.
struct ChiEntry {
  std::string id;
  std::string family;
  std::vector<unsigned> parabolic;  // deleted nodes
  char parity = 'o';
  std::string cls;
  std::string chi_expr, n_expr, stabilizer_expr;
};

// tabb_par.json: growth exponents of parabolic actions, with the engine
// recipe (ambient classes to scan) where the Weyl machinery applies.
struct EngineSpec {
  char parity = 'o';
  std::vector<std::string> classes;
};
struct GammaParabolicRow {
  std::string id, family, subgroup;
  std::vector<unsigned> parabolic;
  Rat gamma;
  int deg_n = 0;
  std::string conditions;
  std::optional<EngineSpec> engine;
};

// tab_par1/2/3.json: upper/lower exponents per parabolic.
struct AlphaParabolicRow {
  std::string id, family;
  std::vector<unsigned> parabolic;
  std::optional<Rat> alpha, beta;
  int deg_n = 0;
  std::vector<std::string> chi_refs;
};

// tab_mr.json: torus-normalizer actions with exact spot values.
struct TorusCheck {
  Int q;
  Int torus_order;
  std::string cls;
  Int ifix;
  int alpha_millis = 0;
};
struct TorusNormalizerRow {
  std::string id, family;
  std::string torus;       // order expression (may use sqrt(2q)/sqrt(3q))
  std::string normalizer;  // display only
  long weyl_order = 0;
  std::string conditions;
  std::vector<TorusCheck> checks;
};

// tab_mr20/21/22.json and tab_nonmr.json: centralizer-degree lower bounds.
struct FOption {
  std::string inv;  // involution label in the point stabilizer
  std::string f;    // centralizer-order bound expression
};
struct DegreeVariant {
  std::string family;
  std::string h_order;   // order expression; empty for dimension rows
  int dim_hbar = -1;     // algebraic dimension; -1 for order rows
  std::string target;    // ambient class label (primed variants included)
  std::vector<FOption> options;
};
struct DegreeBoundRow {
  std::string id, table, type, conditions, note, flag;
  Rat gamma;
  std::optional<Rat> gamma_from_f;  // recomputed exponent where it differs
  DegreeVariant plus;
  std::optional<DegreeVariant> minus;
};

// tabb_loc/tabb_as/tabb_sub/tab_alb/tab_fin.json: exact fixed-point counts
// of one ambient class on cosets of a fixed subgroup (ratio rule rows).
struct RatioSample {
  Int q;
  Int q0;  // 0: no subfield parameter
  int eps = 0;
  Int fix;
  bool attains = false;
  std::optional<bool> above49;
};
struct RatioRow {
  std::string id, table, family, h0_desc, kind, conditions;
  // kind "const": fixed class count and stabilizer order
  Int a, h0_order;
  std::string target;
  // kinds "samefield"/"subfield": class-count expressions by q parity
  std::string h0_name;
  std::string a_expr_odd, a_expr_even;
  std::string target_odd, target_even;
  // printed exponents (fraction or 3-decimal strings; empty if absent)
  std::string alpha, alpha_odd, alpha_even;
  std::optional<Rat> upper, beta, degree_ratio_odd, degree_ratio_even;
  std::string fix_closed_form, n_closed_form;
  std::vector<RatioSample> samples;
};

// tab_main.json / tab_main2.json: summary rows deferring to detail tables.
struct XrefRow {
  std::string id, family, subgroup, value, conditions;
  std::string xref_table, xref_row, xref_field;
};

// tab_main3.json: algebraic-dimension rows.
struct DimSummaryRow {
  std::string id;
  DimRecord rec;
  int expected_dim = 0;
  Rat gamma;
};

// tab_small.json: concrete permutation oracles.
struct OracleSpec {
  std::string stabilizer;  // "sylow-normalizer" | "cyclic-normalizer"
  unsigned parameter = 0;
};
struct SmallActionRow {
  std::string id, family, group, subgroup;
  Int q;
  OracleSpec oracle;
  long n = 0, ifix = 0;
  std::string alpha;
  std::string chi_ref;  // optional cross reference
};

// coverage.json: the audit manifest.
struct CoverageFile {
  std::string name, file;
  std::vector<std::string> row_ids;
  bool theorem_table = false;
};
struct OutOfScopeEntry {
  std::string name, reason;
};

// One validation outcome; detail is empty on success.
struct CheckResult {
  std::string table;
  std::string row;
  std::string what;
  bool pass = false;
  std::string detail;
};

// ---------------------------------------------------------------------------
// The loaded data set.  Construction parses and shape-checks every file
// (throwing std::runtime_error with file/row context on malformed input);
// validate() then runs the exact arithmetic cross-checks.
class TableSet {
 public:
  explicit TableSet(std::string dir);

  // Shared instance over locate_data_dir().
  static const TableSet& bundled();

  const std::string& dir() const { return dir_; }

  // --- typed access ---
  const std::vector<InvolutionEntry>& involutions() const { return inv_; }
  // All classes of one family and parity, in file order.
  std::vector<const InvolutionEntry*> involution_classes(
      const std::string& family, char parity) const;
  // Classes whose label is `prefix` or `prefix` + "'" (the primed
  // congruence-class variants); at least one or throws.
  std::vector<const InvolutionEntry*> target_classes(
      const std::string& family, const std::string& prefix) const;
  // Unique class with the exact label; throws if absent.
  const InvolutionEntry& involution(const std::string& family, char parity,
                                    const std::string& label) const;

  // Engine input for a class: pseudo-Levi nodes plus the connected
  // centralizer order.  Throws if the entry has no pseudo-Levi data.
  InvolutionRecord engine_record(const InvolutionEntry& e) const;
  // Class-size input (full centralizer order in the diagonal form).
  InvolutionClassRecord class_record(const InvolutionEntry& e) const;

  const std::vector<ChiEntry>& chi_rows() const { return chi_; }
  const ChiEntry& chi(const std::string& id) const;

  const std::vector<GammaParabolicRow>& gamma_parabolic() const { return gpar_; }
  const std::vector<AlphaParabolicRow>& alpha_parabolic(int table) const;
  const std::vector<TorusNormalizerRow>& torus_normalizers() const { return mr_; }
  const std::vector<DegreeBoundRow>& degree_bounds() const { return deg_; }
  const std::vector<RatioRow>& ratio_rows() const { return ratio_; }
  const std::vector<XrefRow>& main_rows() const { return main_; }
  const std::vector<XrefRow>& main2_rows() const { return main2_; }
  const std::vector<DimSummaryRow>& dim_rows() const { return main3_; }
  const std::vector<SmallActionRow>& small_rows() const { return small_; }
  const std::vector<GeneratorSet>& oracle_groups() const { return gens_; }
  const std::vector<CoverageFile>& coverage_files() const { return cov_; }
  const std::vector<OutOfScopeEntry>& out_of_scope() const { return oos_; }

  // --- validation ---
  // Tables validate() knows, in run order.
  static const std::vector<std::string>& table_names();
  // Arithmetic cross-checks for one table ("" = all).  Engine- and
  // oracle-backed recomputations are exercised by the callers that own
  // those subsystems; everything here is direct big-integer work.
  std::vector<CheckResult> validate(const std::string& table = {}) const;
  // coverage.json against the directory: listed row ids must match the
  // files exactly and no unlisted JSON file may exist.
  std::vector<CheckResult> audit_coverage() const;

 private:
  std::string dir_;
  std::vector<InvolutionEntry> inv_;
  std::vector<ChiEntry> chi_;
  std::vector<GammaParabolicRow> gpar_;
  std::vector<AlphaParabolicRow> par1_, par2_, par3_;
  std::vector<TorusNormalizerRow> mr_;
  std::vector<DegreeBoundRow> deg_;
  std::vector<RatioRow> ratio_;
  std::vector<XrefRow> main_, main2_;
  std::vector<DimSummaryRow> main3_;
  std::vector<SmallActionRow> small_;
  std::vector<GeneratorSet> gens_;
  std::vector<CoverageFile> cov_;
  std::vector<OutOfScopeEntry> oos_;

  friend struct TableGates;
};

}  // namespace ifix
