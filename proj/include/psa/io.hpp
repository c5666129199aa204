#pragma once

#include <string>
#include <vector>

#include "psa/coboundary.hpp"
#include "psa/family.hpp"
#include "psa/matched.hpp"
#include "psa/o_operator.hpp"

namespace psa {

/// In-memory form of the JSON structure file (schema "psa/1"): one graded
/// basis plus every optional block.
///
/// Top-level keys:
///   schema     "psa/1" (required)
///   dim        basis dimension (required, >= 0)
///   parity     list of 0/1, length dim (required)
///   label      list of basis names (optional)
///   bracket / product           sparse law entries [i, j, k, "p/q"]
///   cobracket / coproduct       sparse entries [i, j, k, "p/q"]:
///                               image of e_i gains (p/q) e_j (x) e_k
///   r          sparse tensor entries [i, j, "p/q"]
///   reps       {carrier_dim, carrier_parity, carrier_label?,
///               carrier_bracket?, carrier_product?,
///               bracket_action?, product_action?} with action entries
///               [k, a, b, "p/q"]: e_k maps f_b to (p/q) f_a
///   T          operator entries [i, j, "p/q"] (row i in the base algebra,
///               column j in the carrier; the carrier is the base itself
///               when no reps block is present)
///   weight     scalar "p/q"
///   post       {bracket, diamond, dot, succ} sparse laws on the main basis
///   pair       {second: {dim, parity, label?, bracket?, product?},
///               rho1?, phi1?, rho2?, phi2?} where rho1/phi1 entries
///               [x, a, b, "p/q"] act by the main algebra on the second and
///               rho2/phi2 entries [a, i, j, "p/q"] act the other way
///   manin      {plus, minus, form} with form entries [i, j, "p/q"]
///
/// Absent operation blocks (bracket, product, cobracket, coproduct, actions)
/// mean the zero operation; the has_* flags only record which keys appeared
/// so serialization can round-trip. Structural blocks (r, reps, T, weight,
/// post, pair, manin) have no default and are required by the suites and
/// constructions that use them.
///
/// Every law, cooperation, action, and T entry is checked for evenness at
/// parse time with an error locating the offending entry. The r tensor and
/// the manin form are not gated here: homogeneity of r and evenness of the
/// form are semantic checks performed by the operations that consume them.
struct AlgebraFile {
  GradedBasis basis;

  bool has_bracket = false, has_product = false;
  bool has_cobracket = false, has_coproduct = false;
  BilinearLaw bracket, product;
  Cooperation cobracket, coproduct;

  bool has_r = false;
  Tensor2 r;

  bool has_reps = false;
  GradedBasis carrier;
  BilinearLaw carrier_bracket, carrier_product;
  RepMap bracket_action, product_action;

  bool has_t = false;
  Mat t;
  bool has_weight = false;
  Rat weight;

  bool has_post = false;
  BilinearLaw post_bracket, post_diamond, post_dot, post_succ;

  bool has_pair = false;
  GradedBasis second;
  BilinearLaw second_bracket, second_product;
  RepMap rho1, phi1, rho2, phi2;

  bool has_manin = false;
  std::vector<int> plus_indices, minus_indices;
  Tensor2 form;

  /// The main structure viewed as a Poisson superalgebra (zero defaults).
  PoissonSuper poisson() const { return PoissonSuper{basis, bracket, product}; }
  /// The main structure viewed as a Poisson superbialgebra (zero defaults).
  PoissonBialgebra bialgebra() const {
    return PoissonBialgebra{poisson(), cobracket, coproduct};
  }
};

/// Parse the JSON text format. Throws std::invalid_argument on syntax
/// errors (with position), unknown or missing keys, dimension mismatches,
/// malformed scalars, and parity-inhomogeneous entries (located by index).
AlgebraFile parse_algebra(const std::string& text);

/// Canonical serialization: alphabetically sorted keys, ascending index
/// order, reduced fractions, two-space indent, trailing newline.
/// parse(serialize(f)) reproduces f; serialize(parse(s)) canonicalizes s.
std::string serialize_algebra(const AlgebraFile& f);

/// Options threaded through the entry points below.
struct Options {
  Pairing pairing = Pairing::koszul;
  /// Grid size bound; -1 means "use the grid file's bound, default 10^6".
  long long bound = -1;
  /// construct post: operator shorthand ("id" or "zero") and weight scalar;
  /// empty strings mean "take them from the file's T/weight blocks".
  std::string t_spec;
  std::string weight;
};

/// Run one named verification suite. Suites: lie, assoc, poisson,
/// lie-bialgebra, inf-bialgebra, poisson-bialgebra, matched-pair, manin,
/// coboundary, pybe, o-operator, post-poisson. The o-operator suite uses
/// the reps block as module data when present and otherwise checks the
/// Rota-Baxter identities on the regular module. Throws
/// std::invalid_argument for an unknown suite or a missing required block.
Report run_suite(const AlgebraFile& f, const std::string& suite, const Options& o);

/// Execute a named construction and return the constructed file.
/// Constructions: double, semidirect, bowtie, dualize, post, post-quasi.
/// Precondition failures (including inputs that fail the construction's
/// own hypotheses) throw std::invalid_argument.
AlgebraFile run_construct(const AlgebraFile& f, const std::string& what, const Options& o);

/// Yang-Baxter evaluation of the file's r tensor; which: cybe, aybe, pybe.
/// The report lists each requested equation's nonzero entries under law ids
/// "cybe"/"aybe" (empty exactly when the equations hold).
Report run_ybe(const AlgebraFile& f, const std::string& which);

/// Grid search over the two-parameter-family (schema "psa/grid1"): keys
/// family ("p2"), parameters (all of b, c, d, k, f, c1, c2 as nonempty
/// lists of scalars), predicate (a suite name applicable to a bare
/// bialgebra), and optional bound. Instantiates every combination in
/// lexicographic tuple order (b outermost, c2 innermost, each list in
/// given order) and returns canonical JSON
/// {"count": N, "passing": [[seven scalars]...], "total": M}.
/// Throws std::invalid_argument on malformed grids or when the total grid
/// size exceeds the effective bound.
std::string grid_search(const std::string& grid_json, const Options& o);

/// Render a report as canonical JSON: {"ok": bool, "violations": [{"law",
/// "witness", "discrepancy": [[[indices], "p/q"]...]}...]} plus newline.
std::string report_json(const Report& rep);

/// Render a report as line-delimited text: one violation per line
/// ("law witness=[...] discrepancy=(...)=v; ..."), or "ok" when empty.
std::string report_text(const Report& rep);

}  // namespace psa
