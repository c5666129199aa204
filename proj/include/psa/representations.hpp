#pragma once

#include "psa/structures.hpp"

namespace psa {

/// Dense matrix over exact rationals (row-major; dimensions are tiny here).
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

  const Rat& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }

  bool is_zero() const;
  Element apply(const Element& x) const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rat& s);
  friend Mat operator+(Mat x, const Mat& y) { return x += y; }
  friend Mat operator-(Mat x, const Mat& y) { return x -= y; }
  friend Mat operator*(const Rat& s, Mat x) { return x *= s; }
  friend Mat operator*(const Mat& x, const Mat& y);  // composition
  friend bool operator==(const Mat&, const Mat&) = default;
};

/// Columns of a matrix as coordinate vectors (for tensor-leg application).
std::vector<Element> mat_cols(const Mat& m);

/// Linear action of an algebra on a carrier: one carrier matrix per basis
/// index of the acting algebra.
struct RepMap {
  std::vector<Mat> action;

  const Mat& of(int i) const { return action[static_cast<std::size_t>(i)]; }
  /// Action of an arbitrary element sum x_i e_i.
  Mat of(const Element& x) const;
  friend bool operator==(const RepMap&, const RepMap&) = default;
};

/// Pair of actions (bracket part, product part) on a common graded carrier.
struct PoissonRep {
  GradedBasis carrier;
  RepMap psi_bracket;
  RepMap psi_product;
};

/// Evenness of an action: a matrix entry out<-in for acting index i requires
/// p(out) = p(in) + p_i.
Report check_rep_even(const GradedBasis& base, const GradedBasis& carrier, const RepMap& r,
                      const std::string& law_id);

/// rho([x,y]) = rho(x)rho(y) - (-1)^{|x||y|} rho(y)rho(x), plus evenness.
Report check_lie_rep(const GradedBasis& base, const BilinearLaw& bracket,
                     const GradedBasis& carrier, const RepMap& rho);

/// phi(xy) = phi(x)phi(y), plus evenness.
Report check_assoc_rep(const GradedBasis& base, const BilinearLaw& product,
                       const GradedBasis& carrier, const RepMap& phi);

/// Full module check over a Poisson superalgebra:
///   lie rep, assoc rep, and the two compatibilities
///   psi_{,}(xy)   = psi_.(x)psi_{,}(y) + (-1)^{|x||y|} psi_.(y)psi_{,}(x)
///   psi_.({x,y})  = psi_{,}(x)psi_.(y) - (-1)^{|x||y|} psi_.(y)psi_{,}(x)
Report check_poisson_rep(const PoissonSuper& p, const PoissonRep& rep);

/// Semidirect product on base (+) carrier:
///   {x1+v1, x2+v2} = {x1,x2} + psi_{,}(x1)v2 - (-1)^{|x1||x2|} psi_{,}(x2)v1
///   (x1+v1)(x2+v2) = x1 x2  + psi_.(x1)v2  + (-1)^{|x1||x2|} psi_.(x2)v1
PoissonSuper semidirect_product(const PoissonSuper& p, const PoissonRep& rep);

/// Hypotheses under which the dual carrier becomes a module again:
///   psi_{,}(xy)  = psi_{,}(x)psi_.(y) + (-1)^{|x||y|} psi_{,}(y)psi_.(x)
///   psi_.({x,y}) = psi_{,}(x)psi_.(y) - (-1)^{|x||y|} psi_.(y)psi_{,}(x)
Report check_dual_rep_hypotheses(const PoissonSuper& p, const PoissonRep& rep);

/// Dual module (V*, psi*_{,}, -psi*_.) where
///   <psi*(x) xi, v> = -(-1)^{|x||xi|} <xi, psi(x) v>,
/// i.e. each matrix is the negated supertranspose. Precondition: rep passes
/// check_poisson_rep and check_dual_rep_hypotheses (not re-verified here).
PoissonRep dual_rep(const PoissonSuper& p, const PoissonRep& rep);

/// Negated supertranspose of one action matrix (exposed for dual carriers):
/// out[k][j] = -(-1)^{p_act p_j} m[j][k].
Mat dual_action(const GradedBasis& carrier, const Mat& m, Parity p_act);

/// Adjoint module: carrier = the algebra itself, psi_{,} = ad, psi_. = L.
PoissonRep adjoint_rep(const PoissonSuper& p);

/// Left multiplication matrix of e_i: x -> law(e_i, x).
Mat left_mult(const GradedBasis& b, const BilinearLaw& law, int i);
/// Plain right multiplication T(e_i): x -> law(x, e_i).
Mat right_mult_t(const GradedBasis& b, const BilinearLaw& law, int i);
/// Signed right multiplication R(e_i): x -> (-1)^{|x||e_i|} law(x, e_i),
/// so that L(x)y = (-1)^{|x||y|} R(y)x.
Mat right_mult_r(const GradedBasis& b, const BilinearLaw& law, int i);

}  // namespace psa
