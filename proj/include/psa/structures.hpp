#pragma once

#include "psa/law.hpp"

namespace psa {

/// Lie superalgebra candidate: skew-supersymmetric even bracket + super Jacobi.
struct LieSuper {
  GradedBasis basis;
  BilinearLaw bracket;
};

/// Commutative associative superalgebra candidate.
struct AssocSuper {
  GradedBasis basis;
  BilinearLaw product;
};

/// Poisson superalgebra candidate: bracket + product + super Leibniz rule.
struct PoissonSuper {
  GradedBasis basis;
  BilinearLaw bracket;
  BilinearLaw product;
};

/// Lie superalgebra axioms, exhaustively over basis tuples.
///   skew:   [x,y] + (-1)^{|x||y|}[y,x] = 0
///   jacobi: (-1)^{|x||z|}[x,[y,z]] + (-1)^{|z||y|}[z,[x,y]] + (-1)^{|y||x|}[y,[z,x]] = 0
Report check_lie(const GradedBasis& b, const BilinearLaw& bracket);
inline Report check_lie(const LieSuper& l) { return check_lie(l.basis, l.bracket); }

/// Supercommutativity (xy = (-1)^{|x||y|}yx) and associativity.
Report check_comm_assoc(const GradedBasis& b, const BilinearLaw& product);
inline Report check_comm_assoc(const AssocSuper& a) { return check_comm_assoc(a.basis, a.product); }

/// Full Poisson superalgebra check: lie + comm-assoc + super Leibniz rule
///   {x, yz} = {x,y}z + (-1)^{|x||y|} y{x,z}.
Report check_poisson(const PoissonSuper& p);

/// Split a single even bilinear law into super-skew and super-symmetric parts:
///   {x,y} = (xy - (-1)^{|x||y|}yx)/2,   x*y = (xy + (-1)^{|x||y|}yx)/2.
PoissonSuper polarize(const GradedBasis& b, const BilinearLaw& l);

/// Recombine: x*y + {x,y}. polarize(depolarize(p)) == p exactly when p's
/// bracket is super-skew and product super-symmetric.
BilinearLaw depolarize(const PoissonSuper& p);

/// Poisson-admissibility of a single law: the polarized pair is Poisson iff
///   3(x,y,z)_as = (-1)^{|y||z|}(xz)y - (-1)^{|x||z|+|y||z|}(zx)y
///                + (-1)^{|x||y|+|x||z|}(yz)x - (-1)^{|x||y|}(yx)z
/// where (x,y,z)_as = (xy)z - x(yz) is the associator.
Report check_admissible(const GradedBasis& b, const BilinearLaw& l);

}  // namespace psa
