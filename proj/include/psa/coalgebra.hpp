#pragma once

#include "psa/structures.hpp"

namespace psa {

/// Poisson superalgebra with a cobracket (Lie side) and a coproduct
/// (commutative associative side) on the same space.
struct PoissonBialgebra {
  PoissonSuper p;
  Cooperation cobracket;
  Cooperation coproduct;
};

/// Lie supercoalgebra axioms for a cobracket delta:
///   co-evenness        delta(e_i) homogeneous of parity p_i
///   co-skew            delta + tau.delta = 0                  (witness [i])
///   co-jacobi          (id + xi + xi^2)(id (x) delta)delta = 0 (witness [i])
Report check_lie_supercoalgebra(const GradedBasis& b, const Cooperation& delta);

/// Cocommutative coassociative supercoalgebra axioms for a coproduct:
///   co-evenness, cocommutativity (tau.D = D), coassociativity
///   ((D (x) id)D = (id (x) D)D), each with witness [i].
Report check_cocomm_coassoc(const GradedBasis& b, const Cooperation& coproduct);

/// Lie superbialgebra: bracket axioms + cobracket axioms + the cocycle law
///   lie-cocycle (witness [i,j]):
///   delta([x,y]) = ad(x).delta(y) - (-1)^{|x||y|} ad(y).delta(x)
/// where ad(x)(u (x) v) = [x,u] (x) v + (-1)^{|x||u|} u (x) [x,v].
Report check_lie_superbialgebra(const LieSuper& l, const Cooperation& delta);

/// Commutative + cocommutative infinitesimal superbialgebra: product axioms,
/// coproduct axioms, and the derivation-style law
///   inf-compatibility (witness [i,j]):
///   D(x y) = sum (x t1) (x) t2 + sum s1 (x) (s2 y)
/// over terms t = D(y), s = D(x).
Report check_inf_superbialgebra(const AssocSuper& a, const Cooperation& coproduct);

/// Full Poisson superbialgebra check. Aggregates the Poisson axioms, the two
/// coalgebra axiom groups (prefixed cobracket/..., coproduct/...), and the
/// four compatibilities:
///   lie-cocycle             delta of the bracket            (witness [i,j])
///   inf-compatibility       coproduct of the product        (witness [i,j])
///   poisson-co-leibniz      (id (x) D)delta = (delta (x) id)D
///                             + (tau (x) id)(id (x) delta)D (witness [i])
///   mixed-cobracket-product delta(x y) expansion            (witness [i,j])
///   mixed-coproduct-bracket D({x,y}) expansion              (witness [i,j])
Report check_poisson_bialgebra(const PoissonBialgebra& pb);

/// Structure induced on the dual space: dual bracket/product from the
/// cobracket/coproduct and dual cobracket/coproduct from the bracket/product.
/// Under the koszul pairing each transfer at index pair (i,j) is weighted by
/// (-1)^{p_i p_j}; under plain the weights are 1. Involutive either way.
PoissonBialgebra dualize(const PoissonBialgebra& pb, Pairing pc);

}  // namespace psa
