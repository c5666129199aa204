#pragma once

#include "psa/coalgebra.hpp"
#include "psa/matched.hpp"

namespace psa {

/// Element r in A (x) A, homogeneous of a declared parity. The coboundary
/// constructions require parity 0.
struct RMatrix {
  Tensor2 tensor;
  Parity parity = 0;
};

/// Wrap a tensor as an RMatrix, inferring its parity over the basis.
/// Throws std::invalid_argument if entries mix parities.
RMatrix make_r(const GradedBasis& b, Tensor2 t);

/// Cobracket induced by r:
///   delta(x) = {x,r1} (x) r2 + (-1)^{|x||r1|} r1 (x) {x,r2},
/// summed over the sparse entries of r. Throws unless |r| = 0.
Cooperation cobracket_from_r(const PoissonSuper& p, const RMatrix& r);

/// Coproduct induced by r:
///   D(x) = (x r1) (x) r2 - r1 (x) (r2 x),
/// summed over the sparse entries of r. Throws unless |r| = 0.
Cooperation coproduct_from_r(const PoissonSuper& p, const RMatrix& r);

/// Classical Yang-Baxter tensor
///   C(r) = [r12,r13] + [r12,r23] + [r13,r23]
/// with the super components (summed over entries (s,t),(u,v) of r):
///   (-1)^{p_u p_t}[e_s,e_u] (x) e_t (x) e_v
///   + e_s (x) [e_t,e_u] (x) e_v
///   + (-1)^{p_u p_t} e_s (x) e_u (x) [e_t,e_v].
Tensor3 cybe(const LieSuper& l, const RMatrix& r);

/// Associative Yang-Baxter tensor
///   A(r) = r13.r12 - r12.r23 + r23.r13
/// with components (e_s e_u) (x) e_v (x) e_t, e_s (x) (e_t e_u) (x) e_v,
/// and e_u (x) e_s (x) (e_t e_v).
Tensor3 aybe(const AssocSuper& a, const RMatrix& r);

/// r solves the Poisson Yang-Baxter equation: C(r) = 0 and A(r) = 0.
bool pybe_holds(const PoissonSuper& p, const RMatrix& r);

/// Obstruction to the induced (delta, D) pair forming a Poisson
/// supercoalgebra:
///   W(x) = (id (x) D)delta(x) - (delta (x) id)D(x) - (tau (x) id)(id (x) delta)D(x).
/// Computed along two independent code paths (composition of the induced
/// cooperations, and direct expansion over the entries of r); throws
/// std::logic_error if they ever disagree. Throws unless |r| = 0.
Tensor3 w_obstruction(const PoissonSuper& p, const RMatrix& r, int i);

/// The direct-expansion route of w_obstruction, exposed for cross-checks.
Tensor3 w_obstruction_expanded(const PoissonSuper& p, const RMatrix& r, int i);

/// The four-condition criterion for r to induce a Poisson superbialgebra
/// structure via cobracket_from_r / coproduct_from_r. Law ids, each with
/// witness [i] (and a leading part tag for the first):
///   symmetric-invariance  (witness [i,part], part 0 = bracket, 1 = product):
///       ad(x)-action and L(x)-action annihilate r + tau(r)
///   aybe-compatibility    (L(x) (x) id (x) id - id (x) id (x) T(x)) A(r) = 0
///   cybe-ad-invariance    three-leg ad(x) applied to C(r) = 0
///   w-obstruction         W(x) = 0
/// Throws unless |r| = 0.
Report coboundary_conditions(const PoissonSuper& p, const RMatrix& r);

/// Double of a bialgebra: the bowtie of P with its dual structure along the
/// coadjoint-type actions, carrying the cobracket/coproduct induced by the
/// canonical r = sum_i e_i (x) e*_i (entries (i, n+i) -> 1).
struct DoubleResult {
  PoissonBialgebra bialgebra;
  RMatrix canonical_r;
  /// The matched pair the bowtie was assembled from (P side first).
  MatchedPairData pair;
};

/// Assemble the double of a Poisson superbialgebra. The dual half and the
/// canonical r transfers use the given pairing convention.
DoubleResult drinfeld_double(const PoissonBialgebra& pb, Pairing pc);

/// Split into skew and symmetric halves with respect to the transpose
/// r'(i,j) = r(j,i): alpha = (r - r')/2, beta = (r + r')/2. The transpose
/// realizes the adjoint of r as a map under either pairing convention.
std::pair<RMatrix, RMatrix> symmetric_split(const RMatrix& r);

/// r as a linear map from the dual space to the space:
/// r(e*_i) = sum_j sigma(i,j) r(i,j) e_j, where sigma(i,j) = (-1)^{p_i p_j}
/// under the koszul pairing and 1 under plain. Columns are indexed by the
/// dual basis.
Mat r_as_map(const GradedBasis& b, const RMatrix& r, Pairing pc);

}  // namespace psa
