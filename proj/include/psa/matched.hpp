#pragma once

#include "psa/representations.hpp"

namespace psa {

/// Two Poisson superalgebras acting on each other. rho1/phi1 are the bracket
/// and product actions of p1 on p2's space (indexed by p1's basis, matrices
/// over p2's basis); rho2/phi2 act the other way around.
struct MatchedPairData {
  PoissonSuper p1, p2;
  RepMap rho1, phi1;
  RepMap rho2, phi2;
};

/// Bowtie sum on p1 (+) p2 (p1 indices first):
///   {x+a, y+b} = {x,y}_1 + rho2(a)y - (-1)^{|x||y|} rho2(b)x
///              + {a,b}_2 + rho1(x)b - (-1)^{|x||y|} rho1(y)a
///   (x+a)(y+b) = x y     + phi2(a)y + (-1)^{|x||y|} phi2(b)x
///              + a b     + phi1(x)b + (-1)^{|x||y|} phi1(y)a
/// Throws std::invalid_argument on dimension mismatch.
PoissonSuper bowtie(const MatchedPairData& m);

/// Matched pair of Lie superalgebras. Aggregates:
///   left/..., right/...                the two bracket axiom checks
///   left-action/..., right-action/...  both actions as Lie modules
///   matched-lie-1 (witness [a,i,j]):   rho2(a) acting on {e_i,e_j}_1
///   matched-lie-2 (witness [x,a,b]):   rho1(x) acting on {f_a,f_b}_2
/// Empty exactly when the bowtie bracket is a Lie superalgebra.
Report check_matched_pair_lie(const LieSuper& l1, const LieSuper& l2,
                              const RepMap& rho1, const RepMap& rho2);

/// Matched pair of commutative associative superalgebras. Aggregates the two
/// product axiom checks, both actions as modules, and
///   matched-assoc-1 (witness [a,i,j]): phi2(a) acting on e_i *_1 e_j
///   matched-assoc-2 (witness [x,a,b]): phi1(x) acting on f_a *_2 f_b.
/// Empty exactly when the bowtie product is commutative associative.
Report check_matched_pair_assoc(const AssocSuper& a1, const AssocSuper& a2,
                                const RepMap& phi1, const RepMap& phi2);

/// Full Poisson matched pair: both constituents as Poisson superalgebras
/// (left/..., right/...), both cross actions as full Poisson modules
/// (left-module/..., right-module/...), the Lie and associative cross
/// conditions, and the four mixed bracket/product compatibilities
/// matched-poisson-1..4 (suffix 1/2: operation on side 1; 3/4: mirrors).
/// Empty exactly when the bowtie passes check_poisson.
Report check_matched_pair_poisson(const MatchedPairData& m);

/// Even supersymmetric bilinear form as a Gram matrix over a graded basis:
/// B(e_i, e_j) = gram[i][j].
struct BilinearForm {
  GradedBasis basis;
  Mat gram;
};

/// Canonical pairing form on P (+) P*: B(x+a, y+b) = <x,b> + <a,y>.
/// With P's indices first, gram[i][n+j] = delta_ij and
/// gram[n+i][j] = (-1)^{p_i} delta_ij (the lower block is forced by
/// supersymmetry). Always even, supersymmetric, nondegenerate, and both
/// halves are isotropic.
BilinearForm standard_form(const GradedBasis& p_basis);

/// Manin triple: a total Poisson structure split by two index sets (which
/// must partition the basis; throws otherwise) with an invariant form.
/// Law ids:
///   total/...            the total structure's Poisson axioms
///   form-evenness        B pairs only equal parities       (witness [i,j])
///   form-supersymmetry   B(y,x) = (-1)^{|x||y|} B(x,y)     (witness [i,j])
///   form-nondegeneracy   exact rank < dim                  (witness [rank])
///   invariance-bracket   B({x,y},z) = B(x,{y,z})           (witness [i,j,k])
///   invariance-product   B(xy,z)   = B(x,yz)               (witness [i,j,k])
///   subalgebra-plus/-minus  closure of each half           (witness [i,j,op], op 0 = bracket, 1 = product)
///   isotropy-plus/-minus    B vanishes on each half        (witness [i,j])
Report check_manin_triple(const PoissonSuper& total, const std::vector<int>& plus_indices,
                          const std::vector<int>& minus_indices, const BilinearForm& b);

/// Rank over the rationals by exact Gaussian elimination.
int exact_rank(Mat m);

}  // namespace psa
