#pragma once

#include "psa/coboundary.hpp"

namespace psa {

/// A carrier Poisson algebra (V, {,}_1, ._1) together with a pair of even
/// actions of a base Poisson algebra P on V.
struct ModulePoissonData {
  PoissonSuper base;
  PoissonSuper carrier_algebra;
  RepMap psi_bracket;
  RepMap psi_product;
};

/// The total structure on P (+) V:
///   {(x,u),(y,v)} = ({x,y}, psi_{,}(x)v - (-1)^{|x||y|} psi_{,}(y)u + {u,v}_1)
///   (x,u)(y,v)    = (x y,   psi_.(x)v  + (-1)^{|x||y|} psi_.(y)u  + u v)
/// i.e. the semidirect sum with the carrier's own operations added on the
/// carrier block.
PoissonSuper module_total_structure(const ModulePoissonData& m);

/// Module validity, defined operationally: empty iff module_total_structure
/// passes check_poisson. Violations carry the prefix "total" and total-space
/// witnesses (base indices first, carrier at offset dim P).
Report check_module_poisson(const ModulePoissonData& m);

/// Advisory diagnostics evaluating the two displayed module compatibilities
/// literally, with witnesses {x, u, v}:
///   module-leibniz-literal:
///     psi_{,}(x)(u v) = (psi_{,}(x)u) v + (-1)^{|x||u|} u (psi_{,}(x)v)
///   module-garbled-literal (reported as printed; fails on valid data, which
///   is why check_module_poisson is defined through the total structure):
///     psi_.(x){u,v}_1 = (psi_{,}(x)u) v + (-1)^{|x||u|} {u, psi_.(x)v}_1
Report module_poisson_literal_diagnostics(const ModulePoissonData& m);

/// An even linear map T : V -> P intertwining the module structure with the
/// base operations up to weight lambda.
struct OOperator {
  ModulePoissonData data;
  Mat t;  // rows indexed by the base, columns by the carrier
  Rat weight;
};

/// Weight-lambda intertwining, witnesses {u, v} (carrier indices):
///   fin1: {T(u),T(v)} = T(psi_{,}(T(u))v - (-1)^{|u||v|} psi_{,}(T(v))u
///                         + lambda {u,v}_1)
///   fin2: T(u) T(v)   = T(psi_.(T(u))v  + (-1)^{|u||v|} psi_.(T(v))u
///                         + lambda u v)
Report check_o_operator(const OOperator& o);

/// Weight-lambda Rota-Baxter identities on both operations of P, same law
/// ids and witnesses as check_o_operator (the regular-module special case):
///   fin1: {T(u),T(v)} = T({T(u),v} + {u,T(v)} + lambda {u,v})
///   fin2: T(u) T(v)   = T(T(u) v + u T(v) + lambda u v)
Report check_rota_baxter(const PoissonSuper& p, const Mat& t, const Rat& lambda);

/// Four even bilinear operations subject to the post-Poisson axiom stack.
struct PostPoisson {
  GradedBasis basis;
  BilinearLaw op_bracket;  // [,]
  BilinearLaw op_diamond;  // <>
  BilinearLaw op_dot;      // .
  BilinearLaw op_succ;     // >
};

/// Lie axioms on the bracket plus, with witnesses {x, y, z}:
///   postlie1: (-1)^{|z||y|} z<>(y<>x) - y<>(z<>x) + (y<>z)<>x
///             - (-1)^{|z||y|} (z<>y)<>x + [y,z]<>x = 0
///   postlie2: z<>[x,y] - [z<>x, y] - (-1)^{|z||x|} [x, z<>y] = 0
Report check_post_lie(const GradedBasis& b, const BilinearLaw& bracket,
                      const BilinearLaw& diamond);

/// Commutative associative axioms on dot plus, with witnesses {x, y, z}:
///   dend1: x>(y>z) = (x>y + (-1)^{|x||y|} y>x + x.y)>z
///   dend2: (x>y).z = x>(y.z)
Report check_comm_dendriform_tri(const GradedBasis& b, const BilinearLaw& dot,
                                 const BilinearLaw& succ);

/// The full stack: post-Lie + dendriform sub-suites and the five
/// compatibilities pp1..pp5 (witnesses {x, y, z}):
///   pp1: [x, y.z] = [x,y].z + (-1)^{|x||y|} y.[x,z]
///   pp2: [x, z>y] = (-1)^{|x||z|} z>[x,y]
///        - (-1)^{|y||z|+|x||y|+|x||z|} y.(z<>x)
///   pp3: x<>(y.z) = (x<>y).z + (-1)^{|x||y|} y.(x<>z)
///   pp4: (y>z + (-1)^{|y||z|} z>y + y.z)<>x
///        = (-1)^{|y||z|} z>(y<>x) + y>(z<>x)
///   pp5: x<>(z>y) = (-1)^{|x||z|} z>(x<>y)
///        + (x<>z - (-1)^{|x||z|} z<>x + [x,z])>y
Report check_post_poisson(const PostPoisson& p);

/// {x,y} = x<>y - (-1)^{|x||y|} y<>x + [x,y];
/// x y   = x>y  + (-1)^{|x||y|} y>x  + x.y.
PoissonSuper associated_poisson(const PostPoisson& p);

/// [u,v] = lambda {u,v}_1, u<>v = psi_{,}(T(u))v, u.v = lambda u v,
/// u>v = psi_.(T(u))v, on the carrier of o.
PostPoisson post_from_o_operator(const OOperator& o);

/// The weight-1 operator on the dual space underlying a quasitriangular
/// bialgebra: carrier P* with [a,b] = -2 ad*(beta(a))b and
/// a.b = 2 L*(beta(a))b, actions (ad*, -L*), T = r as a map, weight 1.
/// Throws std::invalid_argument unless |r| = 0 and pybe_holds(p, r).
OOperator quasitriangular_o_operator(const PoissonBialgebra& pb, const RMatrix& r,
                                     Pairing pc);

/// Post-Poisson structure on the dual space of a quasitriangular bialgebra:
///   [a,b] = -2 ad*(beta(a))b,  a<>b = ad*(r(a))b,
///   a.b   = 2 L*(beta(a))b,    a>b  = -L*(r(a))b.
/// Built as post_from_o_operator of quasitriangular_o_operator; the weight-1
/// intertwining is asserted (std::logic_error on failure).
PostPoisson post_from_quasitriangular(const PoissonBialgebra& pb, const RMatrix& r,
                                      Pairing pc);

}  // namespace psa
