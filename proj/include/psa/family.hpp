#pragma once

#include "psa/coalgebra.hpp"

namespace psa {

/// Parameters of the two-dimensional family on basis e1 (even), e2 (odd):
///   {e1,e2} = b e2, {e2,e2} = c e1,
///   e1 e1 = k e1, e1 e2 = d e2, e2 e2 = f e1,
///   delta(e1) = c1 e2 (x) e2, delta(e2) = c2 (e1 (x) e2 - e2 (x) e1),
///   Delta = 0.
struct P2Params {
  Rat b, c, d, k, f, c1, c2;
};

/// Instantiate the family as a bialgebra (no validity requirement; checkers
/// decide).
PoissonBialgebra p2_bialgebra(const P2Params& q);

/// (b,c,d,k,f,c1,c2) = (0,1,1,1,0; 0,1): strictly valid, passes the full
/// bialgebra suite.
P2Params fixture_a();

/// (1,0,0,0,0; 1,0): the second standard instance. (Its product is zero;
/// an e2 e2 term is ruled out by supercommutativity on odd elements.)
P2Params fixture_b();

}  // namespace psa
