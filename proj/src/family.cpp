#include "psa/family.hpp"

namespace psa {

PoissonBialgebra p2_bialgebra(const P2Params& q) {
  PoissonBialgebra pb;
  pb.p.basis = make_basis({0, 1});
  pb.p.bracket = BilinearLaw(2);
  pb.p.bracket.add(0, 1, 1, q.b);
  pb.p.bracket.add(1, 0, 1, -q.b);
  pb.p.bracket.add(1, 1, 0, q.c);
  pb.p.product = BilinearLaw(2);
  pb.p.product.add(0, 0, 0, q.k);
  pb.p.product.add(0, 1, 1, q.d);
  pb.p.product.add(1, 0, 1, q.d);
  pb.p.product.add(1, 1, 0, q.f);
  pb.cobracket = Cooperation(2);
  pb.cobracket.add(0, 1, 1, q.c1);
  pb.cobracket.add(1, 0, 1, q.c2);
  pb.cobracket.add(1, 1, 0, -q.c2);
  pb.coproduct = Cooperation(2);
  return pb;
}

P2Params fixture_a() { return {Rat(0), Rat(1), Rat(1), Rat(1), Rat(0), Rat(0), Rat(1)}; }

P2Params fixture_b() { return {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)}; }

}  // namespace psa
