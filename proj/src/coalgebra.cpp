#include "psa/coalgebra.hpp"

#include "detail.hpp"
#include "psa/representations.hpp"

namespace psa {

using detail::ad_total;
using detail::coop_leg;
using detail::sparse_of;
using detail::twist12;

Report check_lie_supercoalgebra(const GradedBasis& b, const Cooperation& delta) {
  Report rep = check_even_cooperation(b, delta, "co-evenness");
  const int n = b.dim();
  for (int i = 0; i < n; ++i) {
    Tensor2 t = delta.eval(i);
    Tensor2 d = t + twist(b, t);
    if (!d.is_zero()) rep.add({"co-skew", {i}, sparse_of(d)});
  }
  for (int i = 0; i < n; ++i) {
    Tensor3 t = coop_leg(delta, delta.eval(i), 1);
    Tensor3 c1 = cyclic(b, t);
    Tensor3 d = t + c1 + cyclic(b, c1);
    if (!d.is_zero()) rep.add({"co-jacobi", {i}, sparse_of(d)});
  }
  return rep;
}

Report check_cocomm_coassoc(const GradedBasis& b, const Cooperation& coproduct) {
  Report rep = check_even_cooperation(b, coproduct, "co-evenness");
  const int n = b.dim();
  for (int i = 0; i < n; ++i) {
    Tensor2 t = coproduct.eval(i);
    Tensor2 d = twist(b, t) - t;
    if (!d.is_zero()) rep.add({"cocommutativity", {i}, sparse_of(d)});
  }
  for (int i = 0; i < n; ++i) {
    Tensor3 d = coop_leg(coproduct, coproduct.eval(i), 0);
    d -= coop_leg(coproduct, coproduct.eval(i), 1);
    if (!d.is_zero()) rep.add({"coassociativity", {i}, sparse_of(d)});
  }
  return rep;
}

static void cocycle_law(Report& rep, const GradedBasis& b, const BilinearLaw& bracket,
                        const Cooperation& delta) {
  const int n = b.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Tensor2 lhs = delta.eval(bracket.eval(i, j));
      Tensor2 t = ad_total(b, bracket, j, delta.eval(i));
      if (koszul_sign(b.p(i), b.p(j)) == -1) t *= Rat(-1);
      Tensor2 d = lhs - ad_total(b, bracket, i, delta.eval(j)) + t;
      if (!d.is_zero()) rep.add({"lie-cocycle", {i, j}, sparse_of(d)});
    }
}

static void inf_law(Report& rep, const GradedBasis& b, const BilinearLaw& product,
                    const Cooperation& coproduct) {
  const int n = b.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Tensor2 lhs = coproduct.eval(product.eval(i, j));
      // (x t1) (x) t2: left multiplication on leg 0 (no legs to cross).
      Tensor2 r1 = apply_leg2(b, coproduct.eval(j), 0, mat_cols(left_mult(b, product, i)), 0);
      // s1 (x) (s2 y): plain right multiplication on leg 1, no inserted sign.
      Tensor2 r2 = apply_leg2(b, coproduct.eval(i), 1, mat_cols(right_mult_t(b, product, j)), 0);
      Tensor2 d = lhs - r1 - r2;
      if (!d.is_zero()) rep.add({"inf-compatibility", {i, j}, sparse_of(d)});
    }
}

Report check_lie_superbialgebra(const LieSuper& l, const Cooperation& delta) {
  Report rep = check_lie(l);
  rep.merge(check_lie_supercoalgebra(l.basis, delta));
  cocycle_law(rep, l.basis, l.bracket, delta);
  return rep;
}

Report check_inf_superbialgebra(const AssocSuper& a, const Cooperation& coproduct) {
  Report rep = check_comm_assoc(a);
  rep.merge(check_cocomm_coassoc(a.basis, coproduct));
  inf_law(rep, a.basis, a.product, coproduct);
  return rep;
}

Report check_poisson_bialgebra(const PoissonBialgebra& pb) {
  const GradedBasis& b = pb.p.basis;
  const int n = b.dim();
  Report rep = check_poisson(pb.p);
  rep.merge_as("cobracket", check_lie_supercoalgebra(b, pb.cobracket));
  rep.merge_as("coproduct", check_cocomm_coassoc(b, pb.coproduct));
  cocycle_law(rep, b, pb.p.bracket, pb.cobracket);
  inf_law(rep, b, pb.p.product, pb.coproduct);

  // (id (x) D)delta(x) = (delta (x) id)D(x) + (tau (x) id)(id (x) delta)D(x)
  for (int i = 0; i < n; ++i) {
    Tensor3 lhs = coop_leg(pb.coproduct, pb.cobracket.eval(i), 1);
    Tensor3 r1 = coop_leg(pb.cobracket, pb.coproduct.eval(i), 0);
    Tensor3 r2 = twist12(b, coop_leg(pb.cobracket, pb.coproduct.eval(i), 1));
    Tensor3 d = lhs - r1 - r2;
    if (!d.is_zero()) rep.add({"poisson-co-leibniz", {i}, sparse_of(d)});
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int kij = koszul_sign(b.p(i), b.p(j));
      const std::vector<Element> ad_i = mat_cols(left_mult(b, pb.p.bracket, i));
      const std::vector<Element> ad_j = mat_cols(left_mult(b, pb.p.bracket, j));
      const std::vector<Element> l_i = mat_cols(left_mult(b, pb.p.product, i));
      const std::vector<Element> l_j = mat_cols(left_mult(b, pb.p.product, j));

      // delta(x y) = (-1)^{|x||y|}(L(y) (x) id)delta(x) + (L(x) (x) id)delta(y)
      //            + (id (x) ad(x))delta-shifted D(y)
      //            + (-1)^{|x||y|}(id (x) ad(y)) D(x),
      // second-leg maps entering with the sign of crossing the first leg.
      {
        Tensor2 lhs = pb.cobracket.eval(pb.p.product.eval(i, j));
        Tensor2 t1 = apply_leg2(b, pb.cobracket.eval(i), 0, l_j, 0);
        if (kij == -1) t1 *= Rat(-1);
        Tensor2 t2 = apply_leg2(b, pb.cobracket.eval(j), 0, l_i, 0);
        Tensor2 t3 = apply_leg2(b, pb.coproduct.eval(j), 1, ad_i, b.p(i));
        Tensor2 t4 = apply_leg2(b, pb.coproduct.eval(i), 1, ad_j, b.p(j));
        if (kij == -1) t4 *= Rat(-1);
        Tensor2 d = lhs - t1 - t2 - t3 - t4;
        if (!d.is_zero()) rep.add({"mixed-cobracket-product", {i, j}, sparse_of(d)});
      }

      // D({x,y}) = (ad(x) (x) id) D(y) + (id (x) ad(x)) D(y)
      //          + (-1)^{|x||y|} [ (L(y) (x) id) delta(x) - (id (x) L(y)) delta(x) ].
      {
        Tensor2 lhs = pb.coproduct.eval(pb.p.bracket.eval(i, j));
        Tensor2 t1 = apply_leg2(b, pb.coproduct.eval(j), 0, ad_i, 0);
        Tensor2 t2 = apply_leg2(b, pb.coproduct.eval(j), 1, ad_i, b.p(i));
        Tensor2 t3 = apply_leg2(b, pb.cobracket.eval(i), 0, l_j, 0);
        Tensor2 t4 = apply_leg2(b, pb.cobracket.eval(i), 1, l_j, b.p(j));
        Tensor2 m = t3 - t4;
        if (kij == -1) m *= Rat(-1);
        Tensor2 d = lhs - t1 - t2 - m;
        if (!d.is_zero()) rep.add({"mixed-coproduct-bracket", {i, j}, sparse_of(d)});
      }
    }
  return rep;
}

PoissonBialgebra dualize(const PoissonBialgebra& pb, Pairing pc) {
  const GradedBasis& b = pb.p.basis;
  const int n = b.dim();
  auto sigma = [&](int i, int j) {
    return pc == Pairing::koszul ? koszul_sign(b.p(i), b.p(j)) : 1;
  };

  PoissonBialgebra out;
  out.p.basis.parity = b.parity;
  for (int i = 0; i < n; ++i) {
    std::string name = b.name(i);
    // Starring is an involution: a trailing * is removed rather than doubled.
    if (!name.empty() && name.back() == '*')
      name.pop_back();
    else
      name += "*";
    out.p.basis.label.push_back(std::move(name));
  }
  out.p.bracket = BilinearLaw(n);
  out.p.product = BilinearLaw(n);
  out.cobracket = Cooperation(n);
  out.coproduct = Cooperation(n);

  for (int k = 0; k < n; ++k) {
    for (const auto& [ij, v] : pb.cobracket.eval(k).c) {
      Rat w = v;
      if (sigma(ij.first, ij.second) == -1) w = -w;
      out.p.bracket.add(ij.first, ij.second, k, w);
    }
    for (const auto& [ij, v] : pb.coproduct.eval(k).c) {
      Rat w = v;
      if (sigma(ij.first, ij.second) == -1) w = -w;
      out.p.product.add(ij.first, ij.second, k, w);
    }
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      Element br = pb.p.bracket.eval(s, t);
      Element prod = pb.p.product.eval(s, t);
      for (int k = 0; k < n; ++k) {
        if (!br[k].is_zero())
          out.cobracket.add(k, s, t, sigma(s, t) == -1 ? -br[k] : br[k]);
        if (!prod[k].is_zero())
          out.coproduct.add(k, s, t, sigma(s, t) == -1 ? -prod[k] : prod[k]);
      }
    }
  return out;
}

}  // namespace psa
