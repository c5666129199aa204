#include "psa/structures.hpp"

#include "detail.hpp"

namespace psa {

using detail::sparse_of;

Report check_lie(const GradedBasis& b, const BilinearLaw& bracket) {
  Report rep = check_even_law(b, bracket, "evenness");
  const int n = b.dim();

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // [x,y] + (-1)^{|x||y|}[y,x] = 0
      Element d = bracket.eval(i, j);
      Element t = bracket.eval(j, i);
      if (koszul_sign(b.p(i), b.p(j)) == -1) t = -t;
      d += t;
      if (!d.is_zero()) rep.add({"skew-supersymmetry", {i, j}, sparse_of(d)});
    }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Element t1 = bracket.eval(unit(n, x), bracket.eval(y, z));
        if (koszul_sign(b.p(x), b.p(z)) == -1) t1 = -t1;
        Element t2 = bracket.eval(unit(n, z), bracket.eval(x, y));
        if (koszul_sign(b.p(z), b.p(y)) == -1) t2 = -t2;
        Element t3 = bracket.eval(unit(n, y), bracket.eval(z, x));
        if (koszul_sign(b.p(y), b.p(x)) == -1) t3 = -t3;
        Element d = t1 + t2 + t3;
        if (!d.is_zero()) rep.add({"super-jacobi", {x, y, z}, sparse_of(d)});
      }
  return rep;
}

Report check_comm_assoc(const GradedBasis& b, const BilinearLaw& product) {
  Report rep = check_even_law(b, product, "evenness");
  const int n = b.dim();

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // xy - (-1)^{|x||y|}yx = 0
      Element d = product.eval(i, j);
      Element t = product.eval(j, i);
      if (koszul_sign(b.p(i), b.p(j)) == -1) t = -t;
      d -= t;
      if (!d.is_zero()) rep.add({"supercommutativity", {i, j}, sparse_of(d)});
    }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Element d = product.eval(product.eval(x, y), unit(n, z));
        d -= product.eval(unit(n, x), product.eval(y, z));
        if (!d.is_zero()) rep.add({"associativity", {x, y, z}, sparse_of(d)});
      }
  return rep;
}

Report check_poisson(const PoissonSuper& p) {
  Report rep = check_lie(p.basis, p.bracket);
  rep.merge(check_comm_assoc(p.basis, p.product));

  const int n = p.basis.dim();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        // {x, yz} = {x,y}z + (-1)^{|x||y|} y{x,z}
        Element lhs = p.bracket.eval(unit(n, x), p.product.eval(y, z));
        Element r1 = p.product.eval(p.bracket.eval(x, y), unit(n, z));
        Element r2 = p.product.eval(unit(n, y), p.bracket.eval(x, z));
        if (koszul_sign(p.basis.p(x), p.basis.p(y)) == -1) r2 = -r2;
        Element d = lhs - r1 - r2;
        if (!d.is_zero()) rep.add({"leibniz", {x, y, z}, sparse_of(d)});
      }
  return rep;
}

PoissonSuper polarize(const GradedBasis& b, const BilinearLaw& l) {
  PoissonSuper out;
  out.basis = b;
  out.bracket = BilinearLaw(l.dim);
  out.product = BilinearLaw(l.dim);
  const Rat half(1, 2);
  for (int i = 0; i < l.dim; ++i)
    for (int j = 0; j < l.dim; ++j) {
      Element xy = l.eval(i, j);
      Element yx = l.eval(j, i);
      if (koszul_sign(b.p(i), b.p(j)) == -1) yx = -yx;
      Element br = half * (xy - yx);
      Element pr = half * (xy + yx);
      if (!br.is_zero()) out.bracket.set(i, j, std::move(br));
      if (!pr.is_zero()) out.product.set(i, j, std::move(pr));
    }
  return out;
}

BilinearLaw depolarize(const PoissonSuper& p) {
  BilinearLaw out(p.basis.dim());
  for (int i = 0; i < out.dim; ++i)
    for (int j = 0; j < out.dim; ++j) {
      Element v = p.bracket.eval(i, j) + p.product.eval(i, j);
      if (!v.is_zero()) out.set(i, j, std::move(v));
    }
  return out;
}

Report check_admissible(const GradedBasis& b, const BilinearLaw& l) {
  Report rep = check_even_law(b, l, "evenness");
  const int n = b.dim();
  auto as = [&](const Element& x, const Element& y, const Element& z) {
    return l.eval(l.eval(x, y), z) - l.eval(x, l.eval(y, z));
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const Element ex = unit(n, x), ey = unit(n, y), ez = unit(n, z);
        const Parity px = b.p(x), py = b.p(y), pz = b.p(z);
        Element lhs = Rat(3) * as(ex, ey, ez);

        Element t1 = l.eval(l.eval(x, z), ey);
        if (koszul_sign(py, pz) == -1) t1 = -t1;
        Element t2 = l.eval(l.eval(z, x), ey);
        if (koszul_sign(px, pz) * koszul_sign(py, pz) == -1) t2 = -t2;
        Element t3 = l.eval(l.eval(y, z), ex);
        if (koszul_sign(px, py) * koszul_sign(px, pz) == -1) t3 = -t3;
        Element t4 = l.eval(l.eval(y, x), ez);
        if (koszul_sign(px, py) == -1) t4 = -t4;

        Element d = lhs - (t1 - t2 + t3 - t4);
        if (!d.is_zero()) rep.add({"admissibility", {x, y, z}, sparse_of(d)});
      }
  return rep;
}

}  // namespace psa
