#include "psa/o_operator.hpp"

#include <stdexcept>

#include "detail.hpp"

namespace psa {

using detail::sparse_of;

PoissonSuper module_total_structure(const ModulePoissonData& m) {
  const int n = m.base.basis.dim();
  const int nv = m.carrier_algebra.basis.dim();
  PoissonSuper total = semidirect_product(
      m.base, PoissonRep{m.carrier_algebra.basis, m.psi_bracket, m.psi_product});
  for (int a = 0; a < nv; ++a)
    for (int b = 0; b < nv; ++b) {
      const Element br = m.carrier_algebra.bracket.eval(a, b);
      const Element pr = m.carrier_algebra.product.eval(a, b);
      for (int c = 0; c < nv; ++c) {
        if (!br[c].is_zero()) total.bracket.add(n + a, n + b, n + c, br[c]);
        if (!pr[c].is_zero()) total.product.add(n + a, n + b, n + c, pr[c]);
      }
    }
  return total;
}

Report check_module_poisson(const ModulePoissonData& m) {
  Report rep;
  rep.merge_as("total", check_poisson(module_total_structure(m)));
  return rep;
}

Report module_poisson_literal_diagnostics(const ModulePoissonData& m) {
  const GradedBasis& pb = m.base.basis;
  const GradedBasis& vb = m.carrier_algebra.basis;
  const int n = pb.dim();
  const int nv = vb.dim();
  Report rep;
  for (int x = 0; x < n; ++x) {
    const Mat psb = m.psi_bracket.of(x);
    const Mat psp = m.psi_product.of(x);
    for (int u = 0; u < nv; ++u) {
      const int kxu = koszul_sign(pb.p(x), vb.p(u));
      for (int v = 0; v < nv; ++v) {
        const Element eu = unit(nv, u);
        const Element ev = unit(nv, v);
        {
          Element d = psb.apply(m.carrier_algebra.product.eval(u, v));
          d -= m.carrier_algebra.product.eval(psb.apply(eu), ev);
          Element t = m.carrier_algebra.product.eval(eu, psb.apply(ev));
          if (kxu == -1) t = -t;
          d -= t;
          if (!d.is_zero()) rep.add({"module-leibniz-literal", {x, u, v}, sparse_of(d)});
        }
        {
          Element d = psp.apply(m.carrier_algebra.bracket.eval(u, v));
          d -= m.carrier_algebra.product.eval(psb.apply(eu), ev);
          Element t = m.carrier_algebra.bracket.eval(eu, psp.apply(ev));
          if (kxu == -1) t = -t;
          d -= t;
          if (!d.is_zero()) rep.add({"module-garbled-literal", {x, u, v}, sparse_of(d)});
        }
      }
    }
  }
  return rep;
}

Report check_o_operator(const OOperator& o) {
  const ModulePoissonData& m = o.data;
  const GradedBasis& vb = m.carrier_algebra.basis;
  const int nv = vb.dim();
  Report rep;
  for (int u = 0; u < nv; ++u) {
    const Element eu = unit(nv, u);
    const Element tu = o.t.apply(eu);
    for (int v = 0; v < nv; ++v) {
      const Element ev = unit(nv, v);
      const Element tv = o.t.apply(ev);
      const int kuv = koszul_sign(vb.p(u), vb.p(v));
      {
        Element arg = m.psi_bracket.of(tu).apply(ev);
        Element t2 = m.psi_bracket.of(tv).apply(eu);
        if (kuv == -1) t2 = -t2;
        arg -= t2;
        arg += o.weight * m.carrier_algebra.bracket.eval(u, v);
        const Element d = m.base.bracket.eval(tu, tv) - o.t.apply(arg);
        if (!d.is_zero()) rep.add({"fin1", {u, v}, sparse_of(d)});
      }
      {
        Element arg = m.psi_product.of(tu).apply(ev);
        Element t2 = m.psi_product.of(tv).apply(eu);
        if (kuv == -1) t2 = -t2;
        arg += t2;
        arg += o.weight * m.carrier_algebra.product.eval(u, v);
        const Element d = m.base.product.eval(tu, tv) - o.t.apply(arg);
        if (!d.is_zero()) rep.add({"fin2", {u, v}, sparse_of(d)});
      }
    }
  }
  return rep;
}

Report check_rota_baxter(const PoissonSuper& p, const Mat& t, const Rat& lambda) {
  const int n = p.basis.dim();
  Report rep;
  for (int u = 0; u < n; ++u) {
    const Element eu = unit(n, u);
    const Element tu = t.apply(eu);
    for (int v = 0; v < n; ++v) {
      const Element ev = unit(n, v);
      const Element tv = t.apply(ev);
      {
        Element arg = p.bracket.eval(tu, ev) + p.bracket.eval(eu, tv) +
                      lambda * p.bracket.eval(u, v);
        const Element d = p.bracket.eval(tu, tv) - t.apply(arg);
        if (!d.is_zero()) rep.add({"fin1", {u, v}, sparse_of(d)});
      }
      {
        Element arg = p.product.eval(tu, ev) + p.product.eval(eu, tv) +
                      lambda * p.product.eval(u, v);
        const Element d = p.product.eval(tu, tv) - t.apply(arg);
        if (!d.is_zero()) rep.add({"fin2", {u, v}, sparse_of(d)});
      }
    }
  }
  return rep;
}

Report check_post_lie(const GradedBasis& b, const BilinearLaw& bracket,
                      const BilinearLaw& diamond) {
  const int n = b.dim();
  Report rep = check_lie(b, bracket);
  rep.merge(check_even_law(b, diamond, "evenness"));
  for (int x = 0; x < n; ++x) {
    const Element ex = unit(n, x);
    for (int y = 0; y < n; ++y) {
      const Element ey = unit(n, y);
      for (int z = 0; z < n; ++z) {
        const Element ez = unit(n, z);
        const int kzy = koszul_sign(b.p(z), b.p(y));
        const int kzx = koszul_sign(b.p(z), b.p(x));
        {
          Element d = diamond.eval(ez, diamond.eval(y, x));
          if (kzy == -1) d = -d;
          d -= diamond.eval(ey, diamond.eval(z, x));
          d += diamond.eval(diamond.eval(y, z), ex);
          Element t = diamond.eval(diamond.eval(z, y), ex);
          if (kzy == -1) t = -t;
          d -= t;
          d += diamond.eval(bracket.eval(y, z), ex);
          if (!d.is_zero()) rep.add({"postlie1", {x, y, z}, sparse_of(d)});
        }
        {
          Element d = diamond.eval(ez, bracket.eval(x, y));
          d -= bracket.eval(diamond.eval(z, x), ey);
          Element t = bracket.eval(ex, diamond.eval(z, y));
          if (kzx == -1) t = -t;
          d -= t;
          if (!d.is_zero()) rep.add({"postlie2", {x, y, z}, sparse_of(d)});
        }
      }
    }
  }
  return rep;
}

Report check_comm_dendriform_tri(const GradedBasis& b, const BilinearLaw& dot,
                                 const BilinearLaw& succ) {
  const int n = b.dim();
  Report rep = check_comm_assoc(b, dot);
  rep.merge(check_even_law(b, succ, "evenness"));
  for (int x = 0; x < n; ++x) {
    const Element ex = unit(n, x);
    for (int y = 0; y < n; ++y) {
      const Element ey = unit(n, y);
      const int kxy = koszul_sign(b.p(x), b.p(y));
      for (int z = 0; z < n; ++z) {
        const Element ez = unit(n, z);
        {
          Element sum = succ.eval(x, y) + dot.eval(x, y);
          Element t = succ.eval(y, x);
          if (kxy == -1) t = -t;
          sum += t;
          const Element d = succ.eval(ex, succ.eval(y, z)) - succ.eval(sum, ez);
          if (!d.is_zero()) rep.add({"dend1", {x, y, z}, sparse_of(d)});
        }
        {
          const Element d = dot.eval(succ.eval(x, y), ez) - succ.eval(ex, dot.eval(y, z));
          if (!d.is_zero()) rep.add({"dend2", {x, y, z}, sparse_of(d)});
        }
      }
    }
  }
  return rep;
}

Report check_post_poisson(const PostPoisson& p) {
  const GradedBasis& b = p.basis;
  const int n = b.dim();
  Report rep = check_post_lie(b, p.op_bracket, p.op_diamond);
  rep.merge(check_comm_dendriform_tri(b, p.op_dot, p.op_succ));
  const auto esign = [](int exp) { return (exp & 1) ? -1 : 1; };
  for (int x = 0; x < n; ++x) {
    const Element ex = unit(n, x);
    for (int y = 0; y < n; ++y) {
      const Element ey = unit(n, y);
      const int kxy = koszul_sign(b.p(x), b.p(y));
      for (int z = 0; z < n; ++z) {
        const Element ez = unit(n, z);
        const int kxz = koszul_sign(b.p(x), b.p(z));
        const int kyz = koszul_sign(b.p(y), b.p(z));
        {
          Element d = p.op_bracket.eval(ex, p.op_dot.eval(y, z));
          d -= p.op_dot.eval(p.op_bracket.eval(x, y), ez);
          Element t = p.op_dot.eval(ey, p.op_bracket.eval(x, z));
          if (kxy == -1) t = -t;
          d -= t;
          if (!d.is_zero()) rep.add({"pp1", {x, y, z}, sparse_of(d)});
        }
        {
          Element d = p.op_bracket.eval(ex, p.op_succ.eval(z, y));
          Element t = p.op_succ.eval(ez, p.op_bracket.eval(x, y));
          if (kxz == -1) t = -t;
          d -= t;
          t = p.op_dot.eval(ey, p.op_diamond.eval(z, x));
          if (esign(b.p(y) * b.p(z) + b.p(x) * b.p(y) + b.p(x) * b.p(z)) == -1) t = -t;
          d += t;
          if (!d.is_zero()) rep.add({"pp2", {x, y, z}, sparse_of(d)});
        }
        {
          Element d = p.op_diamond.eval(ex, p.op_dot.eval(y, z));
          d -= p.op_dot.eval(p.op_diamond.eval(x, y), ez);
          Element t = p.op_dot.eval(ey, p.op_diamond.eval(x, z));
          if (kxy == -1) t = -t;
          d -= t;
          if (!d.is_zero()) rep.add({"pp3", {x, y, z}, sparse_of(d)});
        }
        {
          Element sum = p.op_succ.eval(y, z) + p.op_dot.eval(y, z);
          Element t = p.op_succ.eval(z, y);
          if (kyz == -1) t = -t;
          sum += t;
          Element d = p.op_diamond.eval(sum, ex);
          t = p.op_succ.eval(ez, p.op_diamond.eval(y, x));
          if (kyz == -1) t = -t;
          d -= t;
          d -= p.op_succ.eval(ey, p.op_diamond.eval(z, x));
          if (!d.is_zero()) rep.add({"pp4", {x, y, z}, sparse_of(d)});
        }
        {
          Element d = p.op_diamond.eval(ex, p.op_succ.eval(z, y));
          Element t = p.op_succ.eval(ez, p.op_diamond.eval(x, y));
          if (kxz == -1) t = -t;
          d -= t;
          Element sum = p.op_diamond.eval(x, z) + p.op_bracket.eval(x, z);
          t = p.op_diamond.eval(z, x);
          if (kxz == -1) t = -t;
          sum -= t;
          d -= p.op_succ.eval(sum, ey);
          if (!d.is_zero()) rep.add({"pp5", {x, y, z}, sparse_of(d)});
        }
      }
    }
  }
  return rep;
}

PoissonSuper associated_poisson(const PostPoisson& p) {
  const GradedBasis& b = p.basis;
  const int n = b.dim();
  PoissonSuper out;
  out.basis = b;
  out.bracket = BilinearLaw(n);
  out.product = BilinearLaw(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int kij = koszul_sign(b.p(i), b.p(j));
      Element t = p.op_diamond.eval(j, i);
      if (kij == -1) t = -t;
      out.bracket.set(i, j, p.op_diamond.eval(i, j) - t + p.op_bracket.eval(i, j));
      t = p.op_succ.eval(j, i);
      if (kij == -1) t = -t;
      out.product.set(i, j, p.op_succ.eval(i, j) + t + p.op_dot.eval(i, j));
    }
  return out;
}

PostPoisson post_from_o_operator(const OOperator& o) {
  const ModulePoissonData& m = o.data;
  const GradedBasis& vb = m.carrier_algebra.basis;
  const int nv = vb.dim();
  PostPoisson out;
  out.basis = vb;
  out.op_bracket = BilinearLaw(nv);
  out.op_diamond = BilinearLaw(nv);
  out.op_dot = BilinearLaw(nv);
  out.op_succ = BilinearLaw(nv);
  for (int u = 0; u < nv; ++u) {
    const Element tu = o.t.apply(unit(nv, u));
    const Mat du = m.psi_bracket.of(tu);
    const Mat su = m.psi_product.of(tu);
    for (int v = 0; v < nv; ++v) {
      const Element ev = unit(nv, v);
      out.op_bracket.set(u, v, o.weight * m.carrier_algebra.bracket.eval(u, v));
      out.op_diamond.set(u, v, du.apply(ev));
      out.op_dot.set(u, v, o.weight * m.carrier_algebra.product.eval(u, v));
      out.op_succ.set(u, v, su.apply(ev));
    }
  }
  return out;
}

OOperator quasitriangular_o_operator(const PoissonBialgebra& pb, const RMatrix& r,
                                     Pairing pc) {
  if (r.parity != 0)
    throw std::invalid_argument("quasitriangular constructions require an even r");
  if (!pybe_holds(pb.p, r))
    throw std::invalid_argument("r does not solve the Yang-Baxter equations");
  const int n = pb.p.basis.dim();
  const PoissonRep co = dual_rep(pb.p, adjoint_rep(pb.p));
  const Mat beta_map = r_as_map(pb.p.basis, symmetric_split(r).second, pc);

  OOperator o;
  o.data.base = pb.p;
  o.data.carrier_algebra.basis = co.carrier;
  o.data.carrier_algebra.bracket = BilinearLaw(n);
  o.data.carrier_algebra.product = BilinearLaw(n);
  for (int a = 0; a < n; ++a) {
    const Element ba = beta_map.apply(unit(n, a));
    // [a,b] = -2 ad*(beta(a))b; a.b = 2 L*(beta(a))b = -2 (-L*)(beta(a))b.
    const Mat adb = co.psi_bracket.of(ba);
    const Mat lb = co.psi_product.of(ba);
    for (int b = 0; b < n; ++b) {
      const Element eb = unit(n, b);
      o.data.carrier_algebra.bracket.set(a, b, Rat(-2) * adb.apply(eb));
      o.data.carrier_algebra.product.set(a, b, Rat(-2) * lb.apply(eb));
    }
  }
  o.data.psi_bracket = co.psi_bracket;
  o.data.psi_product = co.psi_product;
  o.t = r_as_map(pb.p.basis, r, pc);
  o.weight = Rat(1);
  return o;
}

PostPoisson post_from_quasitriangular(const PoissonBialgebra& pb, const RMatrix& r,
                                      Pairing pc) {
  const OOperator o = quasitriangular_o_operator(pb, r, pc);
  if (!check_o_operator(o).ok())
    throw std::logic_error("quasitriangular r failed the weight-1 intertwining check");
  return post_from_o_operator(o);
}

}  // namespace psa
