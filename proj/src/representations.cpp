#include "psa/representations.hpp"

#include <stdexcept>

#include "detail.hpp"

namespace psa {

using detail::sparse_of;

bool Mat::is_zero() const {
  for (const auto& v : a)
    if (!v.is_zero()) return false;
  return true;
}

Element Mat::apply(const Element& x) const {
  if (x.dim() != cols) throw std::invalid_argument("Mat: apply dimension mismatch");
  Element out(rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (!at(r, c).is_zero() && !x[c].is_zero()) out[r] += at(r, c) * x[c];
  return out;
}

static void require_same_shape(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("Mat: shape mismatch");
}

Mat& Mat::operator+=(const Mat& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
  return *this;
}

Mat& Mat::operator*=(const Rat& s) {
  for (auto& v : a) v *= s;
  return *this;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("Mat: composition shape mismatch");
  Mat out(x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(r, k).is_zero()) continue;
      for (int c = 0; c < y.cols; ++c)
        if (!y.at(k, c).is_zero()) out.at(r, c) += x.at(r, k) * y.at(k, c);
    }
  return out;
}

std::vector<Element> mat_cols(const Mat& m) {
  std::vector<Element> cols(static_cast<std::size_t>(m.cols), Element(m.rows));
  for (int c = 0; c < m.cols; ++c)
    for (int r = 0; r < m.rows; ++r) cols[static_cast<std::size_t>(c)][r] = m.at(r, c);
  return cols;
}

Mat RepMap::of(const Element& x) const {
  if (action.empty()) throw std::invalid_argument("RepMap: empty action");
  Mat out(action[0].rows, action[0].cols);
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i].is_zero()) continue;
    Mat t = of(i);
    t *= x[i];
    out += t;
  }
  return out;
}

Report check_rep_even(const GradedBasis& base, const GradedBasis& carrier, const RepMap& r,
                      const std::string& law_id) {
  Report rep;
  for (int i = 0; i < base.dim(); ++i) {
    const Mat& m = r.of(i);
    std::vector<std::pair<std::vector<int>, Rat>> bad;
    for (int out = 0; out < m.rows; ++out)
      for (int in = 0; in < m.cols; ++in)
        if (!m.at(out, in).is_zero() && carrier.p(out) != ((carrier.p(in) + base.p(i)) & 1))
          bad.push_back({{out, in}, m.at(out, in)});
    if (!bad.empty()) rep.add({law_id, {i}, std::move(bad)});
  }
  return rep;
}

static std::vector<std::pair<std::vector<int>, Rat>> sparse_of_mat(const Mat& m) {
  std::vector<std::pair<std::vector<int>, Rat>> out;
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (!m.at(r, c).is_zero()) out.push_back({{r, c}, m.at(r, c)});
  return out;
}

Report check_lie_rep(const GradedBasis& base, const BilinearLaw& bracket,
                     const GradedBasis& carrier, const RepMap& rho) {
  Report rep = check_rep_even(base, carrier, rho, "rep-evenness");
  const int n = base.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat rhs = rho.of(i) * rho.of(j);
      Mat t = rho.of(j) * rho.of(i);
      if (koszul_sign(base.p(i), base.p(j)) == -1) t *= Rat(-1);
      rhs -= t;
      Mat d = rho.of(bracket.eval(i, j)) - rhs;
      if (!d.is_zero()) rep.add({"lie-rep", {i, j}, sparse_of_mat(d)});
    }
  return rep;
}

Report check_assoc_rep(const GradedBasis& base, const BilinearLaw& product,
                       const GradedBasis& carrier, const RepMap& phi) {
  Report rep = check_rep_even(base, carrier, phi, "rep-evenness");
  const int n = base.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat d = phi.of(product.eval(i, j)) - phi.of(i) * phi.of(j);
      if (!d.is_zero()) rep.add({"assoc-rep", {i, j}, sparse_of_mat(d)});
    }
  return rep;
}

Report check_poisson_rep(const PoissonSuper& p, const PoissonRep& rep) {
  Report out = check_lie_rep(p.basis, p.bracket, rep.carrier, rep.psi_bracket);
  out.merge(check_assoc_rep(p.basis, p.product, rep.carrier, rep.psi_product));
  const int n = p.basis.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int sg = koszul_sign(p.basis.p(i), p.basis.p(j));
      {
        // psi_{,}(xy) = psi_.(x)psi_{,}(y) + (-1)^{|x||y|} psi_.(y)psi_{,}(x)
        Mat rhs = rep.psi_product.of(i) * rep.psi_bracket.of(j);
        Mat t = rep.psi_product.of(j) * rep.psi_bracket.of(i);
        if (sg == -1) t *= Rat(-1);
        rhs += t;
        Mat d = rep.psi_bracket.of(p.product.eval(i, j)) - rhs;
        if (!d.is_zero()) out.add({"poisson-rep-1", {i, j}, sparse_of_mat(d)});
      }
      {
        // psi_.({x,y}) = psi_{,}(x)psi_.(y) - (-1)^{|x||y|} psi_.(y)psi_{,}(x)
        Mat rhs = rep.psi_bracket.of(i) * rep.psi_product.of(j);
        Mat t = rep.psi_product.of(j) * rep.psi_bracket.of(i);
        if (sg == -1) t *= Rat(-1);
        rhs -= t;
        Mat d = rep.psi_product.of(p.bracket.eval(i, j)) - rhs;
        if (!d.is_zero()) out.add({"poisson-rep-2", {i, j}, sparse_of_mat(d)});
      }
    }
  return out;
}

PoissonSuper semidirect_product(const PoissonSuper& p, const PoissonRep& rep) {
  const int n = p.basis.dim();
  const int m = rep.carrier.dim();
  PoissonSuper out;
  out.basis.parity = p.basis.parity;
  out.basis.parity.insert(out.basis.parity.end(), rep.carrier.parity.begin(), rep.carrier.parity.end());
  for (int i = 0; i < n; ++i) out.basis.label.push_back(p.basis.name(i));
  for (int a = 0; a < m; ++a) out.basis.label.push_back(rep.carrier.name(a) + "'");
  out.bracket = BilinearLaw(n + m);
  out.product = BilinearLaw(n + m);

  auto embed = [&](const Element& v, int offset) {
    Element e(n + m);
    for (int i = 0; i < v.dim(); ++i) e[offset + i] = v[i];
    return e;
  };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Element br = p.bracket.eval(i, j);
      if (!br.is_zero()) out.bracket.set(i, j, embed(br, 0));
      Element pr = p.product.eval(i, j);
      if (!pr.is_zero()) out.product.set(i, j, embed(pr, 0));
    }
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a) {
      const int sg = koszul_sign(p.basis.p(i), rep.carrier.p(a));
      Element bv = rep.psi_bracket.of(i).apply(unit(m, a));
      Element pv = rep.psi_product.of(i).apply(unit(m, a));
      if (!bv.is_zero()) {
        out.bracket.set(i, n + a, embed(bv, n));
        Element w = embed(bv, n);
        if (sg == 1) w = -w;  // {v, x} = -(-1)^{|x||v|} {x, v}
        out.bracket.set(n + a, i, std::move(w));
      }
      if (!pv.is_zero()) {
        out.product.set(i, n + a, embed(pv, n));
        Element w = embed(pv, n);
        if (sg == -1) w = -w;  // v x = (-1)^{|x||v|} x v
        out.product.set(n + a, i, std::move(w));
      }
    }
  return out;
}

Report check_dual_rep_hypotheses(const PoissonSuper& p, const PoissonRep& rep) {
  Report out;
  const int n = p.basis.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int sg = koszul_sign(p.basis.p(i), p.basis.p(j));
      {
        // psi_{,}(xy) = psi_{,}(x)psi_.(y) + (-1)^{|x||y|} psi_{,}(y)psi_.(x)
        Mat rhs = rep.psi_bracket.of(i) * rep.psi_product.of(j);
        Mat t = rep.psi_bracket.of(j) * rep.psi_product.of(i);
        if (sg == -1) t *= Rat(-1);
        rhs += t;
        Mat d = rep.psi_bracket.of(p.product.eval(i, j)) - rhs;
        if (!d.is_zero()) out.add({"dual-hypothesis-1", {i, j}, sparse_of_mat(d)});
      }
      {
        // psi_.({x,y}) = psi_{,}(x)psi_.(y) - (-1)^{|x||y|} psi_.(y)psi_{,}(x)
        Mat rhs = rep.psi_bracket.of(i) * rep.psi_product.of(j);
        Mat t = rep.psi_product.of(j) * rep.psi_bracket.of(i);
        if (sg == -1) t *= Rat(-1);
        rhs -= t;
        Mat d = rep.psi_product.of(p.bracket.eval(i, j)) - rhs;
        if (!d.is_zero()) out.add({"dual-hypothesis-2", {i, j}, sparse_of_mat(d)});
      }
    }
  return out;
}

Mat dual_action(const GradedBasis& carrier, const Mat& m, Parity p_act) {
  // M*[k][j] = -(-1)^{p_act * p_j} M[j][k]
  Mat out(m.cols, m.rows);
  for (int k = 0; k < m.cols; ++k)
    for (int j = 0; j < m.rows; ++j) {
      const Rat& v = m.at(j, k);
      if (v.is_zero()) continue;
      out.at(k, j) = koszul_sign(p_act, carrier.p(j)) == -1 ? v : -v;
    }
  return out;
}

PoissonRep dual_rep(const PoissonSuper& p, const PoissonRep& rep) {
  PoissonRep out;
  out.carrier = rep.carrier;
  out.carrier.label.clear();
  for (int i = 0; i < rep.carrier.dim(); ++i)
    out.carrier.label.push_back(rep.carrier.name(i) + "*");
  const int n = p.basis.dim();
  for (int i = 0; i < n; ++i) {
    out.psi_bracket.action.push_back(dual_action(rep.carrier, rep.psi_bracket.of(i), p.basis.p(i)));
    Mat mp = dual_action(rep.carrier, rep.psi_product.of(i), p.basis.p(i));
    mp *= Rat(-1);  // the product part of the dual module is -psi*_.
    out.psi_product.action.push_back(std::move(mp));
  }
  return out;
}

PoissonRep adjoint_rep(const PoissonSuper& p) {
  PoissonRep rep;
  rep.carrier = p.basis;
  for (int i = 0; i < p.basis.dim(); ++i) {
    rep.psi_bracket.action.push_back(left_mult(p.basis, p.bracket, i));
    rep.psi_product.action.push_back(left_mult(p.basis, p.product, i));
  }
  return rep;
}

Mat left_mult(const GradedBasis& b, const BilinearLaw& law, int i) {
  const int n = b.dim();
  Mat m(n, n);
  for (int j = 0; j < n; ++j) {
    Element v = law.eval(i, j);
    for (int r = 0; r < n; ++r) m.at(r, j) = v[r];
  }
  return m;
}

Mat right_mult_t(const GradedBasis& b, const BilinearLaw& law, int i) {
  const int n = b.dim();
  Mat m(n, n);
  for (int j = 0; j < n; ++j) {
    Element v = law.eval(j, i);
    for (int r = 0; r < n; ++r) m.at(r, j) = v[r];
  }
  return m;
}

Mat right_mult_r(const GradedBasis& b, const BilinearLaw& law, int i) {
  const int n = b.dim();
  Mat m(n, n);
  for (int j = 0; j < n; ++j) {
    Element v = law.eval(j, i);
    if (koszul_sign(b.p(j), b.p(i)) == -1) v = -v;
    for (int r = 0; r < n; ++r) m.at(r, j) = v[r];
  }
  return m;
}

}  // namespace psa
