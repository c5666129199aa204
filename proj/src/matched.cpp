#include "psa/matched.hpp"

#include <algorithm>
#include <stdexcept>

#include "detail.hpp"

namespace psa {

using detail::sparse_of;

static void require_action_shape(const RepMap& r, int source_dim, int carrier_dim,
                                 const char* what) {
  if (static_cast<int>(r.action.size()) != source_dim)
    throw std::invalid_argument(std::string(what) + ": action count != source dimension");
  for (const Mat& m : r.action)
    if (m.rows != carrier_dim || m.cols != carrier_dim)
      throw std::invalid_argument(std::string(what) + ": action matrix shape mismatch");
}

static Element embed(const Element& v, int offset, int total) {
  Element e(total);
  for (int i = 0; i < v.dim(); ++i) e[offset + i] = v[i];
  return e;
}

/// Assemble the bowtie of two bilinear laws along one pair of cross actions.
/// `sg` is +1 for the product variant and -1 for the bracket variant.
static BilinearLaw bowtie_law(const GradedBasis& b1, const BilinearLaw& l1,
                              const GradedBasis& b2, const BilinearLaw& l2,
                              const RepMap& act1, const RepMap& act2, int sg) {
  const int n1 = b1.dim(), n2 = b2.dim(), n = n1 + n2;
  BilinearLaw out(n);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) {
      Element v = l1.eval(i, j);
      if (!v.is_zero()) out.set(i, j, embed(v, 0, n));
    }
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b) {
      Element v = l2.eval(a, b);
      if (!v.is_zero()) out.set(n1 + a, n1 + b, embed(v, n1, n));
    }
  for (int i = 0; i < n1; ++i)
    for (int b = 0; b < n2; ++b) {
      const int k = sg * koszul_sign(b1.p(i), b2.p(b));
      // op(e_i, f_b) = act1(e_i) f_b  (+/-) (-1)^{|e_i||f_b|} act2(f_b) e_i
      Element v = embed(act1.of(i).apply(unit(n2, b)), n1, n);
      Element w = embed(act2.of(b).apply(unit(n1, i)), 0, n);
      if (k == -1) w = -w;
      v += w;
      if (!v.is_zero()) out.set(i, n1 + b, std::move(v));
      // op(f_b, e_i) = act2(f_b) e_i  (+/-) (-1)^{|e_i||f_b|} act1(e_i) f_b
      Element u = embed(act2.of(b).apply(unit(n1, i)), 0, n);
      Element t = embed(act1.of(i).apply(unit(n2, b)), n1, n);
      if (k == -1) t = -t;
      u += t;
      if (!u.is_zero()) out.set(n1 + b, i, std::move(u));
    }
  return out;
}

static GradedBasis concat_basis(const GradedBasis& b1, const GradedBasis& b2) {
  GradedBasis out;
  out.parity = b1.parity;
  out.parity.insert(out.parity.end(), b2.parity.begin(), b2.parity.end());
  for (int i = 0; i < b1.dim(); ++i) out.label.push_back(b1.name(i));
  for (int a = 0; a < b2.dim(); ++a) out.label.push_back(b2.name(a));
  return out;
}

PoissonSuper bowtie(const MatchedPairData& m) {
  const int n1 = m.p1.basis.dim(), n2 = m.p2.basis.dim();
  require_action_shape(m.rho1, n1, n2, "bowtie: rho1");
  require_action_shape(m.phi1, n1, n2, "bowtie: phi1");
  require_action_shape(m.rho2, n2, n1, "bowtie: rho2");
  require_action_shape(m.phi2, n2, n1, "bowtie: phi2");
  PoissonSuper out;
  out.basis = concat_basis(m.p1.basis, m.p2.basis);
  out.bracket = bowtie_law(m.p1.basis, m.p1.bracket, m.p2.basis, m.p2.bracket, m.rho1, m.rho2, -1);
  out.product = bowtie_law(m.p1.basis, m.p1.product, m.p2.basis, m.p2.product, m.phi1, m.phi2, +1);
  return out;
}

/// rho'(z')[x,y] = [rho'(z')x, y] + (-1)^{|x||z'|}[x, rho'(z')y]
///   + (-1)^{|x||y|+|y||z'|} rho'(rho(y)z')x - (-1)^{|x||z'|} rho'(rho(x)z')y
/// where rho' acts on the side carrying the bracket and rho acts back.
static void cross_lie(Report& rep, const char* law_id, const GradedBasis& ba,
                      const BilinearLaw& bra, const GradedBasis& bb,
                      const RepMap& act_on_a, const RepMap& act_on_b) {
  const int na = ba.dim(), nb = bb.dim();
  for (int a = 0; a < nb; ++a)
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < na; ++j) {
        Element lhs = act_on_a.of(a).apply(bra.eval(i, j));
        Element t1 = bra.eval(act_on_a.of(a).apply(unit(na, i)), unit(na, j));
        Element t2 = bra.eval(unit(na, i), act_on_a.of(a).apply(unit(na, j)));
        if (koszul_sign(ba.p(i), bb.p(a)) == -1) t2 = -t2;
        Element t3 = act_on_a.of(act_on_b.of(j).apply(unit(nb, a))).apply(unit(na, i));
        if (koszul_sign(ba.p(i), ba.p(j)) * koszul_sign(ba.p(j), bb.p(a)) == -1) t3 = -t3;
        Element t4 = act_on_a.of(act_on_b.of(i).apply(unit(nb, a))).apply(unit(na, j));
        if (koszul_sign(ba.p(i), bb.p(a)) == -1) t4 = -t4;
        Element d = lhs - t1 - t2 - t3 + t4;
        if (!d.is_zero()) rep.add({law_id, {a, i, j}, sparse_of(d)});
      }
}

/// phi'(a)(x *_A y) = (phi'(a)x) *_A y + (-1)^{|x||a|} phi'(phi(x)a) y
/// where phi' acts on the side carrying the product and phi acts back.
static void cross_assoc(Report& rep, const char* law_id, const GradedBasis& ba,
                        const BilinearLaw& pra, const GradedBasis& bb,
                        const RepMap& act_on_a, const RepMap& act_on_b) {
  const int na = ba.dim(), nb = bb.dim();
  for (int a = 0; a < nb; ++a)
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < na; ++j) {
        Element lhs = act_on_a.of(a).apply(pra.eval(i, j));
        Element t1 = pra.eval(act_on_a.of(a).apply(unit(na, i)), unit(na, j));
        Element t2 = act_on_a.of(act_on_b.of(i).apply(unit(nb, a))).apply(unit(na, j));
        if (koszul_sign(ba.p(i), bb.p(a)) == -1) t2 = -t2;
        Element d = lhs - t1 - t2;
        if (!d.is_zero()) rep.add({law_id, {a, i, j}, sparse_of(d)});
      }
}

/// rho'(a)(x *_A y) = (rho'(a)x) *_A y + (-1)^{|a||x|} x *_A (rho'(a)y)
///   - (-1)^{|a||x|} phi'(rho(x)a) y - (-1)^{|a||y|+|x||y|} phi'(rho(y)a) x
static void cross_hom_product(Report& rep, const char* law_id, const GradedBasis& ba,
                              const BilinearLaw& pra, const GradedBasis& bb,
                              const RepMap& rho_on_a, const RepMap& phi_on_a,
                              const RepMap& rho_on_b) {
  const int na = ba.dim(), nb = bb.dim();
  for (int a = 0; a < nb; ++a)
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < na; ++j) {
        Element lhs = rho_on_a.of(a).apply(pra.eval(i, j));
        Element t1 = pra.eval(rho_on_a.of(a).apply(unit(na, i)), unit(na, j));
        Element t2 = pra.eval(unit(na, i), rho_on_a.of(a).apply(unit(na, j)));
        if (koszul_sign(bb.p(a), ba.p(i)) == -1) t2 = -t2;
        Element t3 = phi_on_a.of(rho_on_b.of(i).apply(unit(nb, a))).apply(unit(na, j));
        if (koszul_sign(bb.p(a), ba.p(i)) == -1) t3 = -t3;
        Element t4 = phi_on_a.of(rho_on_b.of(j).apply(unit(nb, a))).apply(unit(na, i));
        if (koszul_sign(bb.p(a), ba.p(j)) * koszul_sign(ba.p(i), ba.p(j)) == -1) t4 = -t4;
        Element d = lhs - t1 - t2 + t3 + t4;
        if (!d.is_zero()) rep.add({law_id, {a, i, j}, sparse_of(d)});
      }
}

/// {x, phi'(a)y}_A - (-1)^{|x||a|+|x||y|+|a||y|} rho'(phi(y)a)x
///   = phi'(rho(x)a)y - (-1)^{|x||a|} (rho'(a)x) *_A y + (-1)^{|x||a|} phi'(a){x,y}_A
static void cross_hom_bracket(Report& rep, const char* law_id, const GradedBasis& ba,
                              const BilinearLaw& bra, const BilinearLaw& pra,
                              const GradedBasis& bb, const RepMap& rho_on_a,
                              const RepMap& phi_on_a, const RepMap& rho_on_b,
                              const RepMap& phi_on_b) {
  const int na = ba.dim(), nb = bb.dim();
  for (int i = 0; i < na; ++i)
    for (int a = 0; a < nb; ++a)
      for (int j = 0; j < na; ++j) {
        const int kxa = koszul_sign(ba.p(i), bb.p(a));
        Element l1 = bra.eval(unit(na, i), phi_on_a.of(a).apply(unit(na, j)));
        Element l2 = rho_on_a.of(phi_on_b.of(j).apply(unit(nb, a))).apply(unit(na, i));
        if (kxa * koszul_sign(ba.p(i), ba.p(j)) * koszul_sign(bb.p(a), ba.p(j)) == -1) l2 = -l2;
        Element r1 = phi_on_a.of(rho_on_b.of(i).apply(unit(nb, a))).apply(unit(na, j));
        Element r2 = pra.eval(rho_on_a.of(a).apply(unit(na, i)), unit(na, j));
        if (kxa == -1) r2 = -r2;
        Element r3 = phi_on_a.of(a).apply(bra.eval(i, j));
        if (kxa == -1) r3 = -r3;
        Element d = l1 - l2 - r1 + r2 - r3;
        if (!d.is_zero()) rep.add({law_id, {i, a, j}, sparse_of(d)});
      }
}

Report check_matched_pair_lie(const LieSuper& l1, const LieSuper& l2,
                              const RepMap& rho1, const RepMap& rho2) {
  require_action_shape(rho1, l1.basis.dim(), l2.basis.dim(), "matched pair: rho1");
  require_action_shape(rho2, l2.basis.dim(), l1.basis.dim(), "matched pair: rho2");
  Report rep;
  rep.merge_as("left", check_lie(l1));
  rep.merge_as("right", check_lie(l2));
  rep.merge_as("left-action", check_lie_rep(l1.basis, l1.bracket, l2.basis, rho1));
  rep.merge_as("right-action", check_lie_rep(l2.basis, l2.bracket, l1.basis, rho2));
  cross_lie(rep, "matched-lie-1", l1.basis, l1.bracket, l2.basis, rho2, rho1);
  cross_lie(rep, "matched-lie-2", l2.basis, l2.bracket, l1.basis, rho1, rho2);
  return rep;
}

Report check_matched_pair_assoc(const AssocSuper& a1, const AssocSuper& a2,
                                const RepMap& phi1, const RepMap& phi2) {
  require_action_shape(phi1, a1.basis.dim(), a2.basis.dim(), "matched pair: phi1");
  require_action_shape(phi2, a2.basis.dim(), a1.basis.dim(), "matched pair: phi2");
  Report rep;
  rep.merge_as("left", check_comm_assoc(a1));
  rep.merge_as("right", check_comm_assoc(a2));
  rep.merge_as("left-action", check_assoc_rep(a1.basis, a1.product, a2.basis, phi1));
  rep.merge_as("right-action", check_assoc_rep(a2.basis, a2.product, a1.basis, phi2));
  cross_assoc(rep, "matched-assoc-1", a1.basis, a1.product, a2.basis, phi2, phi1);
  cross_assoc(rep, "matched-assoc-2", a2.basis, a2.product, a1.basis, phi1, phi2);
  return rep;
}

Report check_matched_pair_poisson(const MatchedPairData& m) {
  const int n1 = m.p1.basis.dim(), n2 = m.p2.basis.dim();
  require_action_shape(m.rho1, n1, n2, "matched pair: rho1");
  require_action_shape(m.phi1, n1, n2, "matched pair: phi1");
  require_action_shape(m.rho2, n2, n1, "matched pair: rho2");
  require_action_shape(m.phi2, n2, n1, "matched pair: phi2");
  Report rep;
  rep.merge_as("left", check_poisson(m.p1));
  rep.merge_as("right", check_poisson(m.p2));
  rep.merge_as("left-module", check_poisson_rep(m.p1, PoissonRep{m.p2.basis, m.rho1, m.phi1}));
  rep.merge_as("right-module", check_poisson_rep(m.p2, PoissonRep{m.p1.basis, m.rho2, m.phi2}));
  cross_lie(rep, "matched-lie-1", m.p1.basis, m.p1.bracket, m.p2.basis, m.rho2, m.rho1);
  cross_lie(rep, "matched-lie-2", m.p2.basis, m.p2.bracket, m.p1.basis, m.rho1, m.rho2);
  cross_assoc(rep, "matched-assoc-1", m.p1.basis, m.p1.product, m.p2.basis, m.phi2, m.phi1);
  cross_assoc(rep, "matched-assoc-2", m.p2.basis, m.p2.product, m.p1.basis, m.phi1, m.phi2);
  cross_hom_product(rep, "matched-poisson-1", m.p1.basis, m.p1.product, m.p2.basis, m.rho2,
                    m.phi2, m.rho1);
  cross_hom_bracket(rep, "matched-poisson-2", m.p1.basis, m.p1.bracket, m.p1.product, m.p2.basis,
                    m.rho2, m.phi2, m.rho1, m.phi1);
  cross_hom_product(rep, "matched-poisson-3", m.p2.basis, m.p2.product, m.p1.basis, m.rho1,
                    m.phi1, m.rho2);
  cross_hom_bracket(rep, "matched-poisson-4", m.p2.basis, m.p2.bracket, m.p2.product, m.p1.basis,
                    m.rho1, m.phi1, m.rho2, m.phi2);
  return rep;
}

BilinearForm standard_form(const GradedBasis& p_basis) {
  const int n = p_basis.dim();
  BilinearForm out;
  out.basis.parity = p_basis.parity;
  out.basis.parity.insert(out.basis.parity.end(), p_basis.parity.begin(), p_basis.parity.end());
  for (int i = 0; i < n; ++i) out.basis.label.push_back(p_basis.name(i));
  for (int i = 0; i < n; ++i) out.basis.label.push_back(p_basis.name(i) + "*");
  out.gram = Mat(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    out.gram.at(i, n + i) = Rat(1);
    out.gram.at(n + i, i) = p_basis.p(i) ? Rat(-1) : Rat(1);
  }
  return out;
}

int exact_rank(Mat m) {
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (!m.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == -1) continue;
    for (int k = 0; k < m.cols; ++k) std::swap(m.at(rank, k), m.at(pivot, k));
    for (int r = rank + 1; r < m.rows; ++r) {
      if (m.at(r, c).is_zero()) continue;
      Rat f = m.at(r, c) / m.at(rank, c);
      for (int k = c; k < m.cols; ++k) m.at(r, k) -= f * m.at(rank, k);
    }
    ++rank;
  }
  return rank;
}

static Rat form_eval(const BilinearForm& b, const Element& x, const Element& y) {
  Rat out;
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < y.dim(); ++j)
      if (!y[j].is_zero() && !b.gram.at(i, j).is_zero()) out += x[i] * b.gram.at(i, j) * y[j];
  }
  return out;
}

Report check_manin_triple(const PoissonSuper& total, const std::vector<int>& plus_indices,
                          const std::vector<int>& minus_indices, const BilinearForm& b) {
  const int n = total.basis.dim();
  {
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int i : plus_indices) {
      if (i < 0 || i >= n) throw std::invalid_argument("manin: index out of range");
      ++seen[static_cast<std::size_t>(i)];
    }
    for (int i : minus_indices) {
      if (i < 0 || i >= n) throw std::invalid_argument("manin: index out of range");
      ++seen[static_cast<std::size_t>(i)];
    }
    for (int s : seen)
      if (s != 1) throw std::invalid_argument("manin: plus/minus must partition the basis");
    if (b.gram.rows != n || b.gram.cols != n)
      throw std::invalid_argument("manin: form dimension mismatch");
  }

  Report rep;
  rep.merge_as("total", check_poisson(total));

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!b.gram.at(i, j).is_zero() && total.basis.p(i) != total.basis.p(j))
        rep.add({"form-evenness", {i, j}, {{{}, b.gram.at(i, j)}}});

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rat d = b.gram.at(j, i);
      Rat t = b.gram.at(i, j);
      if (koszul_sign(total.basis.p(i), total.basis.p(j)) == -1) t = -t;
      d -= t;
      if (!d.is_zero()) rep.add({"form-supersymmetry", {i, j}, {{{}, d}}});
    }

  if (int r = exact_rank(b.gram); r < n) rep.add({"form-nondegeneracy", {r}, {}});

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rat d = form_eval(b, total.bracket.eval(i, j), unit(n, k));
        d -= form_eval(b, unit(n, i), total.bracket.eval(j, k));
        if (!d.is_zero()) rep.add({"invariance-bracket", {i, j, k}, {{{}, d}}});
        Rat e = form_eval(b, total.product.eval(i, j), unit(n, k));
        e -= form_eval(b, unit(n, i), total.product.eval(j, k));
        if (!e.is_zero()) rep.add({"invariance-product", {i, j, k}, {{{}, e}}});
      }

  auto check_half = [&](const std::vector<int>& half, const char* sub_id, const char* iso_id) {
    std::vector<char> inside(static_cast<std::size_t>(n), 0);
    for (int i : half) inside[static_cast<std::size_t>(i)] = 1;
    for (int i : half)
      for (int j : half) {
        const BilinearLaw* ops[2] = {&total.bracket, &total.product};
        for (int op = 0; op < 2; ++op) {
          Element v = ops[op]->eval(i, j);
          std::vector<std::pair<std::vector<int>, Rat>> leak;
          for (int k = 0; k < n; ++k)
            if (!v[k].is_zero() && !inside[static_cast<std::size_t>(k)]) leak.push_back({{k}, v[k]});
          if (!leak.empty()) rep.add({sub_id, {i, j, op}, std::move(leak)});
        }
        if (!b.gram.at(i, j).is_zero()) rep.add({iso_id, {i, j}, {{{}, b.gram.at(i, j)}}});
      }
  };
  check_half(plus_indices, "subalgebra-plus", "isotropy-plus");
  check_half(minus_indices, "subalgebra-minus", "isotropy-minus");
  return rep;
}

}  // namespace psa
