#include "psa/graded.hpp"

#include <stdexcept>

namespace psa {

std::string GradedBasis::name(int i) const {
  const auto k = static_cast<std::size_t>(i);
  if (k < label.size() && !label[k].empty()) return label[k];
  return "e" + std::to_string(i + 1);
}

GradedBasis make_basis(std::vector<Parity> parity) {
  GradedBasis b;
  b.parity = std::move(parity);
  for (auto& p : b.parity) p &= 1;
  return b;
}

bool Element::is_zero() const {
  for (const auto& v : c)
    if (!v.is_zero()) return false;
  return true;
}

static void require_same_dim(const Element& a, const Element& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("Element: dimension mismatch");
}

Element& Element::operator+=(const Element& o) {
  require_same_dim(*this, o);
  for (int i = 0; i < dim(); ++i) (*this)[i] += o[i];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_dim(*this, o);
  for (int i = 0; i < dim(); ++i) (*this)[i] -= o[i];
  return *this;
}

Element& Element::operator*=(const Rat& s) {
  for (auto& v : c) v *= s;
  return *this;
}

Element operator-(Element a) {
  for (auto& v : a.c) v = -v;
  return a;
}

Element unit(int dim, int i) {
  Element e(dim);
  e[i] = Rat(1);
  return e;
}

bool homogeneous_of(const GradedBasis& b, const Element& x, Parity q) {
  for (int i = 0; i < x.dim(); ++i)
    if (!x[i].is_zero() && b.p(i) != (q & 1)) return false;
  return true;
}

void Tensor2::add(int i, int j, const Rat& v) {
  if (v.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = c.find(key);
  if (it == c.end()) {
    c.emplace(key, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

Rat Tensor2::at(int i, int j) const {
  auto it = c.find({i, j});
  return it == c.end() ? Rat(0) : it->second;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  for (const auto& [k, v] : o.c) add(k.first, k.second, v);
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  for (const auto& [k, v] : o.c) add(k.first, k.second, -v);
  return *this;
}

Tensor2& Tensor2::operator*=(const Rat& s) {
  if (s.is_zero()) {
    c.clear();
    return *this;
  }
  for (auto& [k, v] : c) v *= s;
  return *this;
}

void Tensor3::add(int i, int j, int k, const Rat& v) {
  if (v.is_zero()) return;
  std::array<int, 3> key{i, j, k};
  auto it = c.find(key);
  if (it == c.end()) {
    c.emplace(key, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  for (const auto& [k, v] : o.c) add(k[0], k[1], k[2], v);
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  for (const auto& [k, v] : o.c) add(k[0], k[1], k[2], -v);
  return *this;
}

Tensor3& Tensor3::operator*=(const Rat& s) {
  if (s.is_zero()) {
    c.clear();
    return *this;
  }
  for (auto& [k, v] : c) v *= s;
  return *this;
}

Tensor2 twist(const GradedBasis& b, const Tensor2& t) {
  Tensor2 out;
  for (const auto& [k, v] : t.c) {
    const auto [i, j] = k;
    out.add(j, i, koszul_sign(b.p(i), b.p(j)) == -1 ? -v : v);
  }
  return out;
}

Tensor3 cyclic(const GradedBasis& b, const Tensor3& t) {
  Tensor3 out;
  for (const auto& [k, v] : t.c) {
    const int i = k[0], j = k[1], l = k[2];
    const int s = koszul_sign(b.p(i), (b.p(j) + b.p(l)) & 1);
    out.add(j, l, i, s == -1 ? -v : v);
  }
  return out;
}

Rat pair_dual(const Element& functional, const Element& vec) {
  require_same_dim(functional, vec);
  Rat acc(0);
  for (int i = 0; i < vec.dim(); ++i) acc += functional[i] * vec[i];
  return acc;
}

Rat pair_tensor2(const GradedBasis& b, const Tensor2& t, int i, int j, Pairing pc) {
  Rat v = t.at(i, j);
  if (pc == Pairing::koszul && koszul_sign(b.p(i), b.p(j)) == -1) return -v;
  return v;
}

Tensor2 tensor_of(const Element& x, const Element& y) {
  Tensor2 out;
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < y.dim(); ++j) out.add(i, j, x[i] * y[j]);
  }
  return out;
}

Tensor2 apply_leg2(const GradedBasis& b, const Tensor2& t, int leg,
                   const std::vector<Element>& f_cols, Parity pf) {
  Tensor2 out;
  for (const auto& [k, v] : t.c) {
    const int idx[2] = {k.first, k.second};
    Parity below = 0;
    for (int m = 0; m < leg; ++m) below = (below + b.p(idx[m])) & 1;
    const Rat sv = koszul_sign(pf, below) == -1 ? -v : v;
    const Element& img = f_cols[static_cast<std::size_t>(idx[leg])];
    for (int m = 0; m < img.dim(); ++m) {
      if (img[m].is_zero()) continue;
      if (leg == 0)
        out.add(m, idx[1], sv * img[m]);
      else
        out.add(idx[0], m, sv * img[m]);
    }
  }
  return out;
}

Tensor3 apply_leg3(const GradedBasis& b, const Tensor3& t, int leg,
                   const std::vector<Element>& f_cols, Parity pf) {
  Tensor3 out;
  for (const auto& [k, v] : t.c) {
    Parity below = 0;
    for (int m = 0; m < leg; ++m) below = (below + b.p(k[m])) & 1;
    const Rat sv = koszul_sign(pf, below) == -1 ? -v : v;
    const Element& img = f_cols[static_cast<std::size_t>(k[leg])];
    for (int m = 0; m < img.dim(); ++m) {
      if (img[m].is_zero()) continue;
      std::array<int, 3> key = k;
      key[static_cast<std::size_t>(leg)] = m;
      out.add(key[0], key[1], key[2], sv * img[m]);
    }
  }
  return out;
}

}  // namespace psa
