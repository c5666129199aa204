#include "psa/law.hpp"

#include <stdexcept>

namespace psa {

void BilinearLaw::add(int i, int j, int k, const Rat& v) {
  if (v.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = c.find(key);
  if (it == c.end()) it = c.emplace(key, Element(dim)).first;
  it->second[k] += v;
  if (it->second.is_zero()) c.erase(it);
}

void BilinearLaw::set(int i, int j, Element value) {
  if (value.is_zero()) {
    c.erase({i, j});
    return;
  }
  if (value.dim() != dim) throw std::invalid_argument("BilinearLaw: value dimension mismatch");
  c.insert_or_assign({i, j}, std::move(value));
}

Element BilinearLaw::eval(int i, int j) const {
  auto it = c.find({i, j});
  return it == c.end() ? Element(dim) : it->second;
}

Element BilinearLaw::eval(const Element& x, const Element& y) const {
  if (x.dim() != dim || y.dim() != dim) throw std::invalid_argument("BilinearLaw: eval dimension mismatch");
  Element out(dim);
  for (const auto& [k, val] : c) {
    const Rat s = x[k.first] * y[k.second];
    if (s.is_zero()) continue;
    Element t = val;
    t *= s;
    out += t;
  }
  return out;
}

bool BilinearLaw::is_zero() const {
  for (const auto& [k, v] : c)
    if (!v.is_zero()) return false;
  return true;
}

static std::vector<std::pair<std::vector<int>, Rat>> sparse_of(const Element& e) {
  std::vector<std::pair<std::vector<int>, Rat>> out;
  for (int i = 0; i < e.dim(); ++i)
    if (!e[i].is_zero()) out.push_back({{i}, e[i]});
  return out;
}

Report check_even_law(const GradedBasis& b, const BilinearLaw& l, const std::string& law_id) {
  Report rep;
  const int n = b.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Element v = l.eval(i, j);
      if (homogeneous_of(b, v, (b.p(i) + b.p(j)) & 1)) continue;
      Element bad(n);
      for (int k = 0; k < n; ++k)
        if (!v[k].is_zero() && b.p(k) != ((b.p(i) + b.p(j)) & 1)) bad[k] = v[k];
      rep.add({law_id, {i, j}, sparse_of(bad)});
    }
  return rep;
}

void Cooperation::add(int i, int j, int k, const Rat& v) {
  if (v.is_zero()) return;
  auto it = im.find(i);
  if (it == im.end()) it = im.emplace(i, Tensor2{}).first;
  it->second.add(j, k, v);
  if (it->second.is_zero()) im.erase(it);
}

Tensor2 Cooperation::eval(int i) const {
  auto it = im.find(i);
  return it == im.end() ? Tensor2{} : it->second;
}

Tensor2 Cooperation::eval(const Element& x) const {
  Tensor2 out;
  for (const auto& [i, t] : im) {
    if (x[i].is_zero()) continue;
    Tensor2 s = t;
    s *= x[i];
    out += s;
  }
  return out;
}

bool Cooperation::is_zero() const {
  for (const auto& [i, t] : im)
    if (!t.is_zero()) return false;
  return true;
}

Report check_even_cooperation(const GradedBasis& b, const Cooperation& d, const std::string& law_id) {
  Report rep;
  for (const auto& [i, t] : d.im) {
    std::vector<std::pair<std::vector<int>, Rat>> bad;
    for (const auto& [k, v] : t.c)
      if (((b.p(k.first) + b.p(k.second)) & 1) != b.p(i)) bad.push_back({{k.first, k.second}, v});
    if (!bad.empty()) rep.add({law_id, {i}, std::move(bad)});
  }
  return rep;
}

}  // namespace psa
