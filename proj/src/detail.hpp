#pragma once

// Internal helpers shared by the checker translation units.

#include <utility>
#include <vector>

#include "psa/graded.hpp"
#include "psa/law.hpp"
#include "psa/report.hpp"
#include "psa/representations.hpp"

namespace psa::detail {

/// Apply a cooperation to one leg of a 2-tensor (cooperations are even, so
/// no Koszul signs arise).
inline Tensor3 coop_leg(const Cooperation& d, const Tensor2& t, int leg) {
  Tensor3 out;
  for (const auto& [st, v] : t.c) {
    const Tensor2 img = d.eval(leg == 0 ? st.first : st.second);
    for (const auto& [uw, w] : img.c) {
      if (leg == 0)
        out.add(uw.first, uw.second, st.second, v * w);
      else
        out.add(st.first, uw.first, uw.second, v * w);
    }
  }
  return out;
}

/// tau (x) id on a 3-tensor: a (x) b (x) c -> (-1)^{|a||b|} b (x) a (x) c.
inline Tensor3 twist12(const GradedBasis& b, const Tensor3& t) {
  Tensor3 out;
  for (const auto& [k, v] : t.c) {
    Rat w = v;
    if (koszul_sign(b.p(k[0]), b.p(k[1])) == -1) w = -w;
    out.add(k[1], k[0], k[2], w);
  }
  return out;
}

/// Two-leg adjoint action ad(e_i) on a 2-tensor:
/// [x,u] (x) v + (-1)^{|x||u|} u (x) [x,v].
inline Tensor2 ad_total(const GradedBasis& b, const BilinearLaw& bracket, int i,
                        const Tensor2& t) {
  const std::vector<Element> cols = mat_cols(left_mult(b, bracket, i));
  return apply_leg2(b, t, 0, cols, b.p(i)) + apply_leg2(b, t, 1, cols, b.p(i));
}

inline std::vector<std::pair<std::vector<int>, Rat>> sparse_of(const Element& e) {
  std::vector<std::pair<std::vector<int>, Rat>> out;
  for (int i = 0; i < e.dim(); ++i)
    if (!e[i].is_zero()) out.push_back({{i}, e[i]});
  return out;
}

inline std::vector<std::pair<std::vector<int>, Rat>> sparse_of(const Tensor2& t) {
  std::vector<std::pair<std::vector<int>, Rat>> out;
  for (const auto& [k, v] : t.c) out.push_back({{k.first, k.second}, v});
  return out;
}

inline std::vector<std::pair<std::vector<int>, Rat>> sparse_of(const Tensor3& t) {
  std::vector<std::pair<std::vector<int>, Rat>> out;
  for (const auto& [k, v] : t.c) out.push_back({{k[0], k[1], k[2]}, v});
  return out;
}

}  // namespace psa::detail
