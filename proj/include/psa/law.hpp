#pragma once

#include <map>
#include <string>
#include <utility>

#include "psa/graded.hpp"
#include "psa/report.hpp"

namespace psa {

/// Bilinear operation on a graded space, stored as sparse structure constants:
/// op(e_i, e_j) = sum_k c[{i,j}][k] e_k. Missing pairs evaluate to zero.
struct BilinearLaw {
  int dim = 0;
  std::map<std::pair<int, int>, Element> c;

  BilinearLaw() = default;
  explicit BilinearLaw(int d) : dim(d) {}

  /// Set op(e_i, e_j) += v * e_k.
  void add(int i, int j, int k, const Rat& v);
  void set(int i, int j, Element value);

  /// op(e_i, e_j).
  Element eval(int i, int j) const;
  /// Bilinear extension to arbitrary coordinate vectors.
  Element eval(const Element& x, const Element& y) const;

  bool is_zero() const;
  friend bool operator==(const BilinearLaw&, const BilinearLaw&) = default;
};

/// Check that the law is an even map: op(e_i, e_j) is homogeneous of parity
/// p_i + p_j. Violations are reported under the given law id.
Report check_even_law(const GradedBasis& b, const BilinearLaw& l, const std::string& law_id);

/// Comultiplication-style map: one Tensor2 per basis vector, delta(e_i).
struct Cooperation {
  int dim = 0;
  std::map<int, Tensor2> im;

  Cooperation() = default;
  explicit Cooperation(int d) : dim(d) {}

  void add(int i, int j, int k, const Rat& v);
  Tensor2 eval(int i) const;
  /// Linear extension.
  Tensor2 eval(const Element& x) const;
  bool is_zero() const;
  friend bool operator==(const Cooperation&, const Cooperation&) = default;
};

/// Check that delta(e_i) is homogeneous of parity p_i.
Report check_even_cooperation(const GradedBasis& b, const Cooperation& d, const std::string& law_id);

}  // namespace psa
