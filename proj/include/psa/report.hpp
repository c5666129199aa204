#pragma once

#include <string>
#include <utility>
#include <vector>

#include "psa/rational.hpp"

namespace psa {

/// One failed axiom instance: which law, at which basis indices, and the
/// exact nonzero discrepancy (sparse multi-index coefficients).
struct Violation {
  std::string law;
  std::vector<int> witness;
  std::vector<std::pair<std::vector<int>, Rat>> discrepancy;
};

/// Outcome of a checker: empty means the axiom system holds exactly.
struct Report {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(Violation v) { violations.push_back(std::move(v)); }
  void merge(const Report& o) {
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
  /// Merge with the sub-checker's law ids prefixed ("prefix/sub-law").
  void merge_as(const std::string& prefix, const Report& o) {
    for (Violation v : o.violations) {
      v.law = prefix + "/" + v.law;
      violations.push_back(std::move(v));
    }
  }
};

}  // namespace psa
