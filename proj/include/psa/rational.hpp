#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace psa {

/// Exact rational scalar.
///
/// Thin value wrapper around an arbitrary-precision rational, kept in canonical
/// form at all times: gcd-reduced, denominator > 0, zero represented as 0/1.
/// Every comparison in the library is exact; there is no tolerance anywhere.
class Rat {
public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}
  Rat(long num, long den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    q_.canonicalize();
  }

  /// Parse "p" or "p/q" with optional leading '-'. Rejects anything else.
  static Rat parse(const std::string& s) {
    if (!looks_like_rational(s)) throw std::invalid_argument("Rat: malformed rational '" + s + "'");
    Rat r;
    r.q_ = mpq_class(s, 10);
    if (r.q_.get_den() == 0) throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
    r.q_.canonicalize();
    return r;
  }

  /// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
  std::string str() const { return q_.get_str(); }

  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat operator-() const { return Rat(-q_); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

private:
  explicit Rat(mpq_class q) : q_(std::move(q)) {}

  static bool looks_like_rational(const std::string& s) {
    std::size_t i = 0, n = s.size();
    auto digits = [&](std::size_t& k) {
      std::size_t start = k;
      while (k < n && s[k] >= '0' && s[k] <= '9') ++k;
      return k > start;
    };
    if (i < n && s[i] == '-') ++i;
    if (!digits(i)) return false;
    if (i == n) return true;
    if (s[i] != '/') return false;
    ++i;
    if (!digits(i)) return false;
    return i == n;
  }

  mpq_class q_;
};

}  // namespace psa
