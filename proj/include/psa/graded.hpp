#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "psa/rational.hpp"

namespace psa {

/// Parity of a homogeneous basis vector: 0 (even) or 1 (odd).
using Parity = int;

/// Sign picked up when two homogeneous factors of parities p, q move past
/// each other: (-1)^{pq}. Returned as +1/-1.
inline int koszul_sign(Parity p, Parity q) { return (p & 1) && (q & 1) ? -1 : 1; }

/// Ordered homogeneous basis of a Z2-graded space.
struct GradedBasis {
  std::vector<Parity> parity;
  std::vector<std::string> label;  // optional; defaulted to e1, e2, ... when empty

  int dim() const { return static_cast<int>(parity.size()); }
  Parity p(int i) const { return parity[static_cast<std::size_t>(i)] & 1; }
  std::string name(int i) const;

  friend bool operator==(const GradedBasis&, const GradedBasis&) = default;
};

/// Make an n-dimensional basis from a parity list, with default labels.
GradedBasis make_basis(std::vector<Parity> parity);

/// Coordinate vector over a graded basis.
struct Element {
  std::vector<Rat> c;

  Element() = default;
  explicit Element(int dim) : c(static_cast<std::size_t>(dim)) {}

  int dim() const { return static_cast<int>(c.size()); }
  bool is_zero() const;
  const Rat& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  Rat& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rat& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rat& s, Element a) { return a *= s; }
  friend Element operator-(Element a);
  friend bool operator==(const Element&, const Element&) = default;
};

/// Basis vector e_i of an n-dimensional space.
Element unit(int dim, int i);

/// Is x homogeneous of parity q over the given basis (zero counts as yes)?
bool homogeneous_of(const GradedBasis& b, const Element& x, Parity q);

/// Sparse order-2 tensor: coefficients on e_i (x) e_j. No zero entries stored.
struct Tensor2 {
  std::map<std::pair<int, int>, Rat> c;

  bool is_zero() const { return c.empty(); }
  void add(int i, int j, const Rat& v);
  Rat at(int i, int j) const;

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  Tensor2& operator*=(const Rat& s);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator*(const Rat& s, Tensor2 a) { return a *= s; }
  friend bool operator==(const Tensor2&, const Tensor2&) = default;
};

/// Sparse order-3 tensor on e_i (x) e_j (x) e_k.
struct Tensor3 {
  std::map<std::array<int, 3>, Rat> c;

  bool is_zero() const { return c.empty(); }
  void add(int i, int j, int k, const Rat& v);

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  Tensor3& operator*=(const Rat& s);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(const Rat& s, Tensor3 a) { return a *= s; }
  friend bool operator==(const Tensor3&, const Tensor3&) = default;
};

/// Super twist tau(x (x) y) = (-1)^{|x||y|} y (x) x, entrywise on basis tensors.
Tensor2 twist(const GradedBasis& b, const Tensor2& t);

/// Super cyclic permutation xi = (id (x) tau)(tau (x) id):
/// x (x) y (x) z -> (-1)^{|x|(|y|+|z|)} y (x) z (x) x.
Tensor3 cyclic(const GradedBasis& b, const Tensor3& t);

/// Evaluation of a functional (coordinates over the dual basis) on a vector:
/// <a, x> = sum a_i x_i. The scalar pairing carries no sign; Koszul signs enter
/// only when tensor factors pass each other (see pair_tensor2).
Rat pair_dual(const Element& functional, const Element& vec);

/// Convention for pairing two-fold tensors against two-fold dual tensors.
/// koszul: <a (x) b, x (x) y> = (-1)^{|b||x|} <a,x> <b,y>   (default)
/// plain:  <a (x) b, x (x) y> = <a,x> <b,y>
enum class Pairing { koszul, plain };

/// Pair a tensor in A (x) A against the dual basis pair (e*_i, e*_j):
/// picks entry (i,j) weighted by (-1)^{p_i p_j} under the koszul convention.
Rat pair_tensor2(const GradedBasis& b, const Tensor2& t, int i, int j, Pairing pc);

/// x (x) y as a sparse tensor.
Tensor2 tensor_of(const Element& x, const Element& y);

/// Apply a linear map f (given entrywise as f(e_k) = column elements) of
/// parity pf to one leg of a tensor, inserting the Koszul sign of moving f
/// past the legs to its left. `leg` is 0-based.
Tensor2 apply_leg2(const GradedBasis& b, const Tensor2& t, int leg,
                   const std::vector<Element>& f_cols, Parity pf);
Tensor3 apply_leg3(const GradedBasis& b, const Tensor3& t, int leg,
                   const std::vector<Element>& f_cols, Parity pf);

}  // namespace psa
