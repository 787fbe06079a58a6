#pragma once

#include <map>
#include <string>
#include <vector>

#include "spincover/exact_matrix.hpp"
#include "spincover/qsqrt2.hpp"

namespace spincover {

// Element of the real Clifford algebra Cl(n) with e_i^2 = -1, stored as a
// finitely supported blade -> coefficient map. Blades are bitmasks over
// {1..n} (bit k-1 <=> e_k); coefficients lie in Q(sqrt 2) and zero
// coefficients are never stored.
class CliffordElement {
 public:
  CliffordElement() = default;
  explicit CliffordElement(int n) : n_(n) {}

  static CliffordElement scalar(int n, const QSqrt2& c);
  static CliffordElement one(int n) { return scalar(n, QSqrt2(1)); }
  // Basis vector e_i (1-based).
  static CliffordElement e(int n, int i);
  // Blade from ascending indices.
  static CliffordElement blade(int n, const std::vector<int>& idx, const QSqrt2& c = QSqrt2(1));

  int dim() const { return n_; }
  const std::map<unsigned, QSqrt2>& terms() const { return terms_; }
  QSqrt2 coeff(unsigned mask) const;
  void set_coeff(unsigned mask, const QSqrt2& c);

  CliffordElement operator+(const CliffordElement& o) const;
  CliffordElement operator-(const CliffordElement& o) const;
  CliffordElement operator-() const;
  CliffordElement operator*(const CliffordElement& o) const;
  CliffordElement scaled(const QSqrt2& c) const;

  bool operator==(const CliffordElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const CliffordElement& o) const { return !(*this == o); }
  bool operator<(const CliffordElement& o) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  bool has_even_support() const;

  // Transposition tau: k-blade -> (-1)^{k(k-1)/2}.
  CliffordElement reverse() const;
  // Parity automorphism Pi: k-blade -> (-1)^k.
  CliffordElement grade_involution() const;
  // sigma = tau . Pi.
  CliffordElement clifford_conj() const;
  // Spinor norm N(x) = x * sigma(x).
  CliffordElement spinor_norm() const;

  // Pin membership: N(x) = 1 and the twisted conjugation preserves grade 1.
  bool is_pin() const;
  bool is_spin() const;
  // Requires N(x) = 1; inverse is sigma(x), verified by multiplication.
  CliffordElement inverse() const;

  // Matrix of the twisted adjoint action rho_x on R^n: row i holds the
  // coordinates of rho_x(e_i) = Pi(x) e_i x^{-1}. Matrices act on row
  // vectors, so products reverse: rho(xy) = rho(y) rho(x). With this
  // convention rho(S(alpha)) = D(2 alpha) entry-for-entry.
  ExactMatrix twisted_adjoint() const;

  // Re-index blades along a strictly increasing vertex map into {1..m}.
  CliffordElement embed(int m, const std::vector<int>& index_map) const;

  std::string str() const;
  static CliffordElement parse(int n, const std::string& s);

 private:
  int n_ = 0;
  std::map<unsigned, QSqrt2> terms_;
};

// S(k pi/4) = cos(k pi/4) + sin(k pi/4) e1 e2 in Cl(2).
CliffordElement spin_generator_S(long k);

// epsilon-tilde_{I}: Cl(|I|) -> Cl(n) along ascending indices.
CliffordElement embed_spin(const CliffordElement& x, int n, const std::vector<int>& idx);

// Quaternion pair (u, v) with x = u + I v, I = e1e2e3e4, u,v spanned by
// 1, i = e1e2, j = e2e3, k = e3e1.
struct QuatPairSplit {
  QSqrt2 u[4];
  QSqrt2 v[4];
};

QuatPairSplit spin4_split(const CliffordElement& x);

enum class Spin4Side { Left, Right };

// Project a Spin(4) element to Spin(3) via u + I v -> u+v (left) or u-v
// (right), mapped into Cl(3) by 1,i,j,k -> 1, e1e2, e2e3, e3e1.
CliffordElement spin4_project(const CliffordElement& x, Spin4Side side);

}  // namespace spincover
