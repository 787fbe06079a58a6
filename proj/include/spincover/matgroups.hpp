#pragma once

#include <string>
#include <vector>

#include "spincover/clifford.hpp"
#include "spincover/exact_matrix.hpp"

namespace spincover {

// Quaternion over Q(sqrt 2).
struct Quat {
  QSqrt2 a, b, c, d;

  Quat() : a(1), b(0), c(0), d(0) {}
  Quat(QSqrt2 qa, QSqrt2 qb, QSqrt2 qc, QSqrt2 qd) : a(qa), b(qb), c(qc), d(qd) {}

  Quat operator*(const Quat& o) const {
    return {a * o.a - b * o.b - c * o.c - d * o.d,
            a * o.b + b * o.a + c * o.d - d * o.c,
            a * o.c - b * o.d + c * o.a + d * o.b,
            a * o.d + b * o.c - c * o.b + d * o.a};
  }
  Quat operator+(const Quat& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Quat operator-(const Quat& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Quat operator-() const { return {-a, -b, -c, -d}; }
  Quat conj() const { return {a, -b, -c, -d}; }
  QSqrt2 norm() const { return a * a + b * b + c * c + d * d; }
  bool is_unit() const { return norm().is_one(); }
  Quat inverse() const;

  bool operator==(const Quat& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator!=(const Quat& o) const { return !(*this == o); }
  bool operator<(const Quat& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    if (c != o.c) return c < o.c;
    return d < o.d;
  }

  std::string str() const;
};

// Left and right translation matrices on H with basis 1, i, j, k.
ExactMatrix left_mul_matrix(const Quat& x);
ExactMatrix right_mul_matrix(const Quat& x);

// --- SO(2)-level constructors (all angles are integer multiples of pi/4) ---

// D(k pi/4) = [[cos, sin], [-sin, cos]].
ExactMatrix rot_D(long k);
// Embed a 2x2 block at positions (i, j) of the n x n identity, 1-based.
ExactMatrix eps_ij(int n, int i, int j, const ExactMatrix& d2);
// iota_1/iota_2 : SO(2) -> SO(2) x SO(2) as 4x4 block-diagonal matrices.
ExactMatrix iota_so2(int slot, const ExactMatrix& d2);
// Point- and line-stabilizing circles in U(2) (as real 4x4 matrices).
ExactMatrix zeta_p(long k);
ExactMatrix zeta_l(long k);
// Point- and line-stabilizing circles in SO(4).
ExactMatrix eta_p(long k);
ExactMatrix eta_l(long k);

// --- SO(2) x SU(2), the double cover of U(2) -------------------------------

// SU(2) is carried as a unit quaternion q acting by the right-translation
// matrix R_q; the SO(2) factor as an angle k in units of pi/4.
struct SO2xSU2Element {
  long k = 0;  // mod 8
  Quat q;

  SO2xSU2Element() = default;
  SO2xSU2Element(long kk, Quat qq);

  SO2xSU2Element operator*(const SO2xSU2Element& o) const {
    return {k + o.k, q * o.q};
  }
  SO2xSU2Element inverse() const { return {-k, q.conj()}; }
  bool operator==(const SO2xSU2Element& o) const { return k == o.k && q == o.q; }
  bool operator!=(const SO2xSU2Element& o) const { return !(*this == o); }
  bool operator<(const SO2xSU2Element& o) const {
    if (k != o.k) return k < o.k;
    return q < o.q;
  }
  bool is_identity() const { return k == 0 && q == Quat(); }
  std::string str() const;
};

SO2xSU2Element zeta_tilde_p(long k);
SO2xSU2Element zeta_tilde_l(long k);

// rho-hat : SO(2) x SU(2) -> U(2) (real 4x4): blockdiag(D(k), D(k)) * R_q.
ExactMatrix rho_hat(const SO2xSU2Element& e);

// zeta-tilde : SO(2) x SU(2) -> Spin(3), (z, A) -> psi^{-1}(A).
CliffordElement zeta_tilde(const SO2xSU2Element& e);

// psi : Spin(3) -> SU(2) carried on quaternions.
Quat spin3_to_quat(const CliffordElement& x);
CliffordElement quat_to_spin3(const Quat& q);

// Identify an SO(2) x SU(2) element with its image in Spin(4) (Clifford).
CliffordElement so2xsu2_to_spin4(const SO2xSU2Element& e);

// eta : SO(4) = {x -> a x b^-1} -> SO(3), dropping the right factor:
// the conjugation action of a on the purely imaginary quaternions.
ExactMatrix eta_so4_to_so3(const Quat& a, const Quat& b);

// gamma_X(A) = X A X^{-1} for the diagonal/antidiagonal involutions that
// invert or swap the embedded circles. One pass/fail entry per identity,
// angles k = 0..7.
struct IdentityReport {
  struct Line {
    std::string name;
    bool pass;
  };
  std::vector<Line> lines;
  bool all_pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

IdentityReport conjugation_identity_suite();

}  // namespace spincover
