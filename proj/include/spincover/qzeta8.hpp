#pragma once

#include <string>

#include "spincover/qsqrt2.hpp"
#include "spincover/rational.hpp"

namespace spincover {

// Element a + b*sqrt(2) + c*i + d*i*sqrt(2) of Q(zeta_8) = Q(i, sqrt 2).
// Scalar ring of the generalized spin representation matrices.
struct QZeta8 {
  Rat a, b, c, d;

  QZeta8() : a(0), b(0), c(0), d(0) {}
  QZeta8(long n) : a(n), b(0), c(0), d(0) {}  // NOLINT(google-explicit-constructor)
  QZeta8(Rat ra, Rat rb, Rat rc, Rat rd) : a(ra), b(rb), c(rc), d(rd) {}
  QZeta8(const QSqrt2& x) : a(x.a), b(x.b), c(0), d(0) {}  // NOLINT

  static QZeta8 i() { return {Rat(0), Rat(0), Rat(1), Rat(0)}; }
  static QZeta8 sqrt2() { return {Rat(0), Rat(1), Rat(0), Rat(0)}; }
  static QZeta8 half_sqrt2() { return {Rat(0), Rat(1, 2), Rat(0), Rat(0)}; }

  QZeta8 operator+(const QZeta8& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  QZeta8 operator-(const QZeta8& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  QZeta8 operator-() const { return {-a, -b, -c, -d}; }
  QZeta8 operator*(const QZeta8& o) const {
    const Rat two(2);
    return {a * o.a + two * (b * o.b) - c * o.c - two * (d * o.d),
            a * o.b + b * o.a - c * o.d - d * o.c,
            a * o.c + c * o.a + two * (b * o.d + d * o.b),
            a * o.d + d * o.a + b * o.c + c * o.b};
  }
  QZeta8& operator+=(const QZeta8& o) { *this = *this + o; return *this; }
  QZeta8& operator*=(const QZeta8& o) { *this = *this * o; return *this; }

  // Complex conjugation i -> -i.
  QZeta8 conj() const { return {a, b, -c, -d}; }

  QZeta8 inverse() const;
  QZeta8 operator/(const QZeta8& o) const { return *this * o.inverse(); }

  bool operator==(const QZeta8& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator!=(const QZeta8& o) const { return !(*this == o); }
  bool operator<(const QZeta8& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    if (c != o.c) return c < o.c;
    return d < o.d;
  }

  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
  bool is_one() const { return a == Rat(1) && b.is_zero() && c.is_zero() && d.is_zero(); }
  bool is_real() const { return c.is_zero() && d.is_zero(); }

  // True when sqrt(2)^k * this has all four coordinates in Z for some k >= 0,
  // i.e. the element lies in (1/sqrt(2)^k) Z[i, sqrt 2].
  bool sqrt2_power_integral() const;

  std::string str() const;
};

}  // namespace spincover
