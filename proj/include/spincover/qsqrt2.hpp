#pragma once

#include <string>

#include "spincover/rational.hpp"

namespace spincover {

// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
// Every scalar produced by the S(k*pi/4) generators lives here.
struct QSqrt2 {
  Rat a;
  Rat b;

  QSqrt2() : a(0), b(0) {}
  QSqrt2(Rat ra) : a(ra), b(0) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(long n) : a(n), b(0) {}   // NOLINT(google-explicit-constructor)
  QSqrt2(Rat ra, Rat rb) : a(ra), b(rb) {}

  static QSqrt2 sqrt2() { return QSqrt2(Rat(0), Rat(1)); }
  // sqrt(2)/2 = 1/sqrt(2), the cos/sin of pi/4.
  static QSqrt2 half_sqrt2() { return QSqrt2(Rat(0), Rat(1, 2)); }

  QSqrt2 operator+(const QSqrt2& o) const { return {a + o.a, b + o.b}; }
  QSqrt2 operator-(const QSqrt2& o) const { return {a - o.a, b - o.b}; }
  QSqrt2 operator-() const { return {-a, -b}; }
  QSqrt2 operator*(const QSqrt2& o) const {
    return {a * o.a + Rat(2) * (b * o.b), a * o.b + b * o.a};
  }
  QSqrt2& operator+=(const QSqrt2& o) { a += o.a; b += o.b; return *this; }
  QSqrt2& operator-=(const QSqrt2& o) { a -= o.a; b -= o.b; return *this; }
  QSqrt2& operator*=(const QSqrt2& o) { *this = *this * o; return *this; }

  // Galois conjugate a - b*sqrt(2).
  QSqrt2 conj() const { return {a, -b}; }

  // Field norm a^2 - 2 b^2 (zero iff the element is zero).
  Rat field_norm() const { return a * a - Rat(2) * (b * b); }

  QSqrt2 inverse() const {
    Rat n = field_norm();
    if (n.is_zero()) throw std::domain_error("QSqrt2: division by zero");
    return {a / n, -b / n};
  }
  QSqrt2 operator/(const QSqrt2& o) const { return *this * o.inverse(); }

  bool operator==(const QSqrt2& o) const { return a == o.a && b == o.b; }
  bool operator!=(const QSqrt2& o) const { return !(*this == o); }
  bool operator<(const QSqrt2& o) const {
    if (a != o.a) return a < o.a;
    return b < o.b;
  }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_one() const { return a == Rat(1) && b.is_zero(); }

  // "p/q + r/s√2", with the sqrt part omitted when b = 0.
  std::string str() const;
  static QSqrt2 parse(const std::string& s);
};

// cos(k*pi/4) and sin(k*pi/4), exact.
QSqrt2 cos_pi4(long k);
QSqrt2 sin_pi4(long k);

}  // namespace spincover
