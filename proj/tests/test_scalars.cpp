#include <doctest.h>

#include "spincover/qsqrt2.hpp"
#include "spincover/qzeta8.hpp"

using namespace spincover;

TEST_CASE("rational basics") {
  Rat a(1, 3), b(2, 6);
  CHECK(a == b);
  CHECK((Rat(3, 4) + Rat(1, 4)) == Rat(1));
  CHECK(Rat(-4, 8).str() == "-1/2");
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(-1, 2).floor() == -1);
  CHECK(Rat(5, 4).mod(Rat(1)) == Rat(1, 4));
  CHECK(Rat(-1, 4).mod(Rat(2)) == Rat(7, 4));
}

TEST_CASE("QSqrt2 ring law (a+b√2)(c+d√2) = (ac+2bd)+(ad+bc)√2") {
  QSqrt2 x(Rat(2), Rat(3)), y(Rat(-1), Rat(5));
  QSqrt2 p = x * y;
  CHECK(p.a == Rat(2) * Rat(-1) + Rat(2) * (Rat(3) * Rat(5)));
  CHECK(p.b == Rat(2) * Rat(5) + Rat(3) * Rat(-1));
  CHECK(QSqrt2::sqrt2() * QSqrt2::sqrt2() == QSqrt2(2));
  CHECK(QSqrt2::half_sqrt2() * QSqrt2::sqrt2() == QSqrt2(1));
  CHECK(x * x.inverse() == QSqrt2(1));
}

TEST_CASE("QSqrt2 print/parse round trip") {
  QSqrt2 vals[] = {QSqrt2(0), QSqrt2(Rat(1, 2)), QSqrt2(Rat(0), Rat(-1, 3)),
                   QSqrt2(Rat(-5, 7), Rat(2, 9)), QSqrt2::half_sqrt2()};
  for (const auto& v : vals) CHECK(QSqrt2::parse(v.str()) == v);
}

TEST_CASE("cos/sin table at k pi/4") {
  CHECK(cos_pi4(0) == QSqrt2(1));
  CHECK(cos_pi4(1) == QSqrt2::half_sqrt2());
  CHECK(cos_pi4(2) == QSqrt2(0));
  CHECK(cos_pi4(4) == QSqrt2(-1));
  CHECK(sin_pi4(1) == QSqrt2::half_sqrt2());
  CHECK(sin_pi4(6) == QSqrt2(-1));
  for (long k = -8; k <= 8; ++k) {
    CHECK(cos_pi4(k) * cos_pi4(k) + sin_pi4(k) * sin_pi4(k) == QSqrt2(1));
    CHECK(cos_pi4(k) == cos_pi4(k + 8));
  }
}

TEST_CASE("QZeta8 ring identities") {
  QZeta8 i = QZeta8::i();
  QZeta8 s2 = QZeta8::sqrt2();
  CHECK(i * i == QZeta8(-1));
  CHECK(s2 * s2 == QZeta8(2));
  CHECK(i * s2 == s2 * i);
  QZeta8 zeta = (QZeta8(1) + i) * QZeta8::half_sqrt2();  // primitive 8th root
  QZeta8 p = zeta;
  for (int k = 1; k < 8; ++k) {
    CHECK(p != QZeta8(1));
    p = p * zeta;
  }
  CHECK(p == QZeta8(1));
  QZeta8 x(Rat(1, 2), Rat(-2, 3), Rat(3), Rat(0));
  CHECK(x * x.inverse() == QZeta8(1));
}

TEST_CASE("sqrt2-power integrality detector") {
  CHECK(QZeta8(Rat(1, 2), Rat(0), Rat(0), Rat(0)).sqrt2_power_integral());
  CHECK(QZeta8(Rat(1, 2), Rat(-3, 4), Rat(5, 8), Rat(1)).sqrt2_power_integral());
  CHECK(!QZeta8(Rat(1, 3), Rat(0), Rat(0), Rat(0)).sqrt2_power_integral());
}
