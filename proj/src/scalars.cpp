#include <cstddef>
#include <stdexcept>

#include "spincover/errors.hpp"
#include "spincover/qsqrt2.hpp"
#include "spincover/qzeta8.hpp"

namespace spincover {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DiagonalNotTwo: return "DiagonalNotTwo";
    case ErrorCode::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorCode::ZeroNotSymmetric: return "ZeroNotSymmetric";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::C2ColourViolation: return "C2ColourViolation";
    case ErrorCode::NotDoublyLaced: return "NotDoublyLaced";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotSpin: return "NotSpin";
    case ErrorCode::NotSpin4: return "NotSpin4";
    case ErrorCode::UnsupportedAngle: return "UnsupportedAngle";
    case ErrorCode::RankTwoOnly: return "RankTwoOnly";
    case ErrorCode::BadParityColouring: return "BadParityColouring";
    case ErrorCode::NotSimplyLaced: return "NotSimplyLaced";
    case ErrorCode::ConstructionInvariantFailed: return "ConstructionInvariantFailed";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InconsistentColour: return "InconsistentColour";
    case ErrorCode::UnsupportedGlobalModel: return "UnsupportedGlobalModel";
    case ErrorCode::FormulaMismatch: return "FormulaMismatch";
    case ErrorCode::InputError: return "InputError";
  }
  return "UnknownError";
}

namespace {
const char* kSqrt2Sym = "\xE2\x88\x9A\x32";  // UTF-8 "√2"
}

std::string QSqrt2::str() const {
  if (b.is_zero()) return a.str();
  std::string out = a.str();
  if (b.sign() < 0) {
    out += " - " + (-b).str();
  } else {
    out += " + " + b.str();
  }
  out += kSqrt2Sym;
  return out;
}

QSqrt2 QSqrt2::parse(const std::string& s) {
  // Grammar: RAT | RAT (+|-) RAT "√2", with the split sign surrounded by
  // single spaces as produced by str().
  size_t pos = s.find(kSqrt2Sym);
  if (pos == std::string::npos) return QSqrt2(Rat::from_string(s));
  // locate " + " or " - " separating the two parts
  size_t sep = s.rfind(" + ", pos);
  size_t sepm = s.rfind(" - ", pos);
  bool neg = false;
  if (sepm != std::string::npos && (sep == std::string::npos || sepm > sep)) {
    sep = sepm;
    neg = true;
  }
  if (sep == std::string::npos) {
    // pure multiple of sqrt2, e.g. "1/2√2" or "-1√2"
    Rat rb = Rat::from_string(s.substr(0, pos));
    return QSqrt2(Rat(0), rb);
  }
  Rat ra = Rat::from_string(s.substr(0, sep));
  Rat rb = Rat::from_string(s.substr(sep + 3, pos - sep - 3));
  return QSqrt2(ra, neg ? -rb : rb);
}

QSqrt2 cos_pi4(long k) {
  long m = ((k % 8) + 8) % 8;
  const QSqrt2 h = QSqrt2::half_sqrt2();
  switch (m) {
    case 0: return QSqrt2(1);
    case 1: return h;
    case 2: return QSqrt2(0);
    case 3: return -h;
    case 4: return QSqrt2(-1);
    case 5: return -h;
    case 6: return QSqrt2(0);
    default: return h;
  }
}

QSqrt2 sin_pi4(long k) { return cos_pi4(k - 2); }

QZeta8 QZeta8::inverse() const {
  // x * conj(x) = (a+b√2)^2 + (c+d√2)^2 is a nonzero element of Q(√2).
  QSqrt2 re(a, b), im(c, d);
  QSqrt2 n = re * re + im * im;
  if (n.is_zero()) throw std::domain_error("QZeta8: division by zero");
  QSqrt2 ninv = n.inverse();
  QZeta8 cj = conj();
  QZeta8 scale(ninv.a, ninv.b, Rat(0), Rat(0));
  return cj * scale;
}

bool QZeta8::sqrt2_power_integral() const {
  // Multiplication by sqrt2 maps (a,b,c,d) -> (2b,a,2d,c); it suffices that
  // every coordinate has a power-of-two denominator, which a bounded number
  // of sqrt2 scalings then clears.
  QZeta8 x = *this;
  for (int k = 0; k < 128; ++k) {
    if (x.a.is_integer() && x.b.is_integer() && x.c.is_integer() && x.d.is_integer())
      return true;
    x = x * QZeta8::sqrt2();
  }
  return false;
}

std::string QZeta8::str() const {
  std::string out = QSqrt2(a, b).str();
  if (!c.is_zero() || !d.is_zero()) {
    out += " + (" + QSqrt2(c, d).str() + ")i";
  }
  return out;
}

}  // namespace spincover
