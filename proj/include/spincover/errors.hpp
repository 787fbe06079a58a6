#pragma once

#include <stdexcept>
#include <string>

namespace spincover {

// Machine-readable failure codes; the message carries the human context
// (offending entry, pair, axiom).
enum class ErrorCode {
  DiagonalNotTwo,
  PositiveOffDiagonal,
  ZeroNotSymmetric,
  SameVertex,
  NotAdmissible,
  C2ColourViolation,
  NotDoublyLaced,
  DimensionMismatch,
  NotInvertible,
  NotSpin,
  NotSpin4,
  UnsupportedAngle,
  RankTwoOnly,
  BadParityColouring,
  NotSimplyLaced,
  ConstructionInvariantFailed,
  CapExceeded,
  InconsistentColour,
  UnsupportedGlobalModel,
  FormulaMismatch,
  InputError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spincover
