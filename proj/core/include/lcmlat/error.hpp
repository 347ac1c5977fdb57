#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcmlat {

enum class ErrorCode {
  kCycleDetected,
  kNotReduced,
  kBadIndexOrder,
  kBadIndex,
  kNotSemilattice,
  kNotMaximal,
  kSizeTooLarge,
  kWrongSize,
  kNonPositive,
  kNotGcdClosed,
  kBadPrimes,
  kNoTopDivisor,
  kNonIntegerAlphaInExactMode,
  kInvalidExponent,
  kFactoringTooHard,
  kPrecisionExhausted,
  kNoPositiveMobius,
  kIsWedgeTree,
  kRMaxExceeded,
  kSyntaxError,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Domain error raised by every lcmlat operation. The code identifies the
/// failed precondition; what() carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lcmlat
