#include "lcmlat/error.hpp"

namespace lcmlat {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kNotReduced: return "NotReduced";
    case ErrorCode::kBadIndexOrder: return "BadIndexOrder";
    case ErrorCode::kBadIndex: return "BadIndex";
    case ErrorCode::kNotSemilattice: return "NotSemilattice";
    case ErrorCode::kNotMaximal: return "NotMaximal";
    case ErrorCode::kSizeTooLarge: return "SizeTooLarge";
    case ErrorCode::kWrongSize: return "WrongSize";
    case ErrorCode::kNonPositive: return "NonPositive";
    case ErrorCode::kNotGcdClosed: return "NotGcdClosed";
    case ErrorCode::kBadPrimes: return "BadPrimes";
    case ErrorCode::kNoTopDivisor: return "NoTopDivisor";
    case ErrorCode::kNonIntegerAlphaInExactMode: return "NonIntegerAlphaInExactMode";
    case ErrorCode::kInvalidExponent: return "InvalidExponent";
    case ErrorCode::kFactoringTooHard: return "FactoringTooHard";
    case ErrorCode::kPrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::kNoPositiveMobius: return "NoPositiveMobius";
    case ErrorCode::kIsWedgeTree: return "IsWedgeTree";
    case ErrorCode::kRMaxExceeded: return "RMaxExceeded";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
      code_(code) {}

}  // namespace lcmlat
