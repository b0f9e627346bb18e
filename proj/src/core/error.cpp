#include "cfded/error.hpp"

namespace cfded {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PerfectSquare: return "PerfectSquare";
    case ErrorCode::UnsupportedRadicand: return "UnsupportedRadicand";
    case ErrorCode::MixedRadicand: return "MixedRadicand";
    case ErrorCode::RationalValue: return "RationalValue";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IndexBeforePeriod: return "IndexBeforePeriod";
    case ErrorCode::InvalidPeriod: return "InvalidPeriod";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotBounded: return "NotBounded";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::ToleranceNotReached: return "ToleranceNotReached";
    case ErrorCode::IterationLimit: return "IterationLimit";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace cfded
