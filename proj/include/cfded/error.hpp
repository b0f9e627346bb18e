#pragma once

#include <stdexcept>
#include <string>

namespace cfded {

enum class ErrorCode {
  InvalidArgument,
  ZeroDenominator,
  DivisionByZero,
  PerfectSquare,
  UnsupportedRadicand,
  MixedRadicand,
  RationalValue,
  SyntaxError,
  IndexOutOfRange,
  IndexBeforePeriod,
  InvalidPeriod,
  NotCoprime,
  NotBounded,
  NotFound,
  ToleranceNotReached,
  IterationLimit,
  EmptyInput,
  InternalInvariant,
};

const char* error_code_name(ErrorCode code) noexcept;

// All library failures are reported through this type; the code is what the
// C API and the CLI dispatch on, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorCode::SyntaxError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cfded
