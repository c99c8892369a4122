#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace diffnorm {

enum class ErrorCode {
  InvalidArgument,
  TagMismatch,
  DivisionByZero,
  UndefinedSeparant,
  MissingImage,
  UnassignedVariable,
  NotContiguous,
  BothConstantInV,
  QInIdeal,
  ReducibleInput,
  PreconditionOrder,
  NotDependent,
  ExhaustedTrials,
  BoundExceeded,
  NoRationalRoot,
  GuardUnsatisfiable,
  InconsistentInitialCondition,
  TimeComponentNotAffine,
  InvariantViolation,
  SyntaxError,
  NegativeDerivativeOrder,
};

std::string_view to_string(ErrorCode code);

/// Base of every exception thrown by the library. The code identifies the
/// failure class so front ends can map it to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with the byte offset into the input where it was detected.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t position, const std::string& what);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace diffnorm
