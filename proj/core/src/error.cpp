#include "diffnorm/error.hpp"

namespace diffnorm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::TagMismatch: return "TagMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UndefinedSeparant: return "UndefinedSeparant";
    case ErrorCode::MissingImage: return "MissingImage";
    case ErrorCode::UnassignedVariable: return "UnassignedVariable";
    case ErrorCode::NotContiguous: return "NotContiguous";
    case ErrorCode::BothConstantInV: return "BothConstantInV";
    case ErrorCode::QInIdeal: return "QInIdeal";
    case ErrorCode::ReducibleInput: return "ReducibleInput";
    case ErrorCode::PreconditionOrder: return "PreconditionOrder";
    case ErrorCode::NotDependent: return "NotDependent";
    case ErrorCode::ExhaustedTrials: return "ExhaustedTrials";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NoRationalRoot: return "NoRationalRoot";
    case ErrorCode::GuardUnsatisfiable: return "GuardUnsatisfiable";
    case ErrorCode::InconsistentInitialCondition: return "InconsistentInitialCondition";
    case ErrorCode::TimeComponentNotAffine: return "TimeComponentNotAffine";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NegativeDerivativeOrder: return "NegativeDerivativeOrder";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ParseError::ParseError(ErrorCode code, std::size_t position, const std::string& what)
    : Error(code, what + " (at offset " + std::to_string(position) + ")"), position_(position) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace diffnorm
