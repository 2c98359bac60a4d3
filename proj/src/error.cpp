#include "ramanujan/error.hpp"

namespace ramanujan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::MismatchedPoint: return "MismatchedPoint";
    case ErrorCode::DivisionByZeroAtPoint: return "DivisionByZeroAtPoint";
    case ErrorCode::UnsupportedInRationalMode: return "UnsupportedInRationalMode";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::OracleOrderInsufficient: return "OracleOrderInsufficient";
    case ErrorCode::StepUndefined: return "StepUndefined";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::UnknownProblem: return "UnknownProblem";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
  }
  return "Unknown";
}

}  // namespace ramanujan
