#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ramanujan {

enum class ErrorCode {
  ZeroDenominator,
  MismatchedPoint,
  DivisionByZeroAtPoint,
  UnsupportedInRationalMode,
  DomainError,
  OracleOrderInsufficient,
  StepUndefined,
  InsufficientData,
  UnknownProblem,
  InvalidParameter,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ramanujan
