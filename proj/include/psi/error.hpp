#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace psi {

enum class ErrorCode {
  ParseError,
  InvalidArgument,
  DuplicateMultiplierTerm,
  NotDiagonal,
  NotHermitian,
  ExplicitLimit,
  CapExceeded,
  DegreeMismatch,
  DomainTooSmall,
  ParamsInfeasible,
  EpsilonSearchFailed,
  NotInPsiD,
  CertificateFailure,
  Infeasible,
  BudgetExhausted,
  LambdaOutOfRange,
  PivotDominanceViolated,
  NumericalBreakdown,
  UnsupportedDimension,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace psi
