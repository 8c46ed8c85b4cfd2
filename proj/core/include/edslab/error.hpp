#pragma once

#include <stdexcept>
#include <string>

namespace edslab {

enum class ErrorCode {
  SingularCurve,
  PointNotOnCurve,
  NotMinimal,
  DegenerateSzpiro,
  InvalidKernel,
  NonRationalKernel,
  DomainMismatch,
  ReducesToIdentity,
  NonCoprimeDegrees,
  DivergencePrecision,
  IdentityPoint,
  KernelPoint,
  UnboundedComponent,
  BoundedComponent,
  HypothesisViolated,
  PreconditionViolated,
  FirstAlternative,
  InvalidA,
  TorsionPoint,
  NotOnBoundedComponent,
  EvenM,
  BudgetExhausted,
  FactorizationIncomplete,
  ParseError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace edslab
