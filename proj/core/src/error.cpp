#include "edslab/error.hpp"

namespace edslab {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::DegenerateSzpiro: return "DegenerateSzpiro";
    case ErrorCode::InvalidKernel: return "InvalidKernel";
    case ErrorCode::NonRationalKernel: return "NonRationalKernel";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::ReducesToIdentity: return "ReducesToIdentity";
    case ErrorCode::NonCoprimeDegrees: return "NonCoprimeDegrees";
    case ErrorCode::DivergencePrecision: return "DivergencePrecision";
    case ErrorCode::IdentityPoint: return "IdentityPoint";
    case ErrorCode::KernelPoint: return "KernelPoint";
    case ErrorCode::UnboundedComponent: return "UnboundedComponent";
    case ErrorCode::BoundedComponent: return "BoundedComponent";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::FirstAlternative: return "FirstAlternative";
    case ErrorCode::InvalidA: return "InvalidA";
    case ErrorCode::TorsionPoint: return "TorsionPoint";
    case ErrorCode::NotOnBoundedComponent: return "NotOnBoundedComponent";
    case ErrorCode::EvenM: return "EvenM";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::FactorizationIncomplete: return "FactorizationIncomplete";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace edslab
