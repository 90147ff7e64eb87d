#include "farkas/errors.hpp"

namespace farkas {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonFiniteInput: return "E_NON_FINITE";
    case ErrorCode::DimensionMismatch: return "E_DIMENSION_MISMATCH";
    case ErrorCode::RankDeficient: return "E_RANK_DEFICIENT";
    case ErrorCode::ZeroRhs: return "E_ZERO_RHS";
    case ErrorCode::InvalidRho: return "E_INVALID_RHO";
    case ErrorCode::ZeroResidual: return "E_ZERO_RESIDUAL";
    case ErrorCode::NotInSolutionSet: return "E_NOT_IN_SOLUTION_SET";
    case ErrorCode::NotInRange: return "E_NOT_IN_RANGE";
    case ErrorCode::InconsistentRoutes: return "E_INCONSISTENT_ROUTES";
    case ErrorCode::CertificateInvalid: return "E_CERTIFICATE_INVALID";
    case ErrorCode::BudgetExceeded: return "E_BUDGET_EXCEEDED";
    case ErrorCode::DiagramViolation: return "E_DIAGRAM_VIOLATION";
    case ErrorCode::ParseError: return "E_PARSE";
    case ErrorCode::InvalidArgument: return "E_INVALID_ARGUMENT";
  }
  return "E_UNKNOWN";
}

}  // namespace farkas
