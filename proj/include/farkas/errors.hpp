#ifndef FARKAS_ERRORS_HPP
#define FARKAS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace farkas {

enum class ErrorCode {
  NonFiniteInput,
  DimensionMismatch,
  RankDeficient,
  ZeroRhs,
  InvalidRho,
  ZeroResidual,
  NotInSolutionSet,
  NotInRange,
  InconsistentRoutes,
  CertificateInvalid,
  BudgetExceeded,
  DiagramViolation,
  ParseError,
  InvalidArgument,
};

// Stable machine-readable code, printed on the diagnostic stream by the CLI.
const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace farkas

#endif
