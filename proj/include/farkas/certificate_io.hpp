#ifndef FARKAS_CERTIFICATE_IO_HPP
#define FARKAS_CERTIFICATE_IO_HPP

#include <optional>
#include <string>

#include "farkas/alternatives.hpp"

namespace farkas {

// Flat, order-stable JSON rendering of a certificate. Reals are printed with
// 17 significant digits so a parse reproduces every double bit-exact; the
// document is deterministic for a given build and instance (no timing
// fields).
struct CertificateDocument {
  std::string status;  // "feasible" | "infeasible"
  std::size_t m = 0, n = 0;
  double rho = 1.0;
  bool normality_guaranteed = false;

  std::optional<Vector> x_normal;  // feasible payload
  std::optional<Vector> u_star;
  std::optional<Vector> w1;
  std::optional<double> w2;

  std::optional<Vector> u_cert;  // infeasible payload
  std::optional<Vector> x_star;
  std::optional<Vector> z;

  std::optional<double> z_residual;
  std::optional<double> w_identity_residual;

  std::string route;  // route whose certificate is carried
  std::size_t iterations = 0;
  double objective = 0.0;
  double grad_norm = 0.0;
  bool converged = false;

  static CertificateDocument from_result(const FeasibilityProblem& problem,
                                         const DecideResult& result);
  Certificate to_certificate() const;

  std::string to_json() const;
  static CertificateDocument parse_json(const std::string& text);
};

}  // namespace farkas

#endif
