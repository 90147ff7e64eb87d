#ifndef FARKAS_ALTERNATIVES_HPP
#define FARKAS_ALTERNATIVES_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "farkas/matrix.hpp"
#include "farkas/solvers.hpp"

namespace farkas {

// Instance of the primal system A x = b, x >= 0, together with the positive
// constant rho that normalizes the alternative system A^T u <= 0, b^T u = rho.
struct FeasibilityProblem {
  DenseMatrix A;
  Vector b;
  double rho = 1.0;

  FeasibilityProblem(DenseMatrix A_, Vector b_, double rho_ = 1.0);
  std::size_t m() const { return A.rows; }
  std::size_t n() const { return A.cols; }
};

enum class Route { Primal, Dual, Both };

const char* route_name(Route r);

struct FeasibleCertificate {
  Vector x;  // feasible point; the minimum-norm solution when normality_guaranteed
  bool normality_guaranteed = false;
  std::optional<Vector> u_star;  // alternative-residual minimizer, when that route ran
  std::optional<Vector> w1;      // (A^T u*)_+
  std::optional<double> w2;      // rho - b^T u*
};

struct InfeasibleCertificate {
  Vector u;  // Farkas certificate: A^T u <= 0, b^T u = rho
  bool normality_guaranteed = false;
  std::optional<Vector> x_star;  // primal-residual minimizer, when that route ran
  std::optional<Vector> z;       // b - A x_star
};

using Certificate = std::variant<FeasibleCertificate, InfeasibleCertificate>;

inline bool is_feasible(const Certificate& c) {
  return std::holds_alternative<FeasibleCertificate>(c);
}

// Residuals of the two optimal-value identities ||z||^2 = b^T z and
// ||w1||^2 + w2^2 = rho w2; each present when the relevant route data exists.
struct DualIdentityReport {
  std::optional<double> z_identity_residual;
  std::optional<double> w_identity_residual;
};

struct DecideResult {
  Certificate certificate;
  DualIdentityReport identities;
  std::vector<SolverReport> reports;  // primal-route report first when both ran
  Route route = Route::Both;
};

inline constexpr double default_verify_tol = 1e-7;
// w2 above this fraction of rho classifies the instance as feasible on the
// dual route; exact arithmetic would give w2 > 0 iff feasible.
inline constexpr double w2_threshold_rel = 1e-7;

// Classifies the instance by the Farkas alternative and recovers the matching
// certificate. Route::Both cross-checks the two classifications and raises
// InconsistentRoutes when they disagree.
DecideResult decide(const FeasibilityProblem& problem, const SolverConfig& cfg,
                    Route route = Route::Both);

// Recomputes every certificate clause from problem data alone (serial
// reference kernels, no solver state) and both identity residuals. Raises
// CertificateInvalid naming the violated clause.
DualIdentityReport verify_certificate(const FeasibilityProblem& problem, const Certificate& cert,
                                      double verify_tol = default_verify_tol);

// Minimum-norm Farkas certificate rho * z / ||z||^2 from the primal-residual
// minimizer, z = b - A x_star. ZeroResidual when the residual vanishes (the
// system is feasible and no certificate exists).
Vector normal_infeasibility_certificate(const FeasibilityProblem& problem, const Vector& x_star,
                                        double feas_tol = 1e-9);

}  // namespace farkas

#endif
