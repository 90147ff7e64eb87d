#ifndef FARKAS_SOLVERS_HPP
#define FARKAS_SOLVERS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "farkas/matrix.hpp"

namespace farkas {

struct SolverConfig {
  double grad_tol = 1e-10;   // stationarity threshold (projected/plain gradient)
  double feas_tol = 1e-9;    // relative "objective is zero" threshold
  std::size_t max_iter = 10000;
  double armijo_beta = 0.5;
  double armijo_sigma = 1e-4;

  void validate() const;
};

struct SolverReport {
  std::size_t iterations = 0;
  double objective = 0.0;
  double grad_norm = 0.0;
  bool converged = false;
  // primal: components at the zero bound; dual/reduced: components whose
  // affine value is strictly positive (clipped residual active)
  std::vector<std::size_t> active_set;
  bool monotone = true;  // objective never increased across accepted steps
};

// min over x >= 0 of 1/2 ||b - Ax||^2, projected gradient with Armijo
// backtracking on the projection arc, plus a final least-squares refit of the
// free components. Start defaults to x = 0.
std::pair<Vector, SolverReport> solve_primal_residual(const DenseMatrix& A, const Vector& b,
                                                      const SolverConfig& cfg);
std::pair<Vector, SolverReport> solve_primal_residual(const DenseMatrix& A, const Vector& b,
                                                      const SolverConfig& cfg, const Vector& x0);

// min over u of 1/2 {||(A^T u)_+||^2 + (rho - b^T u)^2}, generalized Newton
// with Levenberg regularization and an Armijo-guarded gradient fallback.
// Start defaults to u = 0.
std::pair<Vector, SolverReport> solve_dual_residual(const DenseMatrix& A, const Vector& b,
                                                    double rho, const SolverConfig& cfg);
std::pair<Vector, SolverReport> solve_dual_residual(const DenseMatrix& A, const Vector& b,
                                                    double rho, const SolverConfig& cfg,
                                                    const Vector& u0);

// min over y of 1/2 ||(K^T y - x_bar)_+||^2; zero objective exactly when
// K^T y <= x_bar is satisfiable at y. Same engine as the dual solver.
std::pair<Vector, SolverReport> solve_reduced_residual(const DenseMatrix& K, const Vector& x_bar,
                                                       const SolverConfig& cfg);
std::pair<Vector, SolverReport> solve_reduced_residual(const DenseMatrix& K, const Vector& x_bar,
                                                       const SolverConfig& cfg, const Vector& y0);

// Objectives and analytic gradients, exposed for finite-difference checks.
double primal_objective(const DenseMatrix& A, const Vector& b, const Vector& x);
Vector primal_gradient(const DenseMatrix& A, const Vector& b, const Vector& x);
double dual_objective(const DenseMatrix& A, const Vector& b, double rho, const Vector& u);
Vector dual_gradient(const DenseMatrix& A, const Vector& b, double rho, const Vector& u);
double reduced_objective(const DenseMatrix& K, const Vector& x_bar, const Vector& y);
Vector reduced_gradient(const DenseMatrix& K, const Vector& x_bar, const Vector& y);

}  // namespace farkas

#endif
