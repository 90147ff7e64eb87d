#ifndef FARKAS_REDUCTION_HPP
#define FARKAS_REDUCTION_HPP

#include <optional>

#include "farkas/alternatives.hpp"
#include "farkas/matrix.hpp"
#include "farkas/null_space.hpp"
#include "farkas/solvers.hpp"

namespace farkas {

// Recast of the primal system in null-space coordinates: with x_bar a
// particular solution of A x = b and the rows of K spanning {x : Ax = 0},
// the general solution is x = x_bar - K^T y and nonnegativity becomes
// K^T y <= x_bar over y in R^nu.
struct ReducedSystems {
  FeasibilityProblem problem;
  NullSpaceBasis basis;
  Vector x_bar;  // minimum-norm particular solution A^+ b
  std::size_t nu = 0;
  double rho = 1.0;
};

// Requires full row rank (RankDeficient otherwise, carrying the detected
// rank). x_bar is chosen as the minimum-norm solution so the construction is
// deterministic.
ReducedSystems build_reduction(const FeasibilityProblem& problem);

// x = x_bar - K^T y; maps the reduced feasible set onto the original one.
Vector map_y_to_x(const ReducedSystems& red, const Vector& y);

// y = (K^T)^+ (x_bar - x); inverse of map_y_to_x on the solution set of
// A x = b. NotInSolutionSet when x fails A x = b.
Vector map_x_to_y(const ReducedSystems& red, const Vector& x, double tol = 1e-7);

// u = -(A^T)^+ v for v in the range of A^T; NotInRange when the round trip
// -A^T u fails to reproduce v.
Vector map_v_to_u(const FeasibilityProblem& problem, const Vector& v, double tol = 1e-7);

// v = -A^T u.
Vector map_u_to_v(const FeasibilityProblem& problem, const Vector& u);

// Consistency verdicts for the four systems and the transfer edges between
// them: the primal pair must match, the alternative pair must match, and the
// two sides must disagree. DiagramViolation names the broken edge.
struct DiagramReport {
  bool primal_consistent = false;               // A x = b, x >= 0
  bool reduced_primal_consistent = false;       // K^T y <= x_bar
  bool alternative_consistent = false;          // A^T u <= 0, b^T u = rho
  bool reduced_alternative_consistent = false;  // K v = 0, -x_bar^T v = rho, v >= 0
  std::optional<Vector> x_witness;
  std::optional<Vector> y_witness;
  std::optional<Vector> u_witness;
  std::optional<Vector> v_witness;
  std::size_t nu = 0;
  double null_product_residual = 0.0;  // max |A K^T|
};

DiagramReport check_diagram(const FeasibilityProblem& problem, const SolverConfig& cfg);

}  // namespace farkas

#endif
