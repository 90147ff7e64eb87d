#ifndef FARKAS_ORACLE_HPP
#define FARKAS_ORACLE_HPP

#include <optional>
#include <vector>

#include "farkas/alternatives.hpp"
#include "farkas/matrix.hpp"

namespace farkas::oracle {

// Exhaustive ground truth for desk-size instances. Grounded in the zero-cost
// linear program over the primal system and its dual: the dual is always
// consistent (u = 0), so every instance is either primal-feasible or admits
// an unbounded dual ray, which is exactly the Farkas dichotomy the solvers
// realize numerically.
struct OracleVerdict {
  bool feasible = false;
  std::optional<Vector> min_norm_point;
  std::vector<Vector> basic_feasible_points;
  std::optional<Vector> min_norm_farkas_witness;
};

// Budget guard: C(n, rank) basis subsets and 2^n support patterns.
inline constexpr std::size_t max_basis_subsets = 4000;
inline constexpr std::size_t max_cols = 14;

// Enumerates all column bases for the feasibility verdict and, when feasible,
// all zero-support patterns for the minimum-norm point (ties broken
// lexicographically). BudgetExceeded outside n <= 14, m <= n.
OracleVerdict enumerate_feasibility(const FeasibilityProblem& problem);

// Minimum-norm u with A^T u <= 0, b^T u = rho, by enumerating active subsets
// of the inequality constraints; empty exactly when the instance is feasible.
// Requires m <= 8.
std::optional<Vector> min_norm_farkas_witness(const FeasibilityProblem& problem);

// Both of the above in one verdict.
OracleVerdict full_verdict(const FeasibilityProblem& problem);

}  // namespace farkas::oracle

#endif
