#include "farkas/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "farkas/gauss_jordan.hpp"
#include "farkas/kernels.hpp"
#include "farkas/least_squares.hpp"

namespace farkas::oracle {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

DenseMatrix columns(const DenseMatrix& A, const std::vector<std::size_t>& idx) {
  DenseMatrix S(A.rows, idx.size());
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) S(i, k) = A(i, idx[k]);
  return S;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// norm-then-lexicographic order, ties within 1e-12 relative
bool better_candidate(const Vector& cand, double cand_sq, const Vector& best, double best_sq) {
  const double slack = 1e-12 * std::max(1.0, best_sq);
  if (cand_sq < best_sq - slack) return true;
  if (cand_sq > best_sq + slack) return false;
  return std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end());
}

}  // namespace

OracleVerdict enumerate_feasibility(const FeasibilityProblem& problem) {
  const std::size_t m = problem.m(), n = problem.n();
  if (n > max_cols || m > n)
    raise(ErrorCode::BudgetExceeded,
          "oracle: instance outside enumeration budget (n <= 14, m <= n required)");

  const std::size_t rank = gauss_jordan(problem.A).rank;
  if (rank > 0 && binomial(n, rank) > max_basis_subsets)
    raise(ErrorCode::BudgetExceeded, "oracle: too many basis subsets");

  const double res_tol = 1e-7 * std::max(1.0, kernels::norm2(problem.b));
  auto residual = [&](const DenseMatrix& S, const Vector& xs) {
    Vector r = kernels::matvec(S, xs);
    for (std::size_t i = 0; i < m; ++i) r[i] -= problem.b[i];
    return kernels::norm2(r);
  };
  auto nonneg = [](const Vector& v) {
    double floor = -1e-9 * std::max(1.0, max_abs(v));
    for (double t : v)
      if (t < floor) return false;
    return true;
  };

  OracleVerdict verdict;
  if (rank > 0) {
    std::vector<std::size_t> comb(rank);
    for (std::size_t i = 0; i < rank; ++i) comb[i] = i;
    do {
      DenseMatrix S = columns(problem.A, comb);
      if (gauss_jordan(S).rank != rank) continue;  // not a basis
      Vector xs = least_squares_apply(S, problem.b);
      if (residual(S, xs) > res_tol || !nonneg(xs)) continue;
      Vector x(n, 0.0);
      for (std::size_t k = 0; k < rank; ++k) x[comb[k]] = xs[k];
      verdict.basic_feasible_points.push_back(std::move(x));
    } while (next_combination(comb, n));
  }
  verdict.feasible = !verdict.basic_feasible_points.empty();
  if (!verdict.feasible) return verdict;

  // Minimum-norm point over all zero-support patterns: on the support of the
  // optimum the minimum-norm restricted solution coincides with it.
  Vector best;
  double best_sq = 0.0;
  bool have_best = false;
  const std::size_t patterns = std::size_t{1} << n;
  std::vector<std::size_t> sup;
  for (std::size_t mask = 1; mask < patterns; ++mask) {
    sup.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (std::size_t{1} << j)) sup.push_back(j);
    DenseMatrix S = columns(problem.A, sup);
    Vector xs = least_squares_apply(S, problem.b);
    if (residual(S, xs) > res_tol || !nonneg(xs)) continue;
    Vector x(n, 0.0);
    for (std::size_t k = 0; k < sup.size(); ++k) x[sup[k]] = xs[k];
    double sq = kernels::sq_norm(x);
    if (!have_best || better_candidate(x, sq, best, best_sq)) {
      best = std::move(x);
      best_sq = sq;
      have_best = true;
    }
  }
  if (have_best) verdict.min_norm_point = std::move(best);
  return verdict;
}

std::optional<Vector> min_norm_farkas_witness(const FeasibilityProblem& problem) {
  const std::size_t m = problem.m(), n = problem.n();
  if (m > 8 || n > max_cols)
    raise(ErrorCode::BudgetExceeded,
          "oracle: witness enumeration budget requires m <= 8 and n <= 14");

  const double eq_tol = 1e-7 * std::max(1.0, problem.rho);
  const double scaleA = std::max(1.0, max_abs(problem.A));

  Vector best;
  double best_sq = 0.0;
  bool have_best = false;

  const std::size_t patterns = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < patterns; ++mask) {
    std::size_t active = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (std::size_t{1} << j)) ++active;

    // Active system: (A^T u)_j = 0 for j in the subset, plus b^T u = rho.
    DenseMatrix C(active + 1, m);
    std::size_t r = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      for (std::size_t i = 0; i < m; ++i) C(r, i) = problem.A(i, j);
      ++r;
    }
    for (std::size_t i = 0; i < m; ++i) C(active, i) = problem.b[i];
    Vector d(active + 1, 0.0);
    d[active] = problem.rho;

    Vector u = least_squares_apply(C, d);
    Vector cu = kernels::matvec(C, u);
    double worst_eq = 0.0;
    for (std::size_t i = 0; i < cu.size(); ++i)
      worst_eq = std::max(worst_eq, std::fabs(cu[i] - d[i]));
    if (worst_eq > eq_tol) continue;

    Vector atu = kernels::matvec_transpose(problem.A, u);
    double ineq_tol = 1e-8 * std::max(1.0, scaleA * max_abs(u));
    bool ok = true;
    for (double t : atu)
      if (t > ineq_tol) {
        ok = false;
        break;
      }
    if (!ok) continue;

    double sq = kernels::sq_norm(u);
    if (!have_best || better_candidate(u, sq, best, best_sq)) {
      best = std::move(u);
      best_sq = sq;
      have_best = true;
    }
  }
  if (!have_best) return std::nullopt;
  return best;
}

OracleVerdict full_verdict(const FeasibilityProblem& problem) {
  OracleVerdict v = enumerate_feasibility(problem);
  if (problem.m() <= 8) v.min_norm_farkas_witness = min_norm_farkas_witness(problem);
  return v;
}

}  // namespace farkas::oracle
