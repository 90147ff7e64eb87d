#include "farkas/reduction.hpp"

#include <cmath>

#include "farkas/kernels.hpp"
#include "farkas/least_squares.hpp"
#include "farkas/log.hpp"

namespace farkas {

ReducedSystems build_reduction(const FeasibilityProblem& problem) {
  NullSpaceBasis basis = null_space_basis(problem.A);
  Vector x_bar = least_squares_apply(problem.A, problem.b);
  std::size_t nu = basis.nullity;
  return ReducedSystems{problem, std::move(basis), std::move(x_bar), nu, problem.rho};
}

Vector map_y_to_x(const ReducedSystems& red, const Vector& y) {
  if (y.size() != red.nu) raise(ErrorCode::DimensionMismatch, "map_y_to_x: y length");
  Vector kty = kernels::matvec_transpose(red.basis.K, y);
  Vector x(red.x_bar.size());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = red.x_bar[j] - kty[j];
  return x;
}

Vector map_x_to_y(const ReducedSystems& red, const Vector& x, double tol) {
  if (x.size() != red.problem.n()) raise(ErrorCode::DimensionMismatch, "map_x_to_y: x length");
  Vector ax = kernels::matvec(red.problem.A, x);
  double worst = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i)
    worst = std::max(worst, std::fabs(ax[i] - red.problem.b[i]));
  if (worst > tol * std::max(1.0, max_abs(red.problem.b)))
    raise(ErrorCode::NotInSolutionSet,
          "map_x_to_y: A x != b (residual " + std::to_string(worst) + ")");
  Vector diff(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) diff[j] = red.x_bar[j] - x[j];
  return least_squares_apply(transpose(red.basis.K), diff);
}

Vector map_u_to_v(const FeasibilityProblem& problem, const Vector& u) {
  if (u.size() != problem.m()) raise(ErrorCode::DimensionMismatch, "map_u_to_v: u length");
  Vector v = kernels::matvec_transpose(problem.A, u);
  for (double& t : v) t = -t;
  return v;
}

Vector map_v_to_u(const FeasibilityProblem& problem, const Vector& v, double tol) {
  if (v.size() != problem.n()) raise(ErrorCode::DimensionMismatch, "map_v_to_u: v length");
  Vector u = least_squares_apply(transpose(problem.A), v);
  for (double& t : u) t = -t;
  // Round trip doubles as the range-membership test: v must lie in im A^T.
  Vector back = map_u_to_v(problem, u);
  double worst = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) worst = std::max(worst, std::fabs(back[j] - v[j]));
  if (worst > tol * std::max(1.0, max_abs(v)))
    raise(ErrorCode::NotInRange,
          "map_v_to_u: v is not in the range of A^T (round-trip error " + std::to_string(worst) +
              ")");
  return u;
}

DiagramReport check_diagram(const FeasibilityProblem& problem, const SolverConfig& cfg) {
  ReducedSystems red = build_reduction(problem);

  DiagramReport rep;
  rep.nu = red.nu;
  rep.null_product_residual = red.basis.max_product_residual;

  DecideResult dec = decide(problem, cfg, Route::Both);
  rep.primal_consistent = is_feasible(dec.certificate);
  const SolverReport& dual_rep = dec.reports.back();
  rep.alternative_consistent = dual_rep.objective <= cfg.feas_tol * problem.rho * problem.rho;

  if (rep.primal_consistent == rep.alternative_consistent)
    raise(ErrorCode::DiagramViolation,
          "edge 'primal xor alternative' failed: both systems classified "
          "as " + std::string(rep.primal_consistent ? "consistent" : "inconsistent"));

  if (rep.primal_consistent) {
    rep.x_witness = std::get<FeasibleCertificate>(dec.certificate).x;
  } else {
    rep.u_witness = std::get<InfeasibleCertificate>(dec.certificate).u;
  }

  // Reduced primal side: with nu = 0 the system degenerates to 0 <= x_bar.
  if (red.nu == 0) {
    double floor = -cfg.feas_tol * std::max(1.0, max_abs(red.x_bar));
    bool ok = true;
    for (double v : red.x_bar)
      if (v < floor) {
        ok = false;
        break;
      }
    rep.reduced_primal_consistent = ok;
    if (ok) rep.y_witness = Vector{};
  } else {
    auto [y, yrep] = solve_reduced_residual(red.basis.K, red.x_bar, cfg);
    rep.reduced_primal_consistent =
        yrep.objective <= cfg.feas_tol * std::max(1.0, kernels::sq_norm(red.x_bar));
    if (rep.reduced_primal_consistent) rep.y_witness = std::move(y);
  }

  if (rep.primal_consistent != rep.reduced_primal_consistent)
    raise(ErrorCode::DiagramViolation, "edge 'primal <-> reduced-primal' failed");

  // Reduced alternative side: transport the witness through v = -A^T u and
  // rescale so -x_bar^T v = rho exactly.
  if (rep.alternative_consistent) {
    Vector v = map_u_to_v(problem, *rep.u_witness);
    double xv = -kernels::dot(red.x_bar, v);
    if (!(xv > 0.0))
      raise(ErrorCode::DiagramViolation,
            "edge 'alternative <-> reduced-alternative' failed: -x_bar^T v not positive");
    const double scale = problem.rho / xv;
    for (double& t : v) t *= scale;

    Vector kv = kernels::matvec(red.basis.K, v);
    double kv_worst = max_abs(kv);
    double v_floor = -1e-6 * std::max(1.0, max_abs(v));
    bool nonneg = true;
    for (double t : v)
      if (t < v_floor) {
        nonneg = false;
        break;
      }
    double kv_tol = std::max(null_space_tolerance(red.basis.K),
                             1e-9 * std::max(1.0, max_abs(v)) * static_cast<double>(problem.n()));
    if (!nonneg || kv_worst > kv_tol)
      raise(ErrorCode::DiagramViolation,
            "edge 'alternative <-> reduced-alternative' failed: transported witness invalid");
    rep.reduced_alternative_consistent = true;
    rep.v_witness = std::move(v);
  } else {
    // v = -A^T u ranges over all of ker K, so an empty alternative side
    // leaves the reduced alternative empty as well.
    rep.reduced_alternative_consistent = false;
  }

  log::info("diagram: primal=%d reduced_primal=%d alternative=%d reduced_alternative=%d nu=%zu",
            static_cast<int>(rep.primal_consistent), static_cast<int>(rep.reduced_primal_consistent),
            static_cast<int>(rep.alternative_consistent),
            static_cast<int>(rep.reduced_alternative_consistent), rep.nu);
  return rep;
}

}  // namespace farkas
