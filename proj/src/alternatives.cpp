#include "farkas/alternatives.hpp"

#include <cmath>
#include <utility>

#include "farkas/kernels.hpp"
#include "farkas/log.hpp"

namespace farkas {

FeasibilityProblem::FeasibilityProblem(DenseMatrix A_, Vector b_, double rho_)
    : A(std::move(A_)), b(std::move(b_)), rho(rho_) {
  ensure_finite(A, "FeasibilityProblem");
  ensure_finite(b, "FeasibilityProblem");
  if (b.size() != A.rows)
    raise(ErrorCode::DimensionMismatch, "FeasibilityProblem: b length does not match rows of A");
  if (A.rows == 0 || A.cols == 0)
    raise(ErrorCode::InvalidArgument, "FeasibilityProblem: A must be nonempty");
  if (kernels::norm2(b) == 0.0)
    raise(ErrorCode::ZeroRhs, "FeasibilityProblem: right-hand side must be nonzero");
  if (!(rho > 0.0) || !std::isfinite(rho))
    raise(ErrorCode::InvalidRho, "FeasibilityProblem: rho must be positive and finite");
}

const char* route_name(Route r) {
  switch (r) {
    case Route::Primal: return "primal";
    case Route::Dual: return "dual";
    case Route::Both: return "both";
  }
  return "?";
}

Vector normal_infeasibility_certificate(const FeasibilityProblem& problem, const Vector& x_star,
                                        double feas_tol) {
  Vector z = kernels::matvec(problem.A, x_star);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = problem.b[i] - z[i];
  const double nz2 = kernels::sq_norm(z);
  if (std::sqrt(nz2) <= feas_tol)
    raise(ErrorCode::ZeroResidual,
          "normal_infeasibility_certificate: residual vanishes, the system is feasible");
  const double scale = problem.rho / nz2;
  for (double& v : z) v *= scale;
  return z;
}

namespace {

struct PrimalOutcome {
  Vector x_star;
  Vector z;  // b - A x_star
  SolverReport report;
  bool feasible = false;
  double z_identity = 0.0;
};

struct DualOutcome {
  Vector u_star;
  Vector w1;
  double w2 = 0.0;
  SolverReport report;
  bool feasible = false;
  double w_identity = 0.0;
};

PrimalOutcome run_primal(const FeasibilityProblem& p, const SolverConfig& cfg) {
  PrimalOutcome out;
  auto [x, rep] = solve_primal_residual(p.A, p.b, cfg);
  out.x_star = std::move(x);
  out.report = std::move(rep);
  out.z = kernels::matvec(p.A, out.x_star);
  for (std::size_t i = 0; i < out.z.size(); ++i) out.z[i] = p.b[i] - out.z[i];
  out.feasible = out.report.objective <= cfg.feas_tol * std::max(1.0, kernels::sq_norm(p.b));
  out.z_identity = std::fabs(kernels::sq_norm(out.z) - kernels::dot(p.b, out.z));
  return out;
}

DualOutcome run_dual(const FeasibilityProblem& p, const SolverConfig& cfg) {
  DualOutcome out;
  auto [u, rep] = solve_dual_residual(p.A, p.b, p.rho, cfg);
  out.u_star = std::move(u);
  out.report = std::move(rep);
  out.w1 = kernels::positive_part(kernels::matvec_transpose(p.A, out.u_star));
  out.w2 = p.rho - kernels::dot(p.b, out.u_star);
  out.feasible = out.w2 > w2_threshold_rel * p.rho;
  out.w_identity =
      std::fabs(kernels::sq_norm(out.w1) + out.w2 * out.w2 - p.rho * out.w2);
  return out;
}

FeasibleCertificate feasible_from_dual(DualOutcome& d) {
  FeasibleCertificate cert;
  cert.x.resize(d.w1.size());
  for (std::size_t j = 0; j < d.w1.size(); ++j) cert.x[j] = d.w1[j] / d.w2;
  cert.normality_guaranteed = true;
  cert.u_star = d.u_star;
  cert.w1 = d.w1;
  cert.w2 = d.w2;
  return cert;
}

InfeasibleCertificate infeasible_from_primal(const FeasibilityProblem& p, PrimalOutcome& pr,
                                             const SolverConfig& cfg) {
  InfeasibleCertificate cert;
  cert.u = normal_infeasibility_certificate(p, pr.x_star, cfg.feas_tol);
  cert.normality_guaranteed = true;
  cert.x_star = std::move(pr.x_star);
  cert.z = std::move(pr.z);
  return cert;
}

InfeasibleCertificate infeasible_from_dual(const FeasibilityProblem& p, DualOutcome& d) {
  // The minimizer already satisfies the alternative system up to roundoff;
  // rescale onto b^T u = rho exactly. w2 ~ 0 here, so b^T u ~ rho > 0.
  InfeasibleCertificate cert;
  const double btu = p.rho - d.w2;
  cert.u = (p.rho / btu) * d.u_star;
  cert.normality_guaranteed = false;
  return cert;
}

}  // namespace

DecideResult decide(const FeasibilityProblem& problem, const SolverConfig& cfg, Route route) {
  DecideResult res;
  res.route = route;

  if (route == Route::Primal) {
    PrimalOutcome pr = run_primal(problem, cfg);
    res.identities.z_identity_residual = pr.z_identity;
    res.reports.push_back(pr.report);
    if (pr.feasible) {
      FeasibleCertificate cert;
      cert.x = std::move(pr.x_star);
      cert.normality_guaranteed = false;  // the minimum-norm recovery needs the dual route
      res.certificate = std::move(cert);
    } else {
      res.certificate = infeasible_from_primal(problem, pr, cfg);
    }
    return res;
  }

  if (route == Route::Dual) {
    DualOutcome du = run_dual(problem, cfg);
    res.identities.w_identity_residual = du.w_identity;
    res.reports.push_back(du.report);
    if (du.feasible)
      res.certificate = feasible_from_dual(du);
    else
      res.certificate = infeasible_from_dual(problem, du);
    return res;
  }

  PrimalOutcome pr = run_primal(problem, cfg);
  DualOutcome du = run_dual(problem, cfg);
  res.identities.z_identity_residual = pr.z_identity;
  res.identities.w_identity_residual = du.w_identity;
  res.reports.push_back(pr.report);
  res.reports.push_back(du.report);
  if (pr.feasible != du.feasible)
    raise(ErrorCode::InconsistentRoutes,
          "decide: routes disagree (primal objective " + std::to_string(pr.report.objective) +
              ", dual w2 " + std::to_string(du.w2) +
              "); tolerances failed on this instance");
  if (du.feasible) {
    res.certificate = feasible_from_dual(du);
  } else {
    res.certificate = infeasible_from_primal(problem, pr, cfg);
  }
  return res;
}

namespace {

[[noreturn]] void invalid(const std::string& clause, double got, double bound) {
  raise(ErrorCode::CertificateInvalid,
        "certificate clause '" + clause + "' violated: residual " + std::to_string(got) +
            " exceeds " + std::to_string(bound));
}

// Serial reference kernels only: verification shares no code path with the
// solvers beyond the matrix type itself.
Vector ref_matvec(const DenseMatrix& A, const Vector& x) {
  Vector y(A.rows);
  kernels::serial::matvec(A, x.data(), y.data());
  return y;
}

Vector ref_matvec_t(const DenseMatrix& A, const Vector& u) {
  Vector y(A.cols);
  kernels::serial::matvec_transpose(A, u.data(), y.data());
  return y;
}

double ref_dot(const Vector& a, const Vector& b) {
  return kernels::serial::dot(a.data(), b.data(), a.size());
}

}  // namespace

DualIdentityReport verify_certificate(const FeasibilityProblem& problem, const Certificate& cert,
                                      double verify_tol) {
  if (!(verify_tol > 0.0)) raise(ErrorCode::InvalidArgument, "verify_certificate: tol");
  DualIdentityReport report;
  const DenseMatrix& A = problem.A;
  const Vector& b = problem.b;
  const double rho = problem.rho;

  auto check_w_identity = [&](const Vector& u) {
    Vector atu = ref_matvec_t(A, u);
    Vector w1(atu.size());
    for (std::size_t j = 0; j < atu.size(); ++j) w1[j] = std::max(atu[j], 0.0);
    double w2 = rho - ref_dot(b, u);
    double resid = std::fabs(ref_dot(w1, w1) + w2 * w2 - rho * w2);
    report.w_identity_residual = resid;
    if (resid > verify_tol * rho * rho) invalid("|w1|^2+w2^2=rho*w2", resid, verify_tol * rho * rho);
  };
  auto check_z_identity = [&](const Vector& z) {
    double resid = std::fabs(ref_dot(z, z) - ref_dot(b, z));
    report.z_identity_residual = resid;
    double bound = verify_tol * std::max(1.0, ref_dot(b, b));
    if (resid > bound) invalid("|z|^2=b^T z", resid, bound);
  };

  if (const auto* feas = std::get_if<FeasibleCertificate>(&cert)) {
    if (feas->x.size() != problem.n())
      raise(ErrorCode::DimensionMismatch, "verify_certificate: x length");
    Vector r = ref_matvec(A, feas->x);
    double worst = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) worst = std::max(worst, std::fabs(r[i] - b[i]));
    if (worst > verify_tol) invalid("Ax=b", worst, verify_tol);
    for (double v : feas->x)
      if (v < -verify_tol) invalid("x>=0", -v, verify_tol);

    if (feas->u_star) {
      if (feas->u_star->size() != problem.m())
        raise(ErrorCode::DimensionMismatch, "verify_certificate: u_star length");
      Vector atu = ref_matvec_t(A, *feas->u_star);
      double w2 = rho - ref_dot(b, *feas->u_star);
      if (feas->w2) {
        if (std::fabs(*feas->w2 - w2) > verify_tol * std::max(1.0, rho))
          invalid("w2=rho-b^T u", std::fabs(*feas->w2 - w2), verify_tol);
        if (!(*feas->w2 > 0.0)) invalid("w2>0", *feas->w2, 0.0);
      }
      if (feas->w1) {
        if (feas->w1->size() != problem.n())
          raise(ErrorCode::DimensionMismatch, "verify_certificate: w1 length");
        double dw = 0.0;
        for (std::size_t j = 0; j < atu.size(); ++j)
          dw = std::max(dw, std::fabs((*feas->w1)[j] - std::max(atu[j], 0.0)));
        if (dw > verify_tol) invalid("w1=(A^T u)_+", dw, verify_tol);
      }
      check_w_identity(*feas->u_star);
    }
    // The feasible point minimizes the primal residual, so it also witnesses
    // the z identity with z ~ 0.
    Vector z(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) z[i] = b[i] - r[i];
    check_z_identity(z);
    return report;
  }

  const auto& infeas = std::get<InfeasibleCertificate>(cert);
  if (infeas.u.size() != problem.m())
    raise(ErrorCode::DimensionMismatch, "verify_certificate: u length");
  Vector atu = ref_matvec_t(A, infeas.u);
  double worst = 0.0;
  for (double v : atu) worst = std::max(worst, v);
  if (worst > verify_tol) invalid("A^T u<=0", worst, verify_tol);
  double btu = ref_dot(b, infeas.u);
  if (std::fabs(btu - rho) > verify_tol * std::max(1.0, rho))
    invalid("b^T u=rho", std::fabs(btu - rho), verify_tol * std::max(1.0, rho));

  if (infeas.x_star) {
    if (infeas.x_star->size() != problem.n())
      raise(ErrorCode::DimensionMismatch, "verify_certificate: x_star length");
    Vector ax = ref_matvec(A, *infeas.x_star);
    Vector z(ax.size());
    for (std::size_t i = 0; i < ax.size(); ++i) z[i] = b[i] - ax[i];
    if (infeas.z) {
      if (infeas.z->size() != problem.m())
        raise(ErrorCode::DimensionMismatch, "verify_certificate: z length");
      double dz = 0.0;
      for (std::size_t i = 0; i < z.size(); ++i)
        dz = std::max(dz, std::fabs((*infeas.z)[i] - z[i]));
      if (dz > verify_tol * std::max(1.0, max_abs(b))) invalid("z=b-Ax*", dz, verify_tol);
    }
    double nz = std::sqrt(ref_dot(z, z));
    if (!(nz > verify_tol)) invalid("|z|>0", nz, verify_tol);
    check_z_identity(z);
  }
  check_w_identity(infeas.u);
  return report;
}

}  // namespace farkas
