#include "farkas/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "farkas/kernels.hpp"
#include "farkas/least_squares.hpp"
#include "farkas/log.hpp"

namespace farkas {

void SolverConfig::validate() const {
  if (!(grad_tol > 0.0)) raise(ErrorCode::InvalidArgument, "SolverConfig: grad_tol must be positive");
  if (!(feas_tol > 0.0)) raise(ErrorCode::InvalidArgument, "SolverConfig: feas_tol must be positive");
  if (max_iter < 1) raise(ErrorCode::InvalidArgument, "SolverConfig: max_iter must be at least 1");
  if (!(armijo_beta > 0.0 && armijo_beta < 1.0))
    raise(ErrorCode::InvalidArgument, "SolverConfig: armijo_beta must be in (0,1)");
  if (!(armijo_sigma > 0.0 && armijo_sigma < 1.0))
    raise(ErrorCode::InvalidArgument, "SolverConfig: armijo_sigma must be in (0,1)");
}

double primal_objective(const DenseMatrix& A, const Vector& b, const Vector& x) {
  Vector ax = kernels::matvec(A, x);
  double s = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    double r = b[i] - ax[i];
    s += r * r;
  }
  return 0.5 * s;
}

Vector primal_gradient(const DenseMatrix& A, const Vector& b, const Vector& x) {
  Vector ax = kernels::matvec(A, x);
  for (std::size_t i = 0; i < b.size(); ++i) ax[i] -= b[i];  // Ax - b
  return kernels::matvec_transpose(A, ax);
}

double dual_objective(const DenseMatrix& A, const Vector& b, double rho, const Vector& u) {
  Vector s = kernels::positive_part(kernels::matvec_transpose(A, u));
  double lin = rho - kernels::dot(b, u);
  return 0.5 * (kernels::sq_norm(s) + lin * lin);
}

Vector dual_gradient(const DenseMatrix& A, const Vector& b, double rho, const Vector& u) {
  Vector sp = kernels::positive_part(kernels::matvec_transpose(A, u));
  Vector g = kernels::matvec(A, sp);
  double lin = rho - kernels::dot(b, u);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] -= lin * b[i];
  return g;
}

double reduced_objective(const DenseMatrix& K, const Vector& x_bar, const Vector& y) {
  Vector s = kernels::matvec_transpose(K, y);
  for (std::size_t j = 0; j < s.size(); ++j) s[j] -= x_bar[j];
  return 0.5 * kernels::sq_norm(kernels::positive_part(s));
}

Vector reduced_gradient(const DenseMatrix& K, const Vector& x_bar, const Vector& y) {
  Vector s = kernels::matvec_transpose(K, y);
  for (std::size_t j = 0; j < s.size(); ++j) s[j] -= x_bar[j];
  return kernels::matvec(K, kernels::positive_part(s));
}

namespace {

// lambda_max(A^T A), a dozen power iterations; only used to seed step sizes.
double estimate_sq_spectral_norm(const DenseMatrix& A) {
  const std::size_t m = A.rows, n = A.cols;
  if (m == 0 || n == 0) return 0.0;
  Vector v(n), av(m), atav(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = 1.0 + 0.01 * static_cast<double>(j);
  double nv = kernels::norm2(v);
  for (std::size_t j = 0; j < n; ++j) v[j] /= nv;
  double lam = 0.0;
  for (int it = 0; it < 12; ++it) {
    kernels::matvec(A, v.data(), av.data());
    kernels::matvec_transpose(A, av.data(), atav.data());
    lam = kernels::norm2(atav);
    if (lam == 0.0) return 0.0;
    for (std::size_t j = 0; j < n; ++j) v[j] = atav[j] / lam;
  }
  return lam;
}

// In-place Cholesky solve; false when a pivot collapses (near-singular H).
bool cholesky_solve(DenseMatrix H, Vector rhs, Vector& out) {
  const std::size_t n = H.rows;
  double dmax = 0.0;
  for (std::size_t i = 0; i < n; ++i) dmax = std::max(dmax, H(i, i));
  const double floor = dmax * 1e-14;
  for (std::size_t k = 0; k < n; ++k) {
    double piv = H(k, k);
    for (std::size_t j = 0; j < k; ++j) piv -= H(k, j) * H(k, j);
    if (!(piv > floor)) return false;
    piv = std::sqrt(piv);
    H(k, k) = piv;
    for (std::size_t i = k + 1; i < n; ++i) {
      double s = H(i, k);
      for (std::size_t j = 0; j < k; ++j) s -= H(i, j) * H(k, j);
      H(i, k) = s / piv;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    double s = rhs[i];
    for (std::size_t j = 0; j < i; ++j) s -= H(i, j) * rhs[j];
    rhs[i] = s / H(i, i);
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= H(j, i) * rhs[j];
    rhs[i] = s / H(i, i);
  }
  out = std::move(rhs);
  return true;
}

}  // namespace

std::pair<Vector, SolverReport> solve_primal_residual(const DenseMatrix& A, const Vector& b,
                                                      const SolverConfig& cfg) {
  return solve_primal_residual(A, b, cfg, Vector(A.cols, 0.0));
}

std::pair<Vector, SolverReport> solve_primal_residual(const DenseMatrix& A, const Vector& b,
                                                      const SolverConfig& cfg, const Vector& x0) {
  cfg.validate();
  const std::size_t m = A.rows, n = A.cols;
  if (b.size() != m) raise(ErrorCode::DimensionMismatch, "solve_primal_residual: b length");
  if (x0.size() != n) raise(ErrorCode::DimensionMismatch, "solve_primal_residual: x0 length");
  if (kernels::norm2(b) == 0.0)
    raise(ErrorCode::ZeroRhs, "solve_primal_residual: right-hand side must be nonzero");

  Vector x = kernels::positive_part(x0);
  Vector r(m), g(n), g_new(n), xt(n);

  auto eval_f = [&](const Vector& xx) {
    kernels::matvec(A, xx.data(), r.data());
    for (std::size_t i = 0; i < m; ++i) r[i] = b[i] - r[i];
    return 0.5 * kernels::sq_norm(r);
  };
  auto grad_from_residual = [&](Vector& out) {
    kernels::matvec_transpose(A, r.data(), out.data());
    for (std::size_t j = 0; j < n; ++j) out[j] = -out[j];
  };
  auto proj_grad_norm = [&]() {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double pj = x[j] - std::max(x[j] - g[j], 0.0);
      s += pj * pj;
    }
    return std::sqrt(s);
  };

  double f = eval_f(x);
  grad_from_residual(g);

  const double L = estimate_sq_spectral_norm(A);
  const double t_default = L > 0.0 ? 1.0 / L : 1.0;
  double t_next = t_default;

  SolverReport rep;
  double pg = proj_grad_norm();
  bool converged = false;
  std::size_t it = 0;
  for (; it < cfg.max_iter; ++it) {
    if (pg <= cfg.grad_tol) {
      converged = true;
      break;
    }
    double t = t_next;
    bool accepted = false;
    double ft = f;
    for (int ls = 0; ls < 80; ++ls) {
      for (std::size_t j = 0; j < n; ++j) xt[j] = std::max(x[j] - t * g[j], 0.0);
      double gd = 0.0;
      for (std::size_t j = 0; j < n; ++j) gd += g[j] * (xt[j] - x[j]);
      ft = eval_f(xt);
      if (ft <= f + cfg.armijo_sigma * gd) {
        accepted = true;
        break;
      }
      t *= cfg.armijo_beta;
    }
    if (!accepted) {
      f = eval_f(x);  // restore residual state at x
      break;          // no decrease available at the numerical floor
    }
    grad_from_residual(g_new);
    double ss = 0.0, sy = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double sj = xt[j] - x[j];
      ss += sj * sj;
      sy += sj * (g_new[j] - g[j]);
    }
    t_next = (sy > 1e-300) ? std::clamp(ss / sy, 1e-16, 1e16) : t_default;
    if (ft > f) rep.monotone = false;
    std::swap(x, xt);
    std::swap(g, g_new);
    f = ft;
    pg = proj_grad_norm();
  }
  rep.iterations = it;

  // Refit the free components by least squares; keep the result only if the
  // objective does not grow and the stationarity measure improves.
  {
    std::vector<std::size_t> free_idx;
    for (std::size_t j = 0; j < n; ++j)
      if (x[j] > 0.0) free_idx.push_back(j);
    if (!free_idx.empty()) {
      DenseMatrix Af(m, free_idx.size());
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < free_idx.size(); ++k) Af(i, k) = A(i, free_idx[k]);
      Vector xf = least_squares_apply(Af, b);
      bool nonneg = true;
      for (double v : xf)
        if (v < 0.0) {
          nonneg = false;
          break;
        }
      if (nonneg) {
        Vector xp(n, 0.0);
        for (std::size_t k = 0; k < free_idx.size(); ++k) xp[free_idx[k]] = xf[k];
        Vector x_keep = x;
        double f_keep = f, pg_keep = pg;
        double fp = eval_f(xp);
        x = xp;
        grad_from_residual(g);
        double pgp = proj_grad_norm();
        if (fp <= f_keep && pgp <= std::max(pg_keep, cfg.grad_tol)) {
          f = fp;
          pg = pgp;
        } else {
          x = std::move(x_keep);
          f = eval_f(x);
          grad_from_residual(g);
          pg = pg_keep;
        }
      }
    }
  }

  rep.objective = f;
  rep.grad_norm = pg;
  rep.converged = converged || pg <= cfg.grad_tol;
  for (std::size_t j = 0; j < n; ++j)
    if (x[j] == 0.0) rep.active_set.push_back(j);
  log::trace("primal solve: it=%zu f=%.3e pg=%.3e conv=%d", rep.iterations, rep.objective,
             rep.grad_norm, static_cast<int>(rep.converged));
  return {std::move(x), std::move(rep)};
}

namespace {

// Shared engine for the clipped-residual objectives
//   F(q) = 1/2 ||(G^T q + c)_+||^2 + 1/2 (d^T q - e)^2,
// convex and piecewise quadratic. Newton steps use the generalized Hessian
// G D G^T + d d^T with D the 0/1 diagonal of strictly positive components;
// components at exactly zero stay inactive.
std::pair<Vector, SolverReport> clipped_residual_newton(const DenseMatrix& G, const Vector* c,
                                                        const Vector* d, double e,
                                                        const SolverConfig& cfg, Vector q) {
  const std::size_t qdim = G.rows, p = G.cols;
  Vector s(p), sp(p), s_t(p), sp_t(p), grad(qdim), dir(qdim), qt(qdim), rhs(qdim);

  auto eval = [&](const Vector& qq, Vector& s_out, Vector& sp_out, double& lin_out) {
    kernels::matvec_transpose(G, qq.data(), s_out.data());
    if (c != nullptr)
      for (std::size_t j = 0; j < p; ++j) s_out[j] += (*c)[j];
    kernels::positive_part(s_out.data(), sp_out.data(), p);
    lin_out = d != nullptr ? kernels::dot(*d, qq) - e : 0.0;
    return 0.5 * (kernels::sq_norm(sp_out) + lin_out * lin_out);
  };
  auto eval_grad = [&](const Vector& sp_in, double lin) {
    kernels::matvec(G, sp_in.data(), grad.data());
    if (d != nullptr)
      for (std::size_t i = 0; i < qdim; ++i) grad[i] += lin * (*d)[i];
  };

  double fro2 = 0.0;  // upper bound on the Hessian spectral norm
  for (double v : G.a) fro2 += v * v;
  if (d != nullptr) fro2 += kernels::sq_norm(*d);
  const double t_grad = fro2 > 0.0 ? std::min(1.0, 1.0 / fro2) : 1.0;

  double lin = 0.0;
  double F = eval(q, s, sp, lin);
  eval_grad(sp, lin);
  double gnorm = kernels::norm2(grad);

  SolverReport rep;
  bool converged = false;
  std::size_t it = 0;
  for (; it < cfg.max_iter; ++it) {
    if (gnorm <= cfg.grad_tol) {
      converged = true;
      break;
    }

    DenseMatrix H(qdim, qdim);
    for (std::size_t j = 0; j < p; ++j) {
      if (s[j] <= 0.0) continue;
      for (std::size_t a = 0; a < qdim; ++a) {
        const double gaj = G(a, j);
        if (gaj == 0.0) continue;
        for (std::size_t bb = a; bb < qdim; ++bb) H(a, bb) += gaj * G(bb, j);
      }
    }
    if (d != nullptr)
      for (std::size_t a = 0; a < qdim; ++a)
        for (std::size_t bb = a; bb < qdim; ++bb) H(a, bb) += (*d)[a] * (*d)[bb];
    for (std::size_t a = 0; a < qdim; ++a)
      for (std::size_t bb = 0; bb < a; ++bb) H(a, bb) = H(bb, a);

    double diag_scale = 1.0;
    for (std::size_t i = 0; i < qdim; ++i) diag_scale = std::max(diag_scale, H(i, i));
    for (std::size_t i = 0; i < qdim; ++i) rhs[i] = -grad[i];

    bool have_dir = false;
    double delta = 0.0;
    for (int attempt = 0; attempt < 8 && !have_dir; ++attempt) {
      DenseMatrix Hs = H;
      if (delta > 0.0)
        for (std::size_t i = 0; i < qdim; ++i) Hs(i, i) += delta;
      have_dir = cholesky_solve(std::move(Hs), rhs, dir);
      if (!have_dir) delta = delta == 0.0 ? 1e-10 * diag_scale : delta * 100.0;
    }

    auto try_direction = [&](const Vector& dd, double gd, double t0) {
      double t = t0;
      for (int ls = 0; ls < 80; ++ls) {
        for (std::size_t i = 0; i < qdim; ++i) qt[i] = q[i] + t * dd[i];
        double lin_t = 0.0;
        double Ft = eval(qt, s_t, sp_t, lin_t);
        if (Ft <= F + cfg.armijo_sigma * t * gd) {
          if (Ft > F) rep.monotone = false;
          std::swap(q, qt);
          std::swap(s, s_t);
          std::swap(sp, sp_t);
          lin = lin_t;
          F = Ft;
          return true;
        }
        t *= cfg.armijo_beta;
      }
      return false;
    };

    bool stepped = false;
    if (have_dir) {
      double gd = kernels::dot(grad, dir);
      if (gd < 0.0) stepped = try_direction(dir, gd, 1.0);
    }
    if (!stepped) {
      for (std::size_t i = 0; i < qdim; ++i) dir[i] = -grad[i];
      stepped = try_direction(dir, -gnorm * gnorm, t_grad);
    }
    if (!stepped) break;  // numerical floor

    eval_grad(sp, lin);
    gnorm = kernels::norm2(grad);
  }

  rep.iterations = it;
  rep.objective = F;
  rep.grad_norm = gnorm;
  rep.converged = converged || gnorm <= cfg.grad_tol;
  for (std::size_t j = 0; j < p; ++j)
    if (s[j] > 0.0) rep.active_set.push_back(j);
  return {std::move(q), std::move(rep)};
}

}  // namespace

std::pair<Vector, SolverReport> solve_dual_residual(const DenseMatrix& A, const Vector& b,
                                                    double rho, const SolverConfig& cfg) {
  return solve_dual_residual(A, b, rho, cfg, Vector(A.rows, 0.0));
}

std::pair<Vector, SolverReport> solve_dual_residual(const DenseMatrix& A, const Vector& b,
                                                    double rho, const SolverConfig& cfg,
                                                    const Vector& u0) {
  cfg.validate();
  if (b.size() != A.rows) raise(ErrorCode::DimensionMismatch, "solve_dual_residual: b length");
  if (u0.size() != A.rows) raise(ErrorCode::DimensionMismatch, "solve_dual_residual: u0 length");
  if (!(rho > 0.0)) raise(ErrorCode::InvalidRho, "solve_dual_residual: rho must be positive");
  if (kernels::norm2(b) == 0.0)
    raise(ErrorCode::ZeroRhs, "solve_dual_residual: right-hand side must be nonzero");
  auto out = clipped_residual_newton(A, nullptr, &b, rho, cfg, u0);
  log::trace("dual solve: it=%zu F=%.3e g=%.3e conv=%d", out.second.iterations,
             out.second.objective, out.second.grad_norm, static_cast<int>(out.second.converged));
  return out;
}

std::pair<Vector, SolverReport> solve_reduced_residual(const DenseMatrix& K, const Vector& x_bar,
                                                       const SolverConfig& cfg) {
  return solve_reduced_residual(K, x_bar, cfg, Vector(K.rows, 0.0));
}

std::pair<Vector, SolverReport> solve_reduced_residual(const DenseMatrix& K, const Vector& x_bar,
                                                       const SolverConfig& cfg, const Vector& y0) {
  cfg.validate();
  if (x_bar.size() != K.cols)
    raise(ErrorCode::DimensionMismatch, "solve_reduced_residual: x_bar length");
  if (y0.size() != K.rows) raise(ErrorCode::DimensionMismatch, "solve_reduced_residual: y0 length");
  Vector c(x_bar.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = -x_bar[j];
  auto out = clipped_residual_newton(K, &c, nullptr, 0.0, cfg, y0);
  log::trace("reduced solve: it=%zu F=%.3e g=%.3e conv=%d", out.second.iterations,
             out.second.objective, out.second.grad_norm, static_cast<int>(out.second.converged));
  return out;
}

}  // namespace farkas
