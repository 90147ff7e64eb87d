#include "farkas/random_instances.hpp"

#include <cmath>

#include "farkas/gauss_jordan.hpp"
#include "farkas/kernels.hpp"

namespace farkas {

double Rng::normal() {
  double u1 = uniform01();
  double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

namespace {

DenseMatrix random_matrix(Rng& rng, std::size_t m, std::size_t n) {
  DenseMatrix A(m, n);
  for (double& v : A.a) v = rng.normal();
  return A;
}

FeasibilityProblem make_feasible(Rng& rng, std::size_t m, std::size_t n, double rho) {
  DenseMatrix A = random_matrix(rng, m, n);
  Vector x0(n);
  for (std::size_t j = 0; j < n; ++j) {
    // ~1/4 of the components sit on the bound
    double zero_draw = rng.uniform01();
    x0[j] = zero_draw < 0.25 ? 0.0 : std::fabs(rng.normal());
  }
  // guarantee ||b|| != 0
  bool all_zero = true;
  for (double v : x0)
    if (v != 0.0) all_zero = false;
  if (all_zero) x0[rng.index(n)] = 1.0 + rng.uniform01();
  Vector b = kernels::matvec(A, x0);
  if (kernels::norm2(b) == 0.0) b[rng.index(m)] = 1.0;  // degenerate draw, keep it legal
  return FeasibilityProblem(std::move(A), std::move(b), rho);
}

FeasibilityProblem make_infeasible(Rng& rng, std::size_t m, std::size_t n, double rho) {
  // Embed a witness: pick a unit direction u, force every column of A at
  // least `margin` into the open half-space u^T a < 0, and give b a strictly
  // positive component along u.
  Vector u(m);
  double nu = 0.0;
  while (nu < 0.1) {
    for (double& v : u) v = rng.normal();
    nu = kernels::norm2(u);
  }
  for (double& v : u) v /= nu;

  DenseMatrix A(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col(m);
    for (double& v : col) v = rng.normal();
    double proj = kernels::dot(col, u);
    double margin = rng.uniform(0.2, 1.2);
    for (std::size_t i = 0; i < m; ++i) A(i, j) = col[i] - (proj + margin) * u[i];
  }
  Vector b(m);
  for (double& v : b) v = rng.normal();
  double projb = kernels::dot(b, u);
  double lift = rng.uniform(0.5, 1.5);
  for (std::size_t i = 0; i < m; ++i) b[i] += (lift - projb) * u[i];
  return FeasibilityProblem(std::move(A), std::move(b), rho);
}

}  // namespace

FeasibilityProblem random_instance(Rng& rng, std::size_t m, std::size_t n, bool feasible,
                                   double rho) {
  if (m == 0 || n == 0 || m > n)
    raise(ErrorCode::InvalidArgument, "random_instance: need 1 <= m <= n");
  for (int attempt = 0; attempt < 64; ++attempt) {
    FeasibilityProblem p =
        feasible ? make_feasible(rng, m, n, rho) : make_infeasible(rng, m, n, rho);
    if (gauss_jordan(p.A).rank == m) return p;
  }
  raise(ErrorCode::InvalidArgument, "random_instance: could not draw a full-row-rank instance");
}

}  // namespace farkas
