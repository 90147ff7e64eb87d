#include "farkas/gauss_jordan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "farkas/kernels.hpp"

namespace farkas {

double default_pivot_tol(const DenseMatrix& M) {
  return static_cast<double>(std::max(M.rows, M.cols)) *
         std::numeric_limits<double>::epsilon();
}

EliminationResult gauss_jordan(const DenseMatrix& M) {
  return gauss_jordan(M, default_pivot_tol(M));
}

EliminationResult gauss_jordan(const DenseMatrix& M, double pivot_tol) {
  if (M.empty()) raise(ErrorCode::InvalidArgument, "gauss_jordan: empty matrix");
  if (!(pivot_tol > 0.0)) raise(ErrorCode::InvalidArgument, "gauss_jordan: pivot_tol must be positive");
  ensure_finite(M, "gauss_jordan");

  const std::size_t m = M.rows, n = M.cols;
  const double threshold = pivot_tol * max_abs(M);

  EliminationResult res;
  res.reduced = M;
  res.row_transform = DenseMatrix::identity(m);
  res.column_permutation.resize(n);
  std::iota(res.column_permutation.begin(), res.column_permutation.end(), std::size_t{0});

  DenseMatrix& R = res.reduced;
  DenseMatrix& T = res.row_transform;

  const std::size_t steps = std::min(m, n);
  std::vector<double> factors(m);
  for (std::size_t r = 0; r < steps; ++r) {
    // Largest |entry| of the remaining submatrix; ties resolved toward the
    // lowest original column so already-reduced inputs come back unchanged.
    std::size_t pi = r, pj = r;
    double best = 0.0;
    for (std::size_t k = r; k < n; ++k)
      for (std::size_t i = r; i < m; ++i) {
        const double v = std::fabs(R(i, k));
        if (v > best) {
          best = v;
          pi = i;
          pj = k;
        }
      }
    if (best <= threshold) break;

    if (pj != r) {
      for (std::size_t i = 0; i < m; ++i) std::swap(R(i, r), R(i, pj));
      std::swap(res.column_permutation[r], res.column_permutation[pj]);
    }
    if (pi != r) {
      for (std::size_t j = 0; j < n; ++j) std::swap(R(r, j), R(pi, j));
      for (std::size_t j = 0; j < m; ++j) std::swap(T(r, j), T(pi, j));
    }

    const double inv = 1.0 / R(r, r);
    for (std::size_t j = 0; j < n; ++j) R(r, j) *= inv;
    for (std::size_t j = 0; j < m; ++j) T(r, j) *= inv;
    R(r, r) = 1.0;

    for (std::size_t i = 0; i < m; ++i) factors[i] = (i == r) ? 0.0 : R(i, r);
    kernels::eliminate_rows(R, r, r);
    for (std::size_t i = 0; i < m; ++i) {
      if (factors[i] == 0.0) continue;
      kernels::serial::axpy(-factors[i], T.row(r), T.row(i), m);
    }

    res.pivot_columns.push_back(res.column_permutation[r]);
  }
  res.rank = res.pivot_columns.size();

  // Sub-threshold residue counts as zero; snap it so dependent rows vanish.
  for (double& v : R.a)
    if (std::fabs(v) <= threshold) v = 0.0;

  return res;
}

}  // namespace farkas
