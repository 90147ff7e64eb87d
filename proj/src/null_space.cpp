#include "farkas/null_space.hpp"

#include <string>

#include "farkas/gauss_jordan.hpp"

namespace farkas {

double null_space_tolerance(const DenseMatrix& A) {
  return 1e-10 * max_abs(A) * static_cast<double>(A.cols);
}

NullSpaceBasis null_space_basis(const DenseMatrix& A) {
  const std::size_t m = A.rows, n = A.cols;
  EliminationResult elim = gauss_jordan(A);
  if (elim.rank < m)
    raise(ErrorCode::RankDeficient,
          "rank " + std::to_string(elim.rank) + " < m=" + std::to_string(m));

  NullSpaceBasis basis;
  basis.nullity = n - m;
  basis.source_permutation = elim.column_permutation;
  basis.K = DenseMatrix(basis.nullity, n);
  if (basis.nullity == 0) return basis;

  // reduced == [I_m | N] in permuted columns; basis rows are [-N^T | I_nu].
  const DenseMatrix& R = elim.reduced;
  for (std::size_t i = 0; i < basis.nullity; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      basis.K(i, elim.column_permutation[j]) = -R(j, m + i);
    basis.K(i, elim.column_permutation[m + i]) = 1.0;
  }

  double worst = 0.0;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i < basis.nullity; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += A(r, j) * basis.K(i, j);
      worst = std::max(worst, std::fabs(s));
    }
  basis.max_product_residual = worst;
  return basis;
}

}  // namespace farkas
