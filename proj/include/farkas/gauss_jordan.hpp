#ifndef FARKAS_GAUSS_JORDAN_HPP
#define FARKAS_GAUSS_JORDAN_HPP

#include <vector>

#include "farkas/matrix.hpp"

namespace farkas {

// Fully reduced Gauss-Jordan form with the bookkeeping needed to rebuild a
// null-space basis: unit pivots on the leading diagonal of the permuted
// matrix, zeros above and below, rank-deficient rows exactly zero.
struct EliminationResult {
  DenseMatrix reduced;        // columns in permuted order
  std::vector<std::size_t> pivot_columns;  // original indices, elimination order
  std::size_t rank = 0;
  // permuted position k holds original column column_permutation[k]
  std::vector<std::size_t> column_permutation;
  // accumulated row operations: row_transform * M * P == reduced
  DenseMatrix row_transform;
};

// pivot_tol is relative: entries with |v| <= pivot_tol * max|M| are treated
// as zero. Pivots are chosen as the largest absolute value in the remaining
// submatrix; the column exchange that brings the pivot into leading position
// is recorded in column_permutation.
EliminationResult gauss_jordan(const DenseMatrix& M, double pivot_tol);

// Rank-revealing default: max(rows, cols) * machine epsilon.
double default_pivot_tol(const DenseMatrix& M);
EliminationResult gauss_jordan(const DenseMatrix& M);

}  // namespace farkas

#endif
