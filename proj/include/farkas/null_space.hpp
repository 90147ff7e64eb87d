#ifndef FARKAS_NULL_SPACE_HPP
#define FARKAS_NULL_SPACE_HPP

#include <vector>

#include "farkas/matrix.hpp"

namespace farkas {

// Basis of {x : Ax = 0} for a full-row-rank A, one basis vector per row of K.
// nullity == 0 is valid (K is 0 x n) and lets reduction paths short-circuit.
struct NullSpaceBasis {
  DenseMatrix K;  // nullity x n, original column order
  std::size_t nullity = 0;
  std::vector<std::size_t> source_permutation;
  double max_product_residual = 0.0;  // max |(A K^T)_ij| achieved
};

// From the reduced form [I_m | N] (in permuted columns) the basis is
// [-N^T | I_nu], mapped back through the recorded permutation. Requires
// rank(A) == rows; otherwise RankDeficient carrying the detected rank.
NullSpaceBasis null_space_basis(const DenseMatrix& A);

// Acceptance bound on max |A K^T|.
double null_space_tolerance(const DenseMatrix& A);

}  // namespace farkas

#endif
