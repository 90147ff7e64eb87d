#ifndef FARKAS_LEAST_SQUARES_HPP
#define FARKAS_LEAST_SQUARES_HPP

#include "farkas/matrix.hpp"

namespace farkas {

// Minimum-norm least-squares solution M^+ rhs through a complete orthogonal
// decomposition: column-pivoted Householder QR, then a right-sided reflector
// sweep that folds the trailing block away when rank < cols. No normal
// equations anywhere.
Vector least_squares_apply(const DenseMatrix& M, const Vector& rhs);

}  // namespace farkas

#endif
