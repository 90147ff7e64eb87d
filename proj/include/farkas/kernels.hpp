#ifndef FARKAS_KERNELS_HPP
#define FARKAS_KERNELS_HPP

#include <cstddef>

#include "farkas/matrix.hpp"

// Dense inner loops used by the solvers and the factorizations.
//
// Every kernel exists twice: kernels::serial is the reference implementation,
// kernels::parallel is the OpenMP variant. The parallel loops only ever split
// over independent output elements (rows of a matvec, columns of a reflector
// update) and never reorder a floating-point sum, so both variants produce
// bit-identical results. Tests assert exact equality; kernel_bench compares
// throughput.
//
// The unqualified entry points dispatch by problem size: below
// parallel_grain scalar operations the thread fan-out costs more than the
// loop itself.

namespace farkas::kernels {

inline constexpr std::size_t parallel_grain = 1u << 15;

namespace serial {

// y = A x
void matvec(const DenseMatrix& A, const double* x, double* y);
// y = A^T u
void matvec_transpose(const DenseMatrix& A, const double* u, double* y);
// y_i = max(x_i, 0)
void positive_part(const double* x, double* y, std::size_t n);
// rows i != pivot_row: M.row(i) -= M(i, lead) * M.row(pivot_row)
void eliminate_rows(DenseMatrix& M, std::size_t pivot_row, std::size_t lead);
// columns j in [col0, M.cols): M[row0:, j] -= beta * (v . M[row0:, j]) * v
void apply_reflector_cols(DenseMatrix& M, const double* v, std::size_t vlen,
                          double beta, std::size_t row0, std::size_t col0);

double dot(const double* x, const double* y, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);

}  // namespace serial

namespace parallel {

void matvec(const DenseMatrix& A, const double* x, double* y);
void matvec_transpose(const DenseMatrix& A, const double* u, double* y);
void positive_part(const double* x, double* y, std::size_t n);
void eliminate_rows(DenseMatrix& M, std::size_t pivot_row, std::size_t lead);
void apply_reflector_cols(DenseMatrix& M, const double* v, std::size_t vlen,
                          double beta, std::size_t row0, std::size_t col0);

}  // namespace parallel

void matvec(const DenseMatrix& A, const double* x, double* y);
void matvec_transpose(const DenseMatrix& A, const double* u, double* y);
void positive_part(const double* x, double* y, std::size_t n);
void eliminate_rows(DenseMatrix& M, std::size_t pivot_row, std::size_t lead);
void apply_reflector_cols(DenseMatrix& M, const double* v, std::size_t vlen,
                          double beta, std::size_t row0, std::size_t col0);

// Vector-level conveniences over the dispatched kernels.
Vector matvec(const DenseMatrix& A, const Vector& x);
Vector matvec_transpose(const DenseMatrix& A, const Vector& u);
Vector positive_part(const Vector& x);

double dot(const Vector& x, const Vector& y);
double norm2(const Vector& x);
double sq_norm(const Vector& x);

}  // namespace farkas::kernels

#endif
