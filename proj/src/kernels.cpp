#include "farkas/kernels.hpp"

#include <cmath>
#include <cstdint>

namespace farkas::kernels {

namespace serial {

void matvec(const DenseMatrix& A, const double* x, double* y) {
  const std::size_t m = A.rows, n = A.cols;
  for (std::size_t i = 0; i < m; ++i) {
    const double* r = A.row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += r[j] * x[j];
    y[i] = s;
  }
}

void matvec_transpose(const DenseMatrix& A, const double* u, double* y) {
  const std::size_t m = A.rows, n = A.cols;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += A.a[i * n + j] * u[i];
    y[j] = s;
  }
}

void positive_part(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void eliminate_rows(DenseMatrix& M, std::size_t pivot_row, std::size_t lead) {
  const std::size_t m = M.rows, n = M.cols;
  const double* p = M.row(pivot_row);
  for (std::size_t i = 0; i < m; ++i) {
    if (i == pivot_row) continue;
    double* r = M.row(i);
    const double f = r[lead];
    if (f == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) r[j] -= f * p[j];
    r[lead] = 0.0;  // kill rounding residue in the pivot column
  }
}

void apply_reflector_cols(DenseMatrix& M, const double* v, std::size_t vlen,
                          double beta, std::size_t row0, std::size_t col0) {
  const std::size_t n = M.cols;
  for (std::size_t j = col0; j < n; ++j) {
    double w = 0.0;
    for (std::size_t k = 0; k < vlen; ++k) w += v[k] * M(row0 + k, j);
    w *= beta;
    for (std::size_t k = 0; k < vlen; ++k) M(row0 + k, j) -= w * v[k];
  }
}

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace serial

namespace parallel {

void matvec(const DenseMatrix& A, const double* x, double* y) {
  const std::int64_t m = static_cast<std::int64_t>(A.rows);
  const std::size_t n = A.cols;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < m; ++i) {
    const double* r = A.row(static_cast<std::size_t>(i));
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += r[j] * x[j];
    y[i] = s;
  }
}

void matvec_transpose(const DenseMatrix& A, const double* u, double* y) {
  const std::size_t m = A.rows;
  const std::int64_t n = static_cast<std::int64_t>(A.cols);
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += A.a[i * A.cols + j] * u[i];
    y[j] = s;
  }
}

void positive_part(const double* x, double* y, std::size_t n) {
  const std::int64_t nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < nn; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void eliminate_rows(DenseMatrix& M, std::size_t pivot_row, std::size_t lead) {
  const std::int64_t m = static_cast<std::int64_t>(M.rows);
  const std::size_t n = M.cols;
  const double* p = M.row(pivot_row);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < m; ++i) {
    if (static_cast<std::size_t>(i) == pivot_row) continue;
    double* r = M.row(static_cast<std::size_t>(i));
    const double f = r[lead];
    if (f == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) r[j] -= f * p[j];
    r[lead] = 0.0;
  }
}

void apply_reflector_cols(DenseMatrix& M, const double* v, std::size_t vlen,
                          double beta, std::size_t row0, std::size_t col0) {
  const std::int64_t n = static_cast<std::int64_t>(M.cols);
#pragma omp parallel for schedule(static)
  for (std::int64_t j = static_cast<std::int64_t>(col0); j < n; ++j) {
    double w = 0.0;
    for (std::size_t k = 0; k < vlen; ++k) w += v[k] * M(row0 + k, static_cast<std::size_t>(j));
    w *= beta;
    for (std::size_t k = 0; k < vlen; ++k) M(row0 + k, static_cast<std::size_t>(j)) -= w * v[k];
  }
}

}  // namespace parallel

void matvec(const DenseMatrix& A, const double* x, double* y) {
  if (A.rows * A.cols >= parallel_grain)
    parallel::matvec(A, x, y);
  else
    serial::matvec(A, x, y);
}

void matvec_transpose(const DenseMatrix& A, const double* u, double* y) {
  if (A.rows * A.cols >= parallel_grain)
    parallel::matvec_transpose(A, u, y);
  else
    serial::matvec_transpose(A, u, y);
}

void positive_part(const double* x, double* y, std::size_t n) {
  if (n >= parallel_grain)
    parallel::positive_part(x, y, n);
  else
    serial::positive_part(x, y, n);
}

void eliminate_rows(DenseMatrix& M, std::size_t pivot_row, std::size_t lead) {
  if (M.rows * M.cols >= parallel_grain)
    parallel::eliminate_rows(M, pivot_row, lead);
  else
    serial::eliminate_rows(M, pivot_row, lead);
}

void apply_reflector_cols(DenseMatrix& M, const double* v, std::size_t vlen,
                          double beta, std::size_t row0, std::size_t col0) {
  if ((M.cols - col0) * vlen >= parallel_grain)
    parallel::apply_reflector_cols(M, v, vlen, beta, row0, col0);
  else
    serial::apply_reflector_cols(M, v, vlen, beta, row0, col0);
}

Vector matvec(const DenseMatrix& A, const Vector& x) {
  if (x.size() != A.cols) raise(ErrorCode::DimensionMismatch, "matvec: x does not match cols");
  Vector y(A.rows);
  matvec(A, x.data(), y.data());
  return y;
}

Vector matvec_transpose(const DenseMatrix& A, const Vector& u) {
  if (u.size() != A.rows) raise(ErrorCode::DimensionMismatch, "matvec_transpose: u does not match rows");
  Vector y(A.cols);
  matvec_transpose(A, u.data(), y.data());
  return y;
}

Vector positive_part(const Vector& x) {
  Vector y(x.size());
  positive_part(x.data(), y.data(), x.size());
  return y;
}

double dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) raise(ErrorCode::DimensionMismatch, "dot: length mismatch");
  return serial::dot(x.data(), y.data(), x.size());
}

double sq_norm(const Vector& x) { return serial::dot(x.data(), x.data(), x.size()); }

double norm2(const Vector& x) { return std::sqrt(sq_norm(x)); }

}  // namespace farkas::kernels
