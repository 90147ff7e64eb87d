#ifndef FARKAS_MATRIX_HPP
#define FARKAS_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "farkas/errors.hpp"

namespace farkas {

using Vector = std::vector<double>;

// Dense row-major matrix. Entries admitted through from_rows/from_data are
// checked finite; matrices built up entry-by-entry are the caller's problem
// until they cross a module boundary (ensure_finite).
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;  // rows*cols, row-major

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> data);
  static DenseMatrix from_data(std::size_t r, std::size_t c, Vector entries);
  static DenseMatrix identity(std::size_t n);

  double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  double* row(std::size_t i) { return a.data() + i * cols; }
  const double* row(std::size_t i) const { return a.data() + i * cols; }

  bool empty() const { return rows == 0 || cols == 0; }
};

void ensure_finite(const DenseMatrix& m, const char* what);
void ensure_finite(const Vector& v, const char* what);

double max_abs(const DenseMatrix& m);
double max_abs(const Vector& v);

DenseMatrix transpose(const DenseMatrix& m);

// Plain O(n^3) products; fine at the sizes this library targets for
// verification and tests. Solvers go through the kernels instead.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

Vector operator-(const Vector& x, const Vector& y);
Vector operator+(const Vector& x, const Vector& y);
Vector operator*(double s, const Vector& x);

}  // namespace farkas

#endif
