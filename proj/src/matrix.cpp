#include "farkas/matrix.hpp"

#include <cmath>
#include <cstdlib>

namespace farkas {

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> data) {
  DenseMatrix m;
  m.rows = data.size();
  m.cols = m.rows ? data.begin()->size() : 0;
  m.a.reserve(m.rows * m.cols);
  for (const auto& r : data) {
    if (r.size() != m.cols)
      raise(ErrorCode::DimensionMismatch, "ragged initializer for DenseMatrix");
    m.a.insert(m.a.end(), r.begin(), r.end());
  }
  ensure_finite(m, "DenseMatrix::from_rows");
  return m;
}

DenseMatrix DenseMatrix::from_data(std::size_t r, std::size_t c, Vector entries) {
  if (entries.size() != r * c)
    raise(ErrorCode::DimensionMismatch, "entry count does not match rows*cols");
  DenseMatrix m;
  m.rows = r;
  m.cols = c;
  m.a = std::move(entries);
  ensure_finite(m, "DenseMatrix::from_data");
  return m;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

void ensure_finite(const DenseMatrix& m, const char* what) {
  for (double v : m.a)
    if (!std::isfinite(v))
      raise(ErrorCode::NonFiniteInput, std::string(what) + ": non-finite entry");
}

void ensure_finite(const Vector& v, const char* what) {
  for (double x : v)
    if (!std::isfinite(x))
      raise(ErrorCode::NonFiniteInput, std::string(what) + ": non-finite entry");
}

double max_abs(const DenseMatrix& m) {
  double s = 0.0;
  for (double v : m.a) s = std::max(s, std::fabs(v));
  return s;
}

double max_abs(const Vector& v) {
  double s = 0.0;
  for (double x : v) s = std::max(s, std::fabs(x));
  return s;
}

DenseMatrix transpose(const DenseMatrix& m) {
  DenseMatrix t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.rows) raise(ErrorCode::DimensionMismatch, "matmul: inner dimensions differ");
  DenseMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator-(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) raise(ErrorCode::DimensionMismatch, "vector subtraction");
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

Vector operator+(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) raise(ErrorCode::DimensionMismatch, "vector addition");
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Vector operator*(double s, const Vector& x) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = s * x[i];
  return r;
}

}  // namespace farkas
