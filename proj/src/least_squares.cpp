#include "farkas/least_squares.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "farkas/kernels.hpp"

namespace farkas {

namespace {

struct Reflector {
  std::vector<double> v;  // H = I - beta v v^T
  double beta = 0.0;
};

Reflector make_reflector(std::vector<double> x) {
  Reflector h;
  double sq = kernels::serial::dot(x.data(), x.data(), x.size());
  double sigma = std::sqrt(sq);
  if (sigma == 0.0) {
    h.v = std::move(x);
    h.beta = 0.0;
    return h;
  }
  x[0] += std::copysign(sigma, x[0]);
  double vsq = kernels::serial::dot(x.data(), x.data(), x.size());
  h.v = std::move(x);
  h.beta = 2.0 / vsq;
  return h;
}

void apply_to_span(const Reflector& h, double* y, std::size_t n) {
  if (h.beta == 0.0) return;
  double w = h.beta * kernels::serial::dot(h.v.data(), y, n);
  kernels::serial::axpy(-w, h.v.data(), y, n);
}

}  // namespace

Vector least_squares_apply(const DenseMatrix& M, const Vector& rhs) {
  if (rhs.size() != M.rows)
    raise(ErrorCode::DimensionMismatch, "least_squares_apply: rhs length does not match rows");
  ensure_finite(M, "least_squares_apply");
  ensure_finite(rhs, "least_squares_apply");

  const std::size_t m = M.rows, n = M.cols;
  if (m == 0 || n == 0) return Vector(n, 0.0);

  DenseMatrix R = M;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<Reflector> q;

  auto tail_norm = [&](std::size_t k, std::size_t j) {
    double s = 0.0;
    for (std::size_t i = k; i < m; ++i) s += R(i, j) * R(i, j);
    return std::sqrt(s);
  };

  double scale = 0.0;
  for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, tail_norm(0, j));
  const double thr =
      static_cast<double>(std::max(m, n)) * std::numeric_limits<double>::epsilon() * scale;

  std::size_t rank = 0;
  const std::size_t steps = std::min(m, n);
  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t jmax = k;
    double best = -1.0;
    for (std::size_t j = k; j < n; ++j) {
      double nj = tail_norm(k, j);
      if (nj > best) {
        best = nj;
        jmax = j;
      }
    }
    if (best <= thr) break;

    if (jmax != k) {
      for (std::size_t i = 0; i < m; ++i) std::swap(R(i, k), R(i, jmax));
      std::swap(perm[k], perm[jmax]);
    }

    std::vector<double> col(m - k);
    for (std::size_t i = k; i < m; ++i) col[i - k] = R(i, k);
    Reflector h = make_reflector(std::move(col));
    kernels::apply_reflector_cols(R, h.v.data(), h.v.size(), h.beta, k, k);
    for (std::size_t i = k + 1; i < m; ++i) R(i, k) = 0.0;
    q.push_back(std::move(h));
    ++rank;
  }

  if (rank == 0) return Vector(n, 0.0);

  // c = leading part of Q^T rhs
  Vector qt = rhs;
  for (std::size_t k = 0; k < rank; ++k) apply_to_span(q[k], qt.data() + k, m - k);

  const std::size_t nu = n - rank;
  std::vector<Reflector> z(rank);
  if (nu > 0) {
    // Fold the trailing block into the leading triangle from the right.
    for (std::size_t kk = rank; kk-- > 0;) {
      std::vector<double> row(1 + nu);
      row[0] = R(kk, kk);
      for (std::size_t t = 0; t < nu; ++t) row[1 + t] = R(kk, rank + t);
      Reflector h = make_reflector(std::move(row));
      for (std::size_t i = 0; i <= kk; ++i) {
        if (h.beta == 0.0) break;
        double w = h.v[0] * R(i, kk);
        for (std::size_t t = 0; t < nu; ++t) w += h.v[1 + t] * R(i, rank + t);
        w *= h.beta;
        R(i, kk) -= w * h.v[0];
        for (std::size_t t = 0; t < nu; ++t) R(i, rank + t) -= w * h.v[1 + t];
      }
      z[kk] = std::move(h);
    }
  }

  // Back substitution on the triangular core.
  Vector w(rank);
  for (std::size_t i = rank; i-- > 0;) {
    double s = qt[i];
    for (std::size_t j = i + 1; j < rank; ++j) s -= R(i, j) * w[j];
    w[i] = s / R(i, i);
  }

  Vector zp(n, 0.0);
  std::copy(w.begin(), w.end(), zp.begin());
  if (nu > 0) {
    std::vector<double> span(1 + nu);
    for (std::size_t k = 0; k < rank; ++k) {
      span[0] = zp[k];
      for (std::size_t t = 0; t < nu; ++t) span[1 + t] = zp[rank + t];
      apply_to_span(z[k], span.data(), span.size());
      zp[k] = span[0];
      for (std::size_t t = 0; t < nu; ++t) zp[rank + t] = span[1 + t];
    }
  }

  Vector x(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) x[perm[i]] = zp[i];
  return x;
}

}  // namespace farkas
