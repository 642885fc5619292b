#pragma once

// Reference computations used only by the tests. Each one avoids the library
// code path it checks: dense matrices are built from the index formula,
// inverses come from Gauss-Jordan in long double, Chebyshev values from the
// plain recurrence.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline Matrix circulant(const std::vector<double>& a) {
  const std::size_t n = a.size();
  Matrix m(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[(j + n - i) % n];
  return m;
}

inline Matrix matmul(const Matrix& x, const Matrix& y) {
  const std::size_t n = x.size();
  Matrix r(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
  return r;
}

inline std::vector<double> matvec(const Matrix& x, const std::vector<double>& v) {
  std::vector<double> r(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += x[i][j] * v[j];
  return r;
}

/// max |x y - I|
inline double identity_defect(const Matrix& x, const Matrix& y) {
  const auto p = matmul(x, y);
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) d = std::max(d, std::abs(p[i][j] - (i == j ? 1.0 : 0.0)));
  return d;
}

/// Gauss-Jordan inverse with full pivoting in long double.
inline Matrix inverse(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<long double>> a(n, std::vector<long double>(2 * n, 0.0L));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1.0L;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (a[piv][col] == 0.0L) throw std::runtime_error("oracle: singular matrix");
    std::swap(a[piv], a[col]);
    const long double p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0.0L) continue;
      const long double f = a[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  Matrix inv(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = static_cast<double>(a[i][n + j]);
  return inv;
}

/// First row of Circ(a)^{-1}.
inline std::vector<double> inverse_row(const std::vector<double>& a) { return inverse(circulant(a))[0]; }

/// Chebyshev values by the three-term recurrence only, in long double.
inline double cheb_t(long m, double x) {
  if (m < 0) m = -m;
  long double prev = 1.0L, cur = x;
  if (m == 0) return 1.0;
  for (long k = 1; k < m; ++k) {
    const long double next = 2.0L * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return static_cast<double>(cur);
}

inline double cheb_u(long m, double x) {
  if (m == -1) return 0.0;
  if (m < -1) return -cheb_u(-m - 2, x);
  long double prev = 1.0L, cur = 2.0L * x;
  if (m == 0) return 1.0;
  for (long k = 1; k < m; ++k) {
    const long double next = 2.0L * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return static_cast<double>(cur);
}

inline double max_rel_diff(const std::vector<double>& x, const std::vector<double>& y) {
  double scale = 1.0;
  for (double v : y) scale = std::max(scale, std::abs(v));
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d / scale;
}

inline double max_abs_diff(const std::vector<double>& x, const std::vector<double>& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

}  // namespace oracle
