#include "circinv/singular.hpp"

#include <algorithm>
#include <cmath>

#include "circinv/chebyshev.hpp"
#include "circinv/error.hpp"

namespace circinv::closed_form {

namespace {

double l1(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

double plain_sum(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

void require_compatible(double inner, std::span<const double> v, double tolerance, const char* what) {
  if (std::abs(inner) > tolerance * std::max(1.0, l1(v)))
    throw IncompatibleError(std::string("right-hand side is not orthogonal to ") + what +
                            " (inner product " + std::to_string(inner) + ")");
}

CirculantVector shift_row(double diag, std::size_t n, bool symmetric) {
  std::vector<double> a(n, 0.0);
  a[0] = diag;
  a[1] = -1.0;
  if (symmetric) a[n - 1] = -1.0;
  return CirculantVector(std::move(a));
}

}  // namespace

std::vector<double> z_identity(double q, std::size_t n) {
  if (n < 2) throw DomainError("identity needs n >= 2");
  const auto k = chebyshev::kernel_vectors(q, n);
  const TauPermutation tau(n);
  const auto z_tau = tau.apply(k.z);
  return circinv::apply(shift_row(q, n, false), z_tau);
}

std::vector<double> cycle_identity(double q, std::size_t n) {
  if (n < 3) throw DomainError("identity needs n >= 3");
  const auto k = chebyshev::kernel_vectors(q, n);
  return circinv::apply(shift_row(2.0 * q, n, true), k.w);
}

double residual(const CirculantVector& a, std::span<const double> x, std::span<const double> v) {
  if (x.size() != a.size() || v.size() != a.size())
    throw DimensionError("residual: vector lengths do not match the circulant order");
  const auto ax = circinv::apply(a, x);
  double r = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) r = std::max(r, std::abs(ax[i] - v[i]));
  return r;
}

SolveReport solve_singular_q1(std::span<const double> v, double gamma, double tolerance) {
  const std::size_t n = v.size();
  if (n < 2) throw DomainError("solve_singular_q1 needs n >= 2");
  require_compatible(plain_sum(v), v, tolerance, "the all-ones vector");

  // h_j = (gamma - sum_i i v_i)/n + sum_{i >= j} v_i, 1-based
  double weighted = 0.0;
  for (std::size_t i = 0; i < n; ++i) weighted += static_cast<double>(i + 1) * v[i];
  const double base = (gamma - weighted) / static_cast<double>(n);
  std::vector<double> h(n);
  double tail = 0.0;
  for (std::size_t j = n; j-- > 0;) {
    tail += v[j];
    h[j] = base + tail;
  }

  SolveReport report;
  report.residual = residual(shift_row(1.0, n, false), h, v);
  report.constraint = ConstraintCheck{gamma, plain_sum(h)};
  report.solution = std::move(h);
  return report;
}

SolveReport solve_singular_qm1(std::span<const double> v, double alpha, double tolerance) {
  const std::size_t n = v.size();
  if (n < 2 || n % 2 != 0) throw DomainError("solve_singular_qm1 needs even n");

  // z(-1)_j = (-1)^{n-j} = (-1)^j for even n
  auto z = [](std::size_t j) { return j % 2 == 0 ? 1.0 : -1.0; };
  double inner = 0.0;
  for (std::size_t j = 1; j <= n; ++j) inner += z(j) * v[j - 1];
  require_compatible(inner, v, tolerance, "z(-1)");

  // h_j = (-1)^{j+1} sum_{i >= j} (-1)^i v_i + alpha z_j
  std::vector<double> h(n);
  double tail = 0.0;
  for (std::size_t j = n; j >= 1; --j) {
    tail += z(j) * v[j - 1];
    h[j - 1] = -z(j) * tail + alpha * z(j);
  }

  SolveReport report;
  report.residual = residual(shift_row(-1.0, n, false), h, v);
  report.constraint = ConstraintCheck{-0.5 * plain_sum(v), plain_sum(h)};
  report.alpha = alpha;
  report.solution = std::move(h);
  return report;
}

SolveReport solve_singular_cycle(std::span<const double> v, double gamma, double tolerance) {
  const std::size_t n = v.size();
  if (n < 3) throw DomainError("solve_singular_cycle needs n >= 3");
  require_compatible(plain_sum(v), v, tolerance, "the all-ones vector");

  // h_j = gamma/n - 1/(2n) sum_i d (n - d) v_i, d = |j - i|, expanded as
  // n sum_i |j - i| v_i - sum_i (j - i)^2 v_i and accumulated with prefix sums.
  const double nn = static_cast<double>(n);
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ii = static_cast<double>(i);
    s0 += v[i];
    s1 += ii * v[i];
    s2 += ii * ii * v[i];
  }
  std::vector<double> h(n);
  double below0 = 0.0, below1 = 0.0;  // sums over i < j
  for (std::size_t j = 0; j < n; ++j) {
    const double jj = static_cast<double>(j);
    const double above0 = s0 - below0 - v[j];
    const double above1 = s1 - below1 - jj * v[j];
    const double abs_moment = (jj * below0 - below1) + (above1 - jj * above0);
    const double sq_moment = jj * jj * s0 - 2.0 * jj * s1 + s2;
    h[j] = gamma / nn - (nn * abs_moment - sq_moment) / (2.0 * nn);
    below0 += v[j];
    below1 += jj * v[j];
  }

  SolveReport report;
  report.residual = residual(shift_row(2.0, n, true), h, v);
  report.constraint = ConstraintCheck{gamma, plain_sum(h)};
  report.solution = std::move(h);
  return report;
}

CirculantVector laplacian_green_row(std::size_t n) {
  if (n < 3) throw DomainError("laplacian_green_row needs n >= 3");
  const double nn = static_cast<double>(n);
  std::vector<double> g(n);
  for (std::size_t d = 0; d < n; ++d) {
    const double dd = static_cast<double>(d);
    g[d] = (nn * nn - 1.0 - 6.0 * dd * (nn - dd)) / (12.0 * nn);
  }
  return CirculantVector(std::move(g));
}

DenseMatrix laplacian_green(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapError(n, cap);
  return materialize(laplacian_green_row(n), cap);
}

}  // namespace circinv::closed_form
