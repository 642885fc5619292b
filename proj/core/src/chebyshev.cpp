#include "circinv/chebyshev.hpp"

#include <cmath>
#include <numbers>

#include "circinv/error.hpp"

namespace circinv::chebyshev {

namespace {

constexpr double kSinGuard = 1e-8;

double parity_sign(std::int64_t m) { return (m % 2 == 0) ? 1.0 : -1.0; }

double t_recurrence(std::int64_t m, double x) {
  if (m == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (std::int64_t k = 1; k < m; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double u_recurrence(std::int64_t m, double x) {
  if (m == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (std::int64_t k = 1; k < m; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// H <- r*H1 + s*H0 with overflow detection.
std::int64_t checked_step(std::int64_t r, std::int64_t h1, std::int64_t s, std::int64_t h0) {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(r, h1, &a) || __builtin_mul_overflow(s, h0, &b) ||
      __builtin_add_overflow(a, b, &out)) {
    throw OverflowError("Horadam number exceeds 64-bit range");
  }
  return out;
}

}  // namespace

double t(std::int64_t m, double x) {
  if (m < 0) m = -m;
  if (x == 1.0) return 1.0;
  if (x == -1.0) return parity_sign(m);
  if (std::abs(x) < 1.0) return std::cos(static_cast<double>(m) * std::acos(x));
  return t_recurrence(m, x);
}

double u(std::int64_t m, double x) {
  if (m == -1) return 0.0;
  if (m < -1) return -u(-m - 2, x);
  if (std::abs(x) <= 1.0) {
    const double theta = std::acos(x);
    const double s = std::sin(theta);
    if (std::abs(s) < kSinGuard) {
      const double lim = static_cast<double>(m + 1);
      return x > 0.0 ? lim : parity_sign(m) * lim;
    }
    return std::sin(static_cast<double>(m + 1) * theta) / s;
  }
  return u_recurrence(m, x);
}

double evaluate(Kind kind, std::int64_t m, double x) {
  return kind == Kind::FirstKind ? t(m, x) : u(m, x);
}

std::int64_t horadam(std::int64_t m, HoradamParams p) {
  if (p.s == 0) throw DomainError("Horadam parameters need s != 0");
  if (m < 0) throw DomainError("Horadam index must be non-negative");
  if (m == 0) return 0;
  std::int64_t h0 = 0;
  std::int64_t h1 = 1;
  for (std::int64_t k = 1; k < m; ++k) {
    const std::int64_t h2 = checked_step(p.r, h1, p.s, h0);
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

namespace {

// U_m(x) in long double for m >= -1; the Horadam scale factor amplifies
// any error in the argument by (sqrt|s|)^{m-1}.
long double u_extended(std::int64_t m, long double x) {
  if (m == -1) return 0.0L;
  if (std::fabs(x) <= 1.0L) {
    const long double theta = std::acos(x);
    const long double st = std::sin(theta);
    if (std::fabs(st) >= 1e-8L) return std::sin(static_cast<long double>(m + 1) * theta) / st;
  }
  long double prev = 1.0L, cur = 2.0L * x;
  if (m == 0) return prev;
  for (std::int64_t k = 1; k < m; ++k) {
    const long double next = 2.0L * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double horadam_via_chebyshev(std::int64_t m, HoradamParams p) {
  if (m < 0) throw DomainError("Horadam index must be non-negative");
  const double r = static_cast<double>(p.r);
  const double s = static_cast<double>(p.s);
  if (p.s < 0) {
    const long double root = std::sqrt(static_cast<long double>(-p.s));
    const long double scale = std::pow(root, static_cast<long double>(m - 1));
    return static_cast<double>(scale * u_extended(m - 1, static_cast<long double>(p.r) / (2.0L * root)));
  }
  if (p.s > 0) {
    if (m % 2 != 0)
      throw DomainError("Chebyshev form of H_m(r,s) with s > 0 needs an even index");
    const std::int64_t k = m / 2;
    return r * std::pow(s, static_cast<double>(k - 1)) * u(k - 1, 1.0 + r * r / (2.0 * s));
  }
  throw DomainError("Horadam parameters need s != 0");
}

KernelVectors kernel_vectors(double q, std::size_t n) {
  if (n == 0) throw DimensionError("kernel vectors need n >= 1");
  KernelVectors kv;
  kv.q = q;
  kv.n = n;

  // cheb[k + 1] = U_k(q) for k = -1..n-1
  std::vector<double> cheb(n + 1);
  cheb[0] = 0.0;
  cheb[1] = 1.0;
  for (std::size_t i = 1; i < n; ++i) cheb[i + 1] = 2.0 * q * cheb[i] - cheb[i - 1];

  kv.u.resize(n);
  kv.v.resize(n);
  kv.w.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    kv.u[i] = cheb[i];
    kv.v[i] = cheb[i + 1];
    kv.w[i] = cheb[i] + cheb[n - i];
  }

  kv.z.resize(n);
  kv.z[n - 1] = 1.0;
  for (std::size_t i = n - 1; i-- > 0;) kv.z[i] = q * kv.z[i + 1];
  return kv;
}

double z_sum(double q, std::size_t n) {
  const double nn = static_cast<double>(n);
  if (q == 1.0) return nn;
  if (q == -1.0) return n % 2 == 0 ? 0.0 : 1.0;
  if (q > 0.0) return std::expm1(nn * std::log1p(q - 1.0)) / (q - 1.0);
  return (std::pow(q, nn) - 1.0) / (q - 1.0);
}

double w_sum(double q, std::size_t n) {
  const double nn = static_cast<double>(n);
  if (q == 1.0) return nn * nn;
  if (q > 1.0) {
    const double qm1 = q - 1.0;
    const double eta = std::log1p(qm1 + std::sqrt(qm1 * (q + 1.0)));
    const double ratio = std::sinh(0.5 * nn * eta) / std::sinh(0.5 * eta);
    return ratio * ratio;
  }
  if (q > -1.0) {
    const double theta = 2.0 * std::asin(std::sqrt(0.5 * (1.0 - q)));
    const double ratio = std::sin(0.5 * nn * theta) / std::sin(0.5 * theta);
    return ratio * ratio;
  }
  return (t(static_cast<std::int64_t>(n), q) - 1.0) / (q - 1.0);
}

std::vector<double> w_vanishing_points(std::size_t n) {
  if (n < 3) throw DomainError("vanishing points of w(q) need n >= 3");
  // j = n/2 (q = -1, n even) is excluded: there T_n(q) = 1 but w(-1) != 0.
  const std::size_t jmax = (n - 1) / 2;
  std::vector<double> out;
  out.reserve(jmax);
  for (std::size_t j = 1; j <= jmax; ++j)
    out.push_back(std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n)));
  return out;
}

}  // namespace circinv::chebyshev
