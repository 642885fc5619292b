#pragma once

// Chebyshev polynomials for any integer index, Horadam numbers, and the
// kernel vectors z(q), u(q), v(q), w(q) used by the closed-form inverses.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace circinv::chebyshev {

enum class Kind { FirstKind, SecondKind };

/// T_m(x). Negative indices use T_{-m} = T_m.
///
/// For |x| <= 1 the value is cos(m acos x); outside, the forward
/// three-term recurrence (which follows the dominant solution).
double t(std::int64_t m, double x);

/// U_m(x). Negative indices use U_{-m} = -U_{m-2}, so U_{-1} = 0.
///
/// For |x| <= 1 the value is sin((m+1)t)/sin(t) with t = acos x, switching
/// to the limit (+-1)^m (m+1) when |sin t| < 1e-8.
double u(std::int64_t m, double x);

double evaluate(Kind kind, std::int64_t m, double x);

struct HoradamParams {
  std::int64_t r = 1;
  std::int64_t s = 1;  ///< must be nonzero
};

/// Exact H_m(r, s) with H_0 = 0, H_1 = 1, H_{m+2} = r H_{m+1} + s H_m.
/// Throws OverflowError instead of wrapping.
std::int64_t horadam(std::int64_t m, HoradamParams p);

/// H_m(r, s) through second-kind Chebyshev values.
///
/// s < 0: (sqrt(-s))^{m-1} U_{m-1}(r / (2 sqrt(-s))), m >= 1.
/// s > 0: r s^{k-1} U_{k-1}(1 + r^2 / (2s)) for even m = 2k >= 2.
/// Throws DomainError when neither form applies.
double horadam_via_chebyshev(std::int64_t m, HoradamParams p);

/// z_j = q^{n-j}, u_j = U_{j-2}(q), v_j = U_{j-1}(q), w_j = U_{j-2}(q) + U_{n-j}(q)
/// for 1-based j; stored 0-based.
struct KernelVectors {
  double q = 0.0;
  std::size_t n = 0;
  std::vector<double> z;
  std::vector<double> u;
  std::vector<double> v;
  std::vector<double> w;
};

/// One forward Chebyshev pass plus one power pass; O(n).
KernelVectors kernel_vectors(double q, std::size_t n);

/// <z(q), 1> = (q^n - 1)/(q - 1), with the value n at q = 1.
double z_sum(double q, std::size_t n);

/// <w(q), 1> = (T_n(q) - 1)/(q - 1), with the value n^2 at q = 1.
double w_sum(double q, std::size_t n);

/// The q at which w(q) vanishes: cos(2 pi j / n), j = 1..floor((n-1)/2). Needs n >= 3.
std::vector<double> w_vanishing_points(std::size_t n);

}  // namespace circinv::chebyshev
