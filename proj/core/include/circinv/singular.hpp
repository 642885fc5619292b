#pragma once

// Identities and solvers at the singular parameters of the two
// three-parameter families, and the Green function of the cycle Laplacian.

#include <cstddef>
#include <span>
#include <vector>

#include "circinv/circulant.hpp"
#include "circinv/results.hpp"

namespace circinv::closed_form {

/// Circ(q, -1, 0, ..., 0) z_tau(q), which equals (q^n - 1) e.
std::vector<double> z_identity(double q, std::size_t n);

/// Circ(2q, -1, 0, ..., 0, -1) w(q), which equals 2 (T_n(q) - 1) e.
std::vector<double> cycle_identity(double q, std::size_t n);

/// Solves Circ(1, -1, 0, ..., 0) h = v with <h, 1> = gamma.
/// Requires sum(v) = 0; otherwise IncompatibleError.
SolveReport solve_singular_q1(std::span<const double> v, double gamma,
                              double tolerance = kSingularTolerance);

/// Solves Circ(-1, -1, 0, ..., 0) h = v for even n, returning
/// particular + alpha z(-1). Requires <v, z(-1)> = 0.
/// Every solution has -2 <h, 1> = <v, 1>.
SolveReport solve_singular_qm1(std::span<const double> v, double alpha = 0.0,
                               double tolerance = kSingularTolerance);

/// Solves L h = v for the cycle Laplacian L = Circ(2, -1, 0, ..., 0, -1)
/// with <h, 1> = gamma. Requires sum(v) = 0.
SolveReport solve_singular_cycle(std::span<const double> v, double gamma,
                                 double tolerance = kSingularTolerance);

/// First row of the cycle-Laplacian Green function:
/// g_d = (n^2 - 1 - 6 d (n - d)) / (12 n), d = 0..n-1.
CirculantVector laplacian_green_row(std::size_t n);

/// The full Green function G, with L G = I - J/n and G 1 = 0.
DenseMatrix laplacian_green(std::size_t n, std::size_t cap = kDefaultDenseCap);

/// Residual max-norm of Circ(a) x - v.
double residual(const CirculantVector& a, std::span<const double> x, std::span<const double> v);

}  // namespace circinv::closed_form
