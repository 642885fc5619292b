#pragma once

// Reference routes for circulant inversion: the DFT eigen-decomposition,
// dense Gaussian elimination, and the explicit n = 2, 3 formulas.
// These are O(n^2) or worse and exist to cross-check the closed forms.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "circinv/circulant.hpp"
#include "circinv/results.hpp"

namespace circinv::spectral {

/// Eigenvalues lambda_k = P_a(omega^k), omega = exp(2 pi i / n).
struct SpectralData {
  std::size_t n = 0;
  std::complex<double> omega;
  std::vector<std::complex<double>> eigenvalues;
  std::vector<double> coefficients;
};

/// Direct O(n^2) DFT with a fixed summation order per k.
SpectralData spectrum(const CirculantVector& a, std::size_t cap = kDefaultDenseCap);

/// min_k |lambda_k| / max(1, max_k |lambda_k|); singular at or below `tolerance`.
InvertCertificate spectral_certificate(const SpectralData& s,
                                       double tolerance = kSingularTolerance);
InvertCertificate spectral_certificate(const CirculantVector& a,
                                       double tolerance = kSingularTolerance,
                                       std::size_t cap = kDefaultDenseCap);

struct Determinant {
  double value = 0.0;
  bool overflow = false;  ///< value is +-infinity because the product left double range
};

/// Product of the eigenvalues, formed from the real eigenvalues and the
/// squared moduli of conjugate pairs so the result is real by construction.
Determinant determinant(const CirculantVector& a, std::size_t cap = kDefaultDenseCap);

/// Inverse row from the inverse DFT of 1/lambda_k. Throws SingularError
/// naming the offending k.
InverseResult dft_inverse(const CirculantVector& a, double tolerance = kSingularTolerance,
                          std::size_t cap = kDefaultDenseCap);

/// Partial-pivot LU factorization of a dense matrix.
class LuDecomposition {
 public:
  /// Pivots below `pivot_tolerance * max|A|` raise SingularError.
  explicit LuDecomposition(DenseMatrix a, double pivot_tolerance = 1e-12);

  std::vector<double> solve(std::span<const double> rhs) const;
  double determinant() const;

 private:
  DenseMatrix lu_;
  std::vector<std::size_t> perm_;
  int sign_ = 1;
};

/// Solves materialize(a) x = rhs by partial-pivot elimination.
std::vector<double> dense_solve(const CirculantVector& a, std::span<const double> rhs,
                                std::size_t cap = kDefaultDenseCap);

/// det materialize(a) from the LU factors.
double dense_determinant(const CirculantVector& a, std::size_t cap = kDefaultDenseCap);

/// First row of the inverse computed as Circ(a)^{-1} = Circ(g)^T with
/// g = dense_solve(a, e).
CirculantVector dense_inverse_row(const CirculantVector& a, std::size_t cap = kDefaultDenseCap);

/// Explicit inverse for n = 2 and n = 3.
InverseResult closed_form_small(const CirculantVector& a, double tolerance = kSingularTolerance);

/// Explicit determinant polynomial for n = 2 and n = 3.
double small_determinant(const CirculantVector& a);

}  // namespace circinv::spectral
