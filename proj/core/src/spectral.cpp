#include "circinv/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "circinv/error.hpp"

namespace circinv::spectral {

namespace {

using cplx = std::complex<double>;

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapError(n, cap);
}

// roots[m] = omega^m, each from its own angle rather than repeated products.
std::vector<cplx> roots_of_unity(std::size_t n) {
  std::vector<cplx> roots(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    roots[m] = {std::cos(angle), std::sin(angle)};
  }
  roots[0] = {1.0, 0.0};
  return roots;
}

// Running product kept as mantissa * 2^exponent so partial products never overflow.
class ScaledProduct {
 public:
  void times(double f) {
    mantissa_ *= f;
    if (mantissa_ == 0.0 || !std::isfinite(mantissa_)) return;
    int e = 0;
    mantissa_ = std::frexp(mantissa_, &e);
    exponent_ += e;
  }

  double value() const {
    if (mantissa_ == 0.0) return 0.0;
    if (exponent_ > std::numeric_limits<int>::max() / 2) return std::copysign(HUGE_VAL, mantissa_);
    if (exponent_ < std::numeric_limits<int>::min() / 2) return std::copysign(0.0, mantissa_);
    return std::ldexp(mantissa_, static_cast<int>(exponent_));
  }

 private:
  double mantissa_ = 1.0;
  long long exponent_ = 0;
};

}  // namespace

SpectralData spectrum(const CirculantVector& a, std::size_t cap) {
  const std::size_t n = a.size();
  check_cap(n, cap);
  const auto roots = roots_of_unity(n);

  SpectralData s;
  s.n = n;
  s.omega = n > 1 ? roots[1] : cplx{1.0, 0.0};
  s.coefficients = a.values();
  s.eigenvalues.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx sum{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) sum += a[j] * roots[(k * j) % n];
    s.eigenvalues[k] = sum;
  }
  return s;
}

InvertCertificate spectral_certificate(const SpectralData& s, double tolerance) {
  double lo = HUGE_VAL;
  double hi = 0.0;
  std::size_t arg = 0;
  for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
    const double mag = std::abs(s.eigenvalues[k]);
    if (mag < lo) {
      lo = mag;
      arg = k;
    }
    hi = std::max(hi, mag);
  }
  const double margin = lo / std::max(1.0, hi);
  return InvertCertificate::from_margin(margin, "eigenvalue k=" + std::to_string(arg), tolerance);
}

InvertCertificate spectral_certificate(const CirculantVector& a, double tolerance,
                                       std::size_t cap) {
  return spectral_certificate(spectrum(a, cap), tolerance);
}

Determinant determinant(const CirculantVector& a, std::size_t cap) {
  const auto s = spectrum(a, cap);
  const std::size_t n = s.n;
  double scale = 0.0;
  for (double v : a.values()) scale += std::abs(v);
  scale = std::max(scale, 1.0);

  auto real_eigenvalue = [&](std::size_t k) {
    const cplx lam = s.eigenvalues[k];
    if (std::abs(lam.imag()) > 1e-8 * scale)
      throw Error("determinant: real eigenvalue has imaginary residue " +
                  std::to_string(lam.imag()));
    return lam.real();
  };

  ScaledProduct prod;
  prod.times(real_eigenvalue(0));
  if (n % 2 == 0) prod.times(real_eigenvalue(n / 2));
  for (std::size_t k = 1; 2 * k < n; ++k) prod.times(std::norm(s.eigenvalues[k]));

  Determinant det;
  det.value = prod.value();
  det.overflow = std::isinf(det.value);
  return det;
}

InverseResult dft_inverse(const CirculantVector& a, double tolerance, std::size_t cap) {
  const auto s = spectrum(a, cap);
  auto cert = spectral_certificate(s, tolerance);
  if (!cert.invertible)
    throw SingularError("circulant is singular: " + cert.witness + " vanishes", cert.witness);

  const std::size_t n = s.n;
  const auto roots = roots_of_unity(n);
  std::vector<cplx> recip(n);
  for (std::size_t k = 0; k < n; ++k) recip[k] = 1.0 / s.eigenvalues[k];

  std::vector<double> h(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    cplx sum{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) sum += std::conj(roots[(k * j) % n]) * recip[k];
    h[j] = sum.real() * inv_n;
  }
  return {CirculantVector(std::move(h)), "dft", std::move(cert)};
}

LuDecomposition::LuDecomposition(DenseMatrix a, double pivot_tolerance)
    : lu_(std::move(a)), perm_(lu_.order()) {
  const std::size_t n = lu_.order();
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
  const double threshold = pivot_tolerance * std::max(lu_.max_abs(), 1e-300);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu_(i, k)) > best) {
        best = std::abs(lu_(i, k));
        p = i;
      }
    }
    if (best <= threshold)
      throw SingularError("matrix is singular to working precision at pivot " + std::to_string(k),
                          "pivot " + std::to_string(k));
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
      std::swap(perm_[k], perm_[p]);
      sign_ = -sign_;
    }
    const double pivot = lu_(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = lu_(i, k) / pivot;
      lu_(i, k) = factor;
      if (factor == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= factor * lu_(k, j);
    }
  }
}

std::vector<double> LuDecomposition::solve(std::span<const double> rhs) const {
  const std::size_t n = lu_.order();
  if (rhs.size() != n) throw DimensionError("LU solve: right-hand side has the wrong length");
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[perm_[i]];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
    x[i] /= lu_(i, i);
  }
  return x;
}

double LuDecomposition::determinant() const {
  double det = sign_;
  for (std::size_t i = 0; i < lu_.order(); ++i) det *= lu_(i, i);
  return det;
}

std::vector<double> dense_solve(const CirculantVector& a, std::span<const double> rhs,
                                std::size_t cap) {
  if (rhs.size() != a.size()) throw DimensionError("dense_solve: right-hand side has the wrong length");
  return LuDecomposition(materialize(a, cap)).solve(rhs);
}

double dense_determinant(const CirculantVector& a, std::size_t cap) {
  try {
    return LuDecomposition(materialize(a, cap)).determinant();
  } catch (const SingularError&) {
    return 0.0;
  }
}

CirculantVector dense_inverse_row(const CirculantVector& a, std::size_t cap) {
  const auto e = CirculantVector::unit(a.size());
  return tau_permute(CirculantVector(dense_solve(a, e.entries(), cap)));
}

double small_determinant(const CirculantVector& a) {
  if (a.size() == 2) return a[0] * a[0] - a[1] * a[1];
  if (a.size() == 3) {
    const double a1 = a[0], a2 = a[1], a3 = a[2];
    return a1 * a1 * a1 + a2 * a2 * a2 + a3 * a3 * a3 - 3.0 * a1 * a2 * a3;
  }
  throw DomainError("explicit determinant is only available for n = 2 or 3");
}

InverseResult closed_form_small(const CirculantVector& a, double tolerance) {
  const std::size_t n = a.size();
  if (n != 2 && n != 3) throw DomainError("closed_form_small needs n = 2 or n = 3");
  const double det = small_determinant(a);
  const double scale = std::max(1.0, a.max_abs());
  const double margin = std::abs(det) / std::pow(scale, static_cast<double>(n));
  auto cert = InvertCertificate::from_margin(margin, "determinant", tolerance);
  if (!cert.invertible) throw SingularError("circulant is singular: determinant vanishes", "determinant");

  if (n == 2) {
    return {CirculantVector{a[0] / det, -a[1] / det}, "closed-form-n2", std::move(cert)};
  }
  const double a1 = a[0], a2 = a[1], a3 = a[2];
  return {CirculantVector{(a1 * a1 - a2 * a3) / det, (a3 * a3 - a1 * a2) / det,
                          (a2 * a2 - a1 * a3) / det},
          "closed-form-n3", std::move(cert)};
}

}  // namespace circinv::spectral
