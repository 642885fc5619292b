#include "circinv/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "circinv/error.hpp"

namespace circinv {

CirculantVector::CirculantVector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionError("circulant row must have length >= 1");
}

CirculantVector::CirculantVector(std::initializer_list<double> entries)
    : CirculantVector(std::vector<double>(entries)) {}

CirculantVector CirculantVector::unit(std::size_t n) {
  std::vector<double> e(n, 0.0);
  if (n > 0) e[0] = 1.0;
  return CirculantVector(std::move(e));
}

CirculantVector CirculantVector::ones(std::size_t n) {
  return CirculantVector(std::vector<double>(n, 1.0));
}

double CirculantVector::sum() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0.0);
}

double CirculantVector::max_abs() const noexcept {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::abs(v));
  return m;
}

TauPermutation::TauPermutation(std::size_t n) : n_(n) {
  if (n == 0) throw DimensionError("tau permutation needs n >= 1");
}

std::vector<double> TauPermutation::apply(std::span<const double> x) const {
  if (x.size() != n_) throw DimensionError("tau permutation: length mismatch");
  std::vector<double> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = x[(*this)(j)];
  return out;
}

DenseMatrix::DenseMatrix(std::size_t n) : n_(n), values_(n * n, 0.0) {}

DenseMatrix::DenseMatrix(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != n * n) throw DimensionError("dense matrix: value count is not n*n");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (rhs.n_ != n_) throw DimensionError("dense product: order mismatch");
  DenseMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const double aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += aik * rhs(k, j);
    }
  }
  return out;
}

std::vector<double> DenseMatrix::operator*(std::span<const double> x) const {
  if (x.size() != n_) throw DimensionError("dense matvec: length mismatch");
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double DenseMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double DenseMatrix::max_abs_diff(const DenseMatrix& other) const {
  if (other.n_ != n_) throw DimensionError("dense compare: order mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k)
    m = std::max(m, std::abs(values_[k] - other.values_[k]));
  return m;
}

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapError(n, cap);
}

}  // namespace

DenseMatrix materialize(const CirculantVector& a, std::size_t cap) {
  const std::size_t n = a.size();
  check_cap(n, cap);
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a[(j + n - i) % n];
  return m;
}

CirculantVector tau_permute(const CirculantVector& a) {
  return CirculantVector(TauPermutation(a.size()).apply(a.entries()));
}

std::vector<double> apply(const CirculantVector& a, std::span<const double> x) {
  const std::size_t n = a.size();
  if (x.size() != n) throw DimensionError("apply: vector length does not match circulant order");
  // (Circ(a) x)_i = sum_k a_k x_{(i+k) mod n}
  std::vector<double> y(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double ak = a[k];
    if (ak == 0.0) continue;
    for (std::size_t i = 0; i + k < n; ++i) y[i] += ak * x[i + k];
    for (std::size_t i = n - k; i < n; ++i) y[i] += ak * x[i + k - n];
  }
  return y;
}

CirculantVector multiply(const CirculantVector& a, const CirculantVector& b) {
  if (a.size() != b.size()) throw DimensionError("multiply: circulant orders differ");
  const auto c = apply(a, tau_permute(b).entries());
  return tau_permute(CirculantVector(c));
}

DenseMatrix left_circulant(const CirculantVector& a, std::size_t cap) {
  const std::size_t n = a.size();
  check_cap(n, cap);
  // row i of P_tau Circ(a) is row tau(i) of Circ(a): entry a[(i + j) mod n]
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a[(i + j) % n];
  return m;
}

DenseMatrix right_circulant(const CirculantVector& a, std::size_t cap) {
  const std::size_t n = a.size();
  check_cap(n, cap);
  // column j of Circ(a) P_tau is column tau(j) of Circ(a): entry a[(2n - i - j) mod n]
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a[(2 * n - i - j) % n];
  return m;
}

DenseMatrix tau_matrix(std::size_t n, std::size_t cap) {
  check_cap(n, cap);
  const TauPermutation tau(n);
  DenseMatrix p(n);
  for (std::size_t j = 0; j < n; ++j) p(tau(j), j) = 1.0;
  return p;
}

LeftRightInverse left_right_inverse(const CirculantVector& a, const CirculantVector& inverse_row,
                                    std::size_t cap) {
  if (a.size() != inverse_row.size())
    throw DimensionError("left_right_inverse: inverse row has the wrong length");
  const auto g = tau_permute(inverse_row);
  return {left_circulant(g, cap), right_circulant(g, cap)};
}

}  // namespace circinv
