#pragma once

// Circulant matrices represented by their first row.
//
// Circ(a) has entry (i, j) = a[(j - i) mod n] (0-based). All storage is
// 0-based; slot j holds the 1-based parameter a_{j+1}.

#include <cstddef>
#include <span>
#include <vector>

namespace circinv {

/// Largest order for which O(n^2) dense work is allowed by default.
inline constexpr std::size_t kDefaultDenseCap = 4096;

/// First row of a circulant matrix. Never empty.
class CirculantVector {
 public:
  explicit CirculantVector(std::vector<double> entries);
  CirculantVector(std::initializer_list<double> entries);

  /// e = (1, 0, ..., 0); Circ(e) = I.
  static CirculantVector unit(std::size_t n);
  /// The all-ones row; Circ(1) = J.
  static CirculantVector ones(std::size_t n);

  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t j) const { return entries_[j]; }
  std::span<const double> entries() const noexcept { return entries_; }
  const std::vector<double>& values() const noexcept { return entries_; }

  /// <a, 1>
  double sum() const noexcept;
  double max_abs() const noexcept;

  bool operator==(const CirculantVector&) const = default;

 private:
  std::vector<double> entries_;
};

/// The index involution fixing 0 and sending j to n - j (0-based).
class TauPermutation {
 public:
  explicit TauPermutation(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t operator()(std::size_t j) const noexcept { return j == 0 ? 0 : n_ - j; }

  std::vector<double> apply(std::span<const double> x) const;

 private:
  std::size_t n_;
};

/// Square row-major matrix. Used by the oracles and small-n materialization.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t n);
  DenseMatrix(std::size_t n, std::vector<double> values);

  static DenseMatrix identity(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return values_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {values_.data() + i * n_, n_}; }
  const std::vector<double>& values() const noexcept { return values_; }

  DenseMatrix transpose() const;
  DenseMatrix operator*(const DenseMatrix& rhs) const;
  std::vector<double> operator*(std::span<const double> x) const;

  double max_abs() const noexcept;
  /// max_{ij} |A_ij - B_ij|
  double max_abs_diff(const DenseMatrix& other) const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t n_;
  std::vector<double> values_;
};

/// Circ(a) as a dense matrix. Throws CapError when n > cap.
DenseMatrix materialize(const CirculantVector& a, std::size_t cap = kDefaultDenseCap);

/// a_tau: a_tau[0] = a[0], a_tau[j] = a[n - j].
CirculantVector tau_permute(const CirculantVector& a);

/// Circ(a) x without materializing. Cost is O(nnz(a) * n).
std::vector<double> apply(const CirculantVector& a, std::span<const double> x);

/// First row of Circ(a) Circ(b), i.e. c_tau with c = Circ(a) b_tau.
CirculantVector multiply(const CirculantVector& a, const CirculantVector& b);

/// P_tau Circ(a), symmetric.
DenseMatrix left_circulant(const CirculantVector& a, std::size_t cap = kDefaultDenseCap);
/// Circ(a) P_tau, symmetric.
DenseMatrix right_circulant(const CirculantVector& a, std::size_t cap = kDefaultDenseCap);
/// P_tau as a dense matrix.
DenseMatrix tau_matrix(std::size_t n, std::size_t cap = kDefaultDenseCap);

struct LeftRightInverse {
  DenseMatrix left;   ///< inverse of left_circulant(a)
  DenseMatrix right;  ///< inverse of right_circulant(a)
};

/// Inverses of the left- and right-circulant matrices built from `a`.
///
/// `inverse_row` is the first row h of Circ(a)^{-1}, as carried by every
/// InverseResult. The column solution g of Circ(a) g = e is h_tau, and
/// the two inverses are P_tau Circ(g) and Circ(g) P_tau.
LeftRightInverse left_right_inverse(const CirculantVector& a, const CirculantVector& inverse_row,
                                    std::size_t cap = kDefaultDenseCap);

}  // namespace circinv
