#include <gtest/gtest.h>

#include <random>

#include "circinv/circulant.hpp"
#include "circinv/error.hpp"
#include "circinv/spectral.hpp"
#include "oracles.hpp"

using namespace circinv;

namespace {

std::vector<double> random_row(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  std::vector<double> r(n);
  for (auto& x : r) x = d(rng);
  return r;
}

oracle::Matrix to_oracle(const DenseMatrix& m) {
  oracle::Matrix r(m.order(), std::vector<double>(m.order()));
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) r[i][j] = m(i, j);
  return r;
}

double max_diff(const oracle::Matrix& x, const oracle::Matrix& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) d = std::max(d, std::abs(x[i][j] - y[i][j]));
  return d;
}

}  // namespace

TEST(CirculantVector, RejectsEmpty) {
  EXPECT_THROW(CirculantVector(std::vector<double>{}), DimensionError);
}

TEST(CirculantVector, UnitAndOnes) {
  EXPECT_EQ(CirculantVector::unit(4), (CirculantVector{1, 0, 0, 0}));
  EXPECT_EQ(CirculantVector::ones(3), (CirculantVector{1, 1, 1}));
  EXPECT_DOUBLE_EQ((CirculantVector{1, -4, 2}).max_abs(), 4.0);
  EXPECT_DOUBLE_EQ((CirculantVector{1, -4, 2}).sum(), -1.0);
}

TEST(Materialize, ShiftsRowsRight) {
  const auto m = materialize(CirculantVector{1, 2, 3});
  const std::vector<double> expected{1, 2, 3, 3, 1, 2, 2, 3, 1};
  EXPECT_EQ(m.values(), expected);
}

TEST(Materialize, MatchesIndexFormula) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 2u, 5u, 17u}) {
    const auto a = random_row(rng, n);
    EXPECT_EQ(max_diff(to_oracle(materialize(CirculantVector(a))), oracle::circulant(a)), 0.0);
  }
}

TEST(Materialize, RespectsCap) {
  EXPECT_THROW(materialize(CirculantVector::ones(10), 9), CapError);
  EXPECT_NO_THROW(materialize(CirculantVector::ones(10), 10));
}

TEST(Tau, IsAnInvolution) {
  const CirculantVector a{1, 2, 3, 4, 5};
  EXPECT_EQ(tau_permute(a), (CirculantVector{1, 5, 4, 3, 2}));
  EXPECT_EQ(tau_permute(tau_permute(a)), a);
  const TauPermutation t(6);
  for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(t(t(j)), j);
}

TEST(Tau, TransposeIsCirculantOfTau) {
  std::mt19937_64 rng(3);
  const CirculantVector a(random_row(rng, 7));
  EXPECT_EQ(materialize(a).transpose(), materialize(tau_permute(a)));
}

TEST(Apply, MatchesDenseProduct) {
  std::mt19937_64 rng(5);
  for (std::size_t n : {1u, 3u, 8u, 31u}) {
    const auto a = random_row(rng, n);
    const auto x = random_row(rng, n);
    const auto got = circinv::apply(CirculantVector(a), x);
    EXPECT_LT(oracle::max_abs_diff(got, oracle::matvec(oracle::circulant(a), x)), 1e-12) << n;
  }
}

TEST(Apply, SparseRowShortcut) {
  const CirculantVector a{2, -1, 0, 0, 0, -1};
  const std::vector<double> x{1, 2, 3, 4, 5, 6};
  const auto got = circinv::apply(a, x);
  const std::vector<double> expected{2 - 2 - 6, 4 - 3 - 1, 6 - 4 - 2, 8 - 5 - 3, 10 - 6 - 4, 12 - 1 - 5};
  EXPECT_EQ(got, expected);
  EXPECT_THROW(circinv::apply(a, std::vector<double>{1, 2}), DimensionError);
}

TEST(Multiply, IsFirstRowOfDenseProduct) {
  std::mt19937_64 rng(9);
  for (std::size_t n : {2u, 4u, 9u, 20u}) {
    const auto a = random_row(rng, n);
    const auto b = random_row(rng, n);
    const auto prod = oracle::matmul(oracle::circulant(a), oracle::circulant(b));
    const auto ab = multiply(CirculantVector(a), CirculantVector(b));
    EXPECT_LT(oracle::max_abs_diff(ab.values(), prod[0]), 1e-11);
    // circulants commute
    const auto ba = multiply(CirculantVector(b), CirculantVector(a));
    EXPECT_LT(oracle::max_abs_diff(ab.values(), ba.values()), 1e-11);
  }
  EXPECT_THROW(multiply(CirculantVector{1, 2}, CirculantVector{1, 2, 3}), DimensionError);
}

TEST(LeftRight, DefinitionsAgreeWithPermutation) {
  std::mt19937_64 rng(21);
  const auto a = random_row(rng, 6);
  const auto p = to_oracle(tau_matrix(6));
  const auto c = oracle::circulant(a);
  EXPECT_EQ(max_diff(to_oracle(left_circulant(CirculantVector(a))), oracle::matmul(p, c)), 0.0);
  EXPECT_EQ(max_diff(to_oracle(right_circulant(CirculantVector(a))), oracle::matmul(c, p)), 0.0);
  const auto r = right_circulant(CirculantVector(a));
  EXPECT_EQ(r, r.transpose());
  EXPECT_EQ(left_circulant(CirculantVector(a)), left_circulant(CirculantVector(a)).transpose());
}

TEST(LeftRight, InversesFromInverseRow) {
  std::mt19937_64 rng(23);
  for (std::size_t n : {3u, 4u, 11u}) {
    const CirculantVector a(random_row(rng, n));
    const CirculantVector h(oracle::inverse_row(a.values()));
    const auto inv = left_right_inverse(a, h);
    EXPECT_LT(oracle::identity_defect(to_oracle(inv.left), to_oracle(left_circulant(a))), 1e-10);
    EXPECT_LT(oracle::identity_defect(to_oracle(left_circulant(a)), to_oracle(inv.left)), 1e-10);
    EXPECT_LT(oracle::identity_defect(to_oracle(inv.right), to_oracle(right_circulant(a))), 1e-10);
  }
}

TEST(DenseMatrix, Basics) {
  const auto i3 = DenseMatrix::identity(3);
  const auto m = materialize(CirculantVector{1, 2, 3});
  EXPECT_EQ(i3 * m, m);
  EXPECT_DOUBLE_EQ(m.max_abs(), 3.0);
  EXPECT_DOUBLE_EQ(m.max_abs_diff(i3), 3.0);
  EXPECT_THROW(DenseMatrix(2, {1, 2, 3}), DimensionError);
}
