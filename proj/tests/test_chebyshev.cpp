#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "circinv/chebyshev.hpp"
#include "circinv/circulant.hpp"
#include "circinv/error.hpp"
#include "oracles.hpp"

using namespace circinv;
namespace cb = circinv::chebyshev;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

std::vector<double> sample_points(unsigned seed, int count, double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> xs{lo, -1.0, -0.5, 0.0, 0.5, 1.0, hi};
  for (int i = 0; i < count; ++i) xs.push_back(d(rng));
  return xs;
}

}  // namespace

TEST(Chebyshev, SpotValues) {
  EXPECT_DOUBLE_EQ(cb::t(5, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(cb::t(4, 0.0), 1.0);
  EXPECT_NEAR(cb::t(3, 0.0), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(cb::t(-3, 0.7), cb::t(3, 0.7));
  EXPECT_NEAR(cb::u(3, 1.0), 4.0, 1e-12);
  EXPECT_EQ(cb::u(-1, 2.3), 0.0);
  EXPECT_NEAR(cb::u(4, -1.0), 5.0, 1e-12);
  EXPECT_DOUBLE_EQ(cb::evaluate(cb::Kind::SecondKind, 2, 3.0), 35.0);
  EXPECT_DOUBLE_EQ(cb::evaluate(cb::Kind::FirstKind, 2, 3.0), 17.0);
}

TEST(Chebyshev, MatchesRecurrenceOracle) {
  for (double x : sample_points(1, 40, -2.0, 2.0)) {
    for (long m = -25; m <= 25; ++m) {
      EXPECT_LT(rel(cb::t(m, x), oracle::cheb_t(m, x)), 1e-10) << "T m=" << m << " x=" << x;
      EXPECT_LT(rel(cb::u(m, x), oracle::cheb_u(m, x)), 1e-10) << "U m=" << m << " x=" << x;
    }
  }
}

TEST(Chebyshev, ThreeTermRecurrence) {
  for (double x : sample_points(2, 50, -2.0, 2.0)) {
    for (long m = -20; m <= 20; ++m) {
      for (auto kind : {cb::Kind::FirstKind, cb::Kind::SecondKind}) {
        const double lhs = cb::evaluate(kind, m + 1, x);
        const double rhs = 2.0 * x * cb::evaluate(kind, m, x) - cb::evaluate(kind, m - 1, x);
        const double scale = std::max({1.0, std::abs(lhs), std::abs(2.0 * x * cb::evaluate(kind, m, x))});
        EXPECT_LT(std::abs(lhs - rhs) / scale, 1e-10) << "m=" << m << " x=" << x;
      }
    }
  }
}

TEST(Chebyshev, Reflection) {
  for (double x : sample_points(3, 20, -2.0, 2.0)) {
    for (long m = 0; m <= 20; ++m) {
      EXPECT_EQ(cb::t(-m, x), cb::t(m, x));
      EXPECT_EQ(cb::u(-m, x), -cb::u(m - 2, x));
    }
    EXPECT_EQ(cb::u(-1, x), 0.0);
  }
}

TEST(Chebyshev, ValuesAtZero) {
  for (long k = -10; k <= 10; ++k) {
    const double sign = (std::abs(k) % 2 == 0) ? 1.0 : -1.0;
    EXPECT_NEAR(cb::t(2 * k + 1, 0.0), 0.0, 1e-12);
    EXPECT_NEAR(cb::u(2 * k + 1, 0.0), 0.0, 1e-12);
    EXPECT_NEAR(cb::t(2 * k, 0.0), sign, 1e-12);
    EXPECT_NEAR(cb::u(2 * k, 0.0), sign, 1e-12);
  }
}

TEST(Chebyshev, RootStructure) {
  for (long n = 1; n <= 12; ++n) {
    for (long j = 1; j <= n; ++j) {
      const double q = std::cos(std::numbers::pi * j / (n + 1));
      EXPECT_LT(std::abs(cb::u(n, q)), 1e-9);
      EXPECT_NEAR(cb::u(n - 1, q), j % 2 == 1 ? 1.0 : -1.0, 1e-9);
      EXPECT_NEAR(cb::u(n + 1, q), j % 2 == 0 ? 1.0 : -1.0, 1e-9);
    }
    for (long j = 0; 2 * j <= n; ++j) EXPECT_NEAR(cb::t(n, std::cos(2.0 * std::numbers::pi * j / n)), 1.0, 1e-9);
  }
}

TEST(Chebyshev, EndpointValues) {
  for (long m = -15; m <= 15; ++m) {
    const double sign = (std::abs(m) % 2 == 0) ? 1.0 : -1.0;
    EXPECT_NEAR(cb::t(m, 1.0), 1.0, 1e-12);
    EXPECT_NEAR(cb::u(m, 1.0), m + 1.0, 1e-9);
    EXPECT_NEAR(cb::t(m, -1.0), sign, 1e-12);
    EXPECT_NEAR(cb::u(m, -1.0), sign * (m + 1.0), 1e-9);
  }
}

TEST(Chebyshev, PellTypeIdentityAndDerivative) {
  for (double x : sample_points(4, 40, -2.0, 2.0)) {
    for (long m = -10; m <= 50; ++m) {
      const double rhs = x * cb::u(m - 1, x) - cb::u(m - 2, x);
      const double scale = std::max({1.0, std::abs(x * cb::u(m - 1, x)), std::abs(cb::u(m - 2, x))});
      EXPECT_LT(std::abs(cb::t(m, x) - rhs) / scale, 1e-10) << "m=" << m << " x=" << x;
    }
  }
  for (double x : {-0.9, -0.3, 0.2, 0.8, 1.4}) {
    for (long m = 1; m <= 12; ++m) {
      const double h = 1e-6;
      const double deriv = (cb::t(m, x + h) - cb::t(m, x - h)) / (2.0 * h);
      EXPECT_LT(rel(deriv, m * cb::u(m - 1, x)), 1e-6) << m << " " << x;
    }
  }
}

TEST(Chebyshev, SummationIdentity) {
  for (double x : sample_points(5, 30, -2.0, 2.0)) {
    if (std::abs(x - 1.0) < 1e-3) continue;
    double sum = 0.0;
    for (long n = 0; n <= 40; ++n) {
      sum += cb::u(n, x);
      const double lhs = 2.0 * (x - 1.0) * sum;
      const double rhs = cb::u(n + 1, x) - cb::u(n, x) - 1.0;
      const double scale = std::max({1.0, std::abs(cb::u(n + 1, x)), std::abs(cb::u(n, x))});
      EXPECT_LT(std::abs(lhs - rhs) / scale, 1e-9) << "n=" << n << " x=" << x;
    }
  }
}

TEST(Horadam, KnownSequences) {
  EXPECT_EQ(cb::horadam(6, {1, 1}), 8);
  EXPECT_EQ(cb::horadam(1, {7, -3}), 1);
  EXPECT_EQ(cb::horadam(0, {7, -3}), 0);
  EXPECT_EQ(cb::horadam(4, {2, 1}), 12);
  EXPECT_EQ(cb::horadam(5, {1, 2}), 11);
  EXPECT_EQ(cb::horadam(9, {2, -1}), 9);
  EXPECT_EQ(cb::horadam(90, {1, 1}), 2880067194370816120LL);
  EXPECT_THROW(cb::horadam(93, {1, 1}), OverflowError);
  EXPECT_THROW(cb::horadam(3, {1, 0}), DomainError);
  EXPECT_THROW(cb::horadam(-1, {1, 1}), DomainError);
}

TEST(Horadam, ChebyshevBridgeExamples) {
  EXPECT_NEAR(cb::u(2, 1.5), 8.0, 1e-12);
  EXPECT_NEAR(2.0 * cb::u(1, 3.0), 12.0, 1e-12);
  EXPECT_NEAR(2.0 * cb::u(1, 1.25), 5.0, 1e-12);
  EXPECT_NEAR(cb::horadam_via_chebyshev(6, {1, 1}), 8.0, 1e-12);
  EXPECT_NEAR(cb::horadam_via_chebyshev(4, {2, 1}), 12.0, 1e-12);
  EXPECT_NEAR(cb::horadam_via_chebyshev(4, {1, 2}), 5.0, 1e-12);
  EXPECT_THROW(cb::horadam_via_chebyshev(5, {1, 1}), DomainError);
}

TEST(Horadam, BridgeAgreesWithExactValues) {
  const std::vector<cb::HoradamParams> cases{{1, 1}, {2, 1}, {1, 2},  {1, -1}, {2, -2},
                                             {3, -3}, {-1, -1}, {-2, -2}, {-3, -3}, {2, 2},
                                             {3, 3},  {2, -1}, {5, -7}, {-2, 3}};
  for (const auto& p : cases) {
    for (std::int64_t m = 1; m <= 30; ++m) {
      if (p.s > 0 && m % 2 == 1) continue;
      const double exact = static_cast<double>(cb::horadam(m, p));
      EXPECT_LT(rel(cb::horadam_via_chebyshev(m, p), exact), 1e-10)
          << "r=" << p.r << " s=" << p.s << " m=" << m;
    }
  }
}

TEST(KernelVectors, Examples) {
  const auto k1 = cb::kernel_vectors(1.0, 4);
  for (double w : k1.w) EXPECT_NEAR(w, 4.0, 1e-12);
  const auto k3 = cb::kernel_vectors(1.0, 3);
  EXPECT_EQ(k3.z, (std::vector<double>{1, 1, 1}));
  EXPECT_DOUBLE_EQ(cb::z_sum(1.0, 3), 3.0);
  const auto k2 = cb::kernel_vectors(2.0, 3);
  EXPECT_EQ(k2.z, (std::vector<double>{4, 2, 1}));
  EXPECT_DOUBLE_EQ(cb::z_sum(2.0, 3), 7.0);
}

TEST(KernelVectors, Definitions) {
  for (double q : {-2.5, -1.0, -0.3, 0.0, 0.7, 1.0, 1.8}) {
    for (std::size_t n : {1u, 2u, 3u, 6u, 11u}) {
      const auto k = cb::kernel_vectors(q, n);
      ASSERT_EQ(k.w.size(), n);
      for (std::size_t j = 1; j <= n; ++j) {
        const long jj = static_cast<long>(j), nn = static_cast<long>(n);
        EXPECT_LT(rel(k.z[j - 1], std::pow(q, nn - jj)), 1e-12);
        EXPECT_LT(rel(k.u[j - 1], oracle::cheb_u(jj - 2, q)), 1e-12);
        EXPECT_LT(rel(k.v[j - 1], oracle::cheb_u(jj - 1, q)), 1e-12);
        EXPECT_LT(rel(k.w[j - 1], oracle::cheb_u(jj - 2, q) + oracle::cheb_u(nn - jj, q)), 1e-12);
      }
    }
  }
}

TEST(KernelVectors, WIsTauSymmetricWithKnownSum) {
  for (double q : {-1.7, -1.0, -0.4, 0.0, 0.3, 0.999, 1.0, 1.001, 2.2}) {
    for (std::size_t n = 1; n <= 16; ++n) {
      const auto k = cb::kernel_vectors(q, n);
      const auto wt = tau_permute(CirculantVector(k.w));
      EXPECT_EQ(wt.values(), k.w);
      double s = 0.0, zs = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        s += k.w[j];
        zs += k.z[j];
      }
      const double expected =
          q == 1.0 ? double(n * n) : (oracle::cheb_t(static_cast<long>(n), q) - 1.0) / (q - 1.0);
      EXPECT_LT(rel(s, expected), 1e-9) << q << " " << n;
      EXPECT_LT(rel(cb::w_sum(q, n), expected), 1e-9) << q << " " << n;
      EXPECT_LT(rel(cb::z_sum(q, n), zs), 1e-12) << q << " " << n;
    }
  }
}

TEST(KernelVectors, SmallArgumentStructure) {
  for (std::size_t n = 2; n <= 15; ++n) {
    const auto w0 = cb::kernel_vectors(0.0, n).w;
    const auto wm = cb::kernel_vectors(-1.0, n).w;
    if (n % 2 == 0) {
      const double half_sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
      for (std::size_t j = 1; j <= n / 2; ++j) {
        const double sign = (j - 1) % 2 == 0 ? 1.0 : -1.0;
        EXPECT_NEAR(w0[2 * j - 2], 0.0, 1e-12);
        EXPECT_NEAR(w0[2 * j - 1], sign * (1.0 - half_sign), 1e-12);
      }
    } else {
      for (std::size_t j = 1; j <= (n + 1) / 2; ++j) {
        const double sign = ((n + 1) / 2 + j) % 2 == 0 ? 1.0 : -1.0;
        EXPECT_NEAR(w0[2 * j - 2], sign, 1e-12) << n << " " << j;
      }
      for (std::size_t j = 1; j <= (n - 1) / 2; ++j)
        EXPECT_NEAR(w0[2 * j - 1], (j - 1) % 2 == 0 ? 1.0 : -1.0, 1e-12);
      for (std::size_t j = 1; j <= n; ++j) {
        const double sign = (j - 1) % 2 == 0 ? 1.0 : -1.0;
        EXPECT_NEAR(wm[j - 1], sign * (double(n) + 2.0 - 2.0 * double(j)), 1e-12);
      }
    }
  }
}

TEST(KernelVectors, VanishingPoints) {
  const auto p3 = cb::w_vanishing_points(3);
  ASSERT_EQ(p3.size(), 1u);
  EXPECT_NEAR(p3[0], -0.5, 1e-15);
  EXPECT_THROW(cb::w_vanishing_points(2), DomainError);
  for (std::size_t n = 3; n <= 40; ++n) {
    const auto pts = cb::w_vanishing_points(n);
    EXPECT_EQ(pts.size(), (n - 1) / 2);
    for (double q : pts) {
      const auto k = cb::kernel_vectors(q, n);
      double mx = 0.0, su = 0.0, sv = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        mx = std::max(mx, std::abs(k.w[j]));
        su += k.u[j];
        sv += k.v[j];
      }
      EXPECT_LT(mx, 1e-9) << n << " " << q;
      EXPECT_LT(std::abs(su), 1e-9);
      EXPECT_LT(std::abs(sv), 1e-9);
    }
  }
  // q = -1 is not a zero of w for even n
  EXPECT_GT(std::abs(cb::kernel_vectors(-1.0, 4).w[0]), 1.0);
}
