#include "circinv/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "circinv/error.hpp"

namespace circinv::closed_form {

namespace {

double param_scale(std::initializer_list<double> xs) {
  double s = 1.0;
  for (double x : xs) s = std::max(s, std::abs(x));
  return s;
}

void require_order(std::size_t n) {
  if (n < 3) throw DomainError("three-parameter circulant families need n >= 3");
}

[[noreturn]] void throw_singular(const InvertCertificate& cert) {
  throw SingularError("circulant is singular: factor '" + cert.witness + "' vanishes", cert.witness);
}

double sign_pow(bool negative, std::size_t k) { return (negative && (k % 2 == 1)) ? -1.0 : 1.0; }

// Writes s_j = w_j(q) / (2 (T_n(q) - 1)) for j = 1..n into out[0..n-1].
//
// Uses U_m(cos t) = sin((m+1)t)/sin t inside [-1, 1] and the hyperbolic
// analogue outside, after summing w_j to product form; no T_n or U_m is
// ever formed, so nothing overflows for large n. `one_minus` = 1 - q and
// `one_plus` = 1 + q must be computed from the caller's parameters.
void cycle_kernel(double q, double one_minus, double one_plus, std::size_t n, std::span<double> out) {
  const double nn = static_cast<double>(n);
  const bool negative = q < 0.0;
  // 1 - |q|, accurate near |q| = 1
  const double gap = negative ? one_plus : one_minus;

  if (gap >= 0.0) {
    const double phi = 2.0 * std::asin(std::sqrt(0.5 * gap));
    const double sin_phi = std::sin(phi);
    if (!negative || n % 2 == 0) {
      const double denom = 2.0 * sin_phi * std::sin(0.5 * nn * phi);
      for (std::size_t j = 1; j <= n; ++j) {
        const double k = 0.5 * (nn + 2.0 - 2.0 * static_cast<double>(j));
        out[j - 1] = sign_pow(negative, j) * -std::cos(k * phi) / denom;
      }
    } else {
      const double half_cos = 2.0 * std::cos(0.5 * nn * phi);
      for (std::size_t j = 1; j <= n; ++j) {
        const double k = 0.5 * (nn + 2.0 - 2.0 * static_cast<double>(j));
        const double ratio = phi == 0.0 ? k : std::sin(k * phi) / sin_phi;
        out[j - 1] = sign_pow(true, j) * ratio / half_cos;
      }
    }
    return;
  }

  // |q| > 1: q = +-cosh(eta)
  const double excess = -gap;
  const double eta = std::log1p(excess + std::sqrt(excess * (excess + 2.0)));
  const bool flip = negative && (n % 2 == 1);
  const double tail = std::exp(-nn * eta);
  const double denom = 2.0 * std::sinh(eta) * (flip ? 1.0 + tail : -std::expm1(-nn * eta));
  for (std::size_t j = 1; j <= n; ++j) {
    const double jj = static_cast<double>(j);
    const double lead = std::exp(-(jj - 1.0) * eta);
    const double back = std::exp(-(nn + 1.0 - jj) * eta);
    out[j - 1] = sign_pow(negative, j) * (flip ? lead - back : lead + back) / denom;
  }
}

// r^n - 1 without cancellation near r = 1.
double pow_minus_one(double r, std::size_t n) {
  const double nn = static_cast<double>(n);
  if (r == 0.0) return -1.0;
  if (r > 0.0) return std::expm1(nn * std::log1p(r - 1.0));
  if (n % 2 == 0) return std::expm1(nn * std::log(-r));
  return -std::pow(-r, nn) - 1.0;
}

// |r^n - 1| / max(1, |r|^n)
double normalized_pow_gap(double r, std::size_t n) {
  if (std::abs(r) <= 1.0) return std::abs(pow_minus_one(r, n));
  const double nn = static_cast<double>(n);
  const double lg = std::log(std::abs(r));
  if (r > 0.0 || n % 2 == 0) return std::abs(std::expm1(-nn * lg));
  return 1.0 + std::exp(-nn * lg);
}

InvertCertificate min_of(std::initializer_list<std::pair<double, const char*>> factors,
                         double tolerance) {
  const auto* best = factors.begin();
  for (const auto* it = factors.begin(); it != factors.end(); ++it)
    if (it->first < best->first) best = it;
  return InvertCertificate::from_margin(best->first, best->second, tolerance);
}

std::vector<double> constant_row(std::size_t n, double value) { return std::vector<double>(n, value); }

}  // namespace

// ---------------------------------------------------------------------------
// Circ(a, b, c, ..., c)

InvertCertificate check_invertible_3param(const ThreeParamRow& f, double tolerance) {
  require_order(f.n);
  const auto [a, b, c, n] = f;
  const double nn = static_cast<double>(n);
  const double s = param_scale({a, b, c});
  const double row_sum = a + b + (nn - 2.0) * c;
  const double odd = (n % 2 == 1) ? 2.0 : 0.0;
  const double quad = std::sqrt((a - b) * (a - b) + odd * (c - b) * (c - b));
  return min_of({{std::abs(row_sum) / (nn * s), "a+b+(n-2)c"},
                 {quad / s, n % 2 == 0 ? "a-b" : "(a-b)^2+2(c-b)^2"}},
                tolerance);
}

InverseResult inverse_3param(const ThreeParamRow& f, double tolerance) {
  auto cert = check_invertible_3param(f, tolerance);
  if (!cert.invertible) throw_singular(cert);
  const auto [a, b, c, n] = f;
  const double nn = static_cast<double>(n);
  const double s = param_scale({a, b, c});
  const double row_sum = a + b + (nn - 2.0) * c;
  std::vector<double> k(n);

  if (std::abs(c - b) <= tolerance * s) {
    // (a - b) I + b J
    const double off = -b / ((a - b) * row_sum);
    k.assign(n, off);
    k[0] = 1.0 / (a - b) + off;
    return {CirculantVector(std::move(k)), "3param-diagonal", std::move(cert)};
  }

  const double cb = c - b;
  const double curv = a + b - 2.0 * c;
  if (std::abs(curv) <= tolerance * s) {
    // a = 2c - b: the inverse row is an arithmetic sequence
    // centered so the antisymmetric part sums to zero exactly
    const double lift = 1.0 / (nn * nn * c);
    const double step = nn * cb;
    for (std::size_t j = 0; j < n; ++j) k[j] = lift + (0.5 * (nn - 1.0) - static_cast<double>(j)) / step;
    return {CirculantVector(std::move(k)), "3param-arithmetic", std::move(cert)};
  }

  // k_j = q^{n-j} / ((c-b)(q^n - 1)) - c / ((a+b-2c)(a+b+(n-2)c)),  q = (a-c)/(c-b)
  const double q = (a - c) / cb;
  const double shift = c / (curv * row_sum);
  const bool negative = q < 0.0;

  if (q == 0.0) {
    for (std::size_t j = 1; j <= n; ++j) k[j - 1] = (j == n ? -1.0 / cb : 0.0) - shift;
    return {CirculantVector(std::move(k)), "3param-generic", std::move(cert)};
  }

  // log|q| from |q| - 1, which is (a+b-2c)/(c-b) or -(a-b)/(c-b)
  const double abs_q_minus_one = negative ? -(a - b) / cb : curv / cb;
  const double log_abs_q = std::log1p(abs_q_minus_one);
  const bool even_power = !negative || n % 2 == 0;

  if (log_abs_q <= 0.0) {
    const double denom = cb * (even_power ? std::expm1(nn * log_abs_q) : -std::exp(nn * log_abs_q) - 1.0);
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t p = n - j;
      k[j - 1] = sign_pow(negative, p) * std::exp(static_cast<double>(p) * log_abs_q) / denom - shift;
    }
  } else {
    // divide through by q^n
    const double denom =
        cb * (even_power ? -std::expm1(-nn * log_abs_q) : 1.0 + std::exp(-nn * log_abs_q));
    for (std::size_t j = 1; j <= n; ++j)
      k[j - 1] = sign_pow(negative, j) * std::exp(-static_cast<double>(j) * log_abs_q) / denom - shift;
  }
  return {CirculantVector(std::move(k)), "3param-generic", std::move(cert)};
}

// ---------------------------------------------------------------------------
// Circ(a, b, c, ..., c, b)

InvertCertificate check_invertible_sym3(const SymThreeParam& f, double tolerance) {
  require_order(f.n);
  const auto [a, b, c, n] = f;
  const double s = param_scale({a, b, c});
  if (std::abs(c - b) <= tolerance * s) return check_invertible_3param({a, b, b, n}, tolerance);

  const double nn = static_cast<double>(n);
  const double row_sum = a + 2.0 * b + (nn - 3.0) * c;
  double margin = std::abs(row_sum) / (nn * s);
  std::string witness = "a+2b+(n-3)c";
  for (std::size_t j = 1; j <= n / 2; ++j) {
    const double cj = std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / nn);
    const double factor = std::abs(a - c + 2.0 * (b - c) * cj) / s;
    if (factor < margin) {
      margin = factor;
      witness = "a-c+2(b-c)cos(2pi*" + std::to_string(j) + "/n)";
    }
  }
  return InvertCertificate::from_margin(margin, std::move(witness), tolerance);
}

InverseResult inverse_sym3(const SymThreeParam& f, double tolerance) {
  require_order(f.n);
  const auto [a, b, c, n] = f;
  const double s = param_scale({a, b, c});
  if (std::abs(c - b) <= tolerance * s) {
    auto r = inverse_3param({a, b, b, n}, tolerance);
    r.method = "sym3-delegated:" + r.method;
    return r;
  }

  auto cert = check_invertible_sym3(f, tolerance);
  if (!cert.invertible) throw_singular(cert);
  const double nn = static_cast<double>(n);
  const double cb = c - b;
  const double row_sum = a + 2.0 * b + (nn - 3.0) * c;
  const double curv = a + 2.0 * b - 3.0 * c;
  std::vector<double> g(n);

  if (std::abs(curv) <= tolerance * s) {
    // a = 3c - 2b: Green function of the cycle Laplacian plus a constant
    const double lift = 1.0 / (nn * nn * c);
    for (std::size_t j = 1; j <= n; ++j) {
      const double jm1 = static_cast<double>(j - 1);
      g[j - 1] = (nn * nn - 1.0 - 6.0 * jm1 * (nn - jm1)) / (12.0 * nn * cb) + lift;
    }
    return {CirculantVector(std::move(g)), "sym3-green-branch", std::move(cert)};
  }

  // q = (c-a)/(2(b-c)); 1 - q and 1 + q from the parameters
  const double two_bc = 2.0 * (b - c);
  const double q = (c - a) / two_bc;
  cycle_kernel(q, curv / two_bc, (2.0 * b - c - a) / two_bc, n, g);
  const double shift = c / (curv * row_sum);
  for (double& x : g) x = x / cb - shift;
  return {CirculantVector(std::move(g)), "sym3-generic", std::move(cert)};
}

// ---------------------------------------------------------------------------
// Geometric and arithmetic rows

InvertCertificate check_invertible_geometric(const Geometric& f, double tolerance) {
  require_order(f.n);
  return min_of({{std::abs(f.a) / std::max(1.0, std::abs(f.a)), "a"},
                 {normalized_pow_gap(f.r, f.n), "r^n-1"}},
                tolerance);
}

InverseResult inverse_geometric(const Geometric& f, double tolerance) {
  auto cert = check_invertible_geometric(f, tolerance);
  if (!cert.invertible) throw_singular(cert);
  const double scale = 1.0 / (f.a * pow_minus_one(f.r, f.n));
  std::vector<double> row(f.n, 0.0);
  row[0] = f.r * scale;
  row[1] = -scale;
  return {CirculantVector(std::move(row)), "geometric", std::move(cert)};
}

InvertCertificate check_invertible_arithmetic(const Arithmetic& f, double tolerance) {
  require_order(f.n);
  const double nn = static_cast<double>(f.n);
  const double s = param_scale({f.a, f.b});
  return min_of({{std::abs(f.b) / s, "b"},
                 {std::abs(2.0 * f.a + (nn - 1.0) * f.b) / (nn * s), "2a+(n-1)b"}},
                tolerance);
}

InverseResult inverse_arithmetic(const Arithmetic& f, double tolerance) {
  auto cert = check_invertible_arithmetic(f, tolerance);
  if (!cert.invertible) throw_singular(cert);
  const double nn = static_cast<double>(f.n);
  const double lift = 2.0 / (nn * nn * (2.0 * f.a + (nn - 1.0) * f.b));
  const double step = 1.0 / (nn * f.b);
  auto row = constant_row(f.n, lift);
  row[0] -= step;
  row[1] += step;
  return {CirculantVector(std::move(row)), "arithmetic", std::move(cert)};
}

// ---------------------------------------------------------------------------
// Cycle Schrodinger operator and symmetric tridiagonal rows

InvertCertificate check_invertible_cycle(double q, std::size_t n, double tolerance) {
  return check_invertible_sym3({2.0 * q, -1.0, 0.0, n}, tolerance);
}

InverseResult cycle_green(double q, std::size_t n, double tolerance) {
  require_order(n);
  auto cert = check_invertible_cycle(q, n, tolerance);
  if (!cert.invertible) throw_singular(cert);
  std::vector<double> g(n);
  cycle_kernel(q, 1.0 - q, 1.0 + q, n, g);
  return {CirculantVector(std::move(g)), "cycle-green", std::move(cert)};
}

InvertCertificate check_invertible_tridiag(const TridiagSym& f, double tolerance) {
  require_order(f.n);
  const double s = param_scale({f.a, f.b});
  if (std::abs(f.b) <= tolerance * s) throw DomainError("symmetric tridiagonal form needs b != 0");
  const double nn = static_cast<double>(f.n);
  double margin = HUGE_VAL;
  std::string witness;
  for (std::size_t j = 0; j <= f.n / 2; ++j) {
    const double cj = std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / nn);
    const double factor = std::abs(f.a + 2.0 * f.b * cj) / s;
    if (factor < margin) {
      margin = factor;
      witness = "a+2b*cos(2pi*" + std::to_string(j) + "/n)";
    }
  }
  return InvertCertificate::from_margin(margin, std::move(witness), tolerance);
}

InverseResult inverse_tridiag_sym(const TridiagSym& f, double tolerance) {
  auto cert = check_invertible_tridiag(f, tolerance);
  if (!cert.invertible) throw_singular(cert);
  // same kernel as the symmetric three-parameter case with c = 0, q = -a/(2b)
  const double two_b = 2.0 * f.b;
  std::vector<double> g(f.n);
  cycle_kernel(-f.a / two_b, (two_b + f.a) / two_b, (two_b - f.a) / two_b, f.n, g);
  for (double& x : g) x = -x / f.b;
  return {CirculantVector(std::move(g)), "tridiag-sym", std::move(cert)};
}

// ---------------------------------------------------------------------------
// Quadratic and alternating patterns

InvertCertificate check_invertible_quadratic(const QuadraticPattern& f, double tolerance) {
  require_order(f.n);
  const double nn = static_cast<double>(f.n);
  const double s = param_scale({f.a, f.b});
  return min_of({{std::abs(f.b) / s, "b"},
                 {std::abs(6.0 * f.a + f.b * (nn * nn - 1.0)) / (nn * nn * s), "6a+b(n^2-1)"}},
                tolerance);
}

InverseResult inverse_quadratic_pattern(const QuadraticPattern& f, double tolerance) {
  auto cert = check_invertible_quadratic(f, tolerance);
  if (!cert.invertible) throw_singular(cert);
  const double nn = static_cast<double>(f.n);
  const double lift = 6.0 / (nn * nn * (6.0 * f.a + f.b * (nn * nn - 1.0)));
  const double step = 1.0 / (2.0 * nn * f.b);
  auto row = constant_row(f.n, lift);
  row[0] -= 2.0 * step;
  row[1] += step;
  row[f.n - 1] += step;
  return {CirculantVector(std::move(row)), "quadratic", std::move(cert)};
}

namespace {

void check_family(const AlternatingPattern& f) {
  require_order(f.n);
  const std::size_t n = f.n;
  switch (f.family) {
    case 1:
    case 2:
    case 3:
      if (n % 4 != static_cast<std::size_t>(f.family))
        throw DomainError("alternating family " + std::to_string(f.family) + " needs n = " +
                          std::to_string(f.family) + " mod 4");
      return;
    case 4:
      if (n % 2 == 0) throw DomainError("alternating family 4 needs odd n");
      return;
    default:
      throw DomainError("alternating family must be 1, 2, 3 or 4");
  }
}

}  // namespace

InvertCertificate check_invertible_alternating(const AlternatingPattern& f, double tolerance) {
  check_family(f);
  const double nn = static_cast<double>(f.n);
  const double s = param_scale({f.a, f.b});
  if (f.family == 4)
    return min_of({{std::abs(f.b) / s, "b"}, {std::abs(f.a * nn + f.b) / (nn * s), "an+b"}},
                  tolerance);
  return min_of({{std::abs(f.a - f.b) / s, "a-b"},
                 {std::abs(f.a * (nn + 1.0) + f.b * (nn - 1.0)) / (nn * s), "a(n+1)+b(n-1)"}},
                tolerance);
}

InverseResult inverse_alternating_pattern(const AlternatingPattern& f, double tolerance) {
  auto cert = check_invertible_alternating(f, tolerance);
  if (!cert.invertible) throw_singular(cert);
  const double nn = static_cast<double>(f.n);
  const double a = f.a;
  const double b = f.b;
  std::vector<double> row;
  if (f.family == 4) {
    const double step = 1.0 / (4.0 * b);
    row = constant_row(f.n, -a / (b * (a * nn + b)));
    row[0] += 2.0 * step;
    row[1] += step;
    row[f.n - 1] += step;
  } else {
    const double step = 1.0 / (a - b);
    row = constant_row(f.n, -2.0 * (a + b) / ((a - b) * (a * (nn + 1.0) + b * (nn - 1.0))));
    row[1] += step;
    row[f.n - 1] += step;
  }
  return {CirculantVector(std::move(row)), "alternating-" + std::to_string(f.family),
          std::move(cert)};
}

// ---------------------------------------------------------------------------

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

InvertCertificate certify(const StructuredForm& form, double tolerance) {
  return std::visit(
      overloaded{
          [&](const ThreeParamRow& f) { return check_invertible_3param(f, tolerance); },
          [&](const SymThreeParam& f) { return check_invertible_sym3(f, tolerance); },
          [&](const Geometric& f) { return check_invertible_geometric(f, tolerance); },
          [&](const Arithmetic& f) { return check_invertible_arithmetic(f, tolerance); },
          [&](const TridiagSym& f) { return check_invertible_tridiag(f, tolerance); },
          [&](const QuadraticPattern& f) { return check_invertible_quadratic(f, tolerance); },
          [&](const AlternatingPattern& f) { return check_invertible_alternating(f, tolerance); },
          [&](const CycleSchrodinger& f) { return check_invertible_cycle(f.q, f.n, tolerance); },
      },
      form);
}

InverseResult invert(const StructuredForm& form, double tolerance) {
  return std::visit(
      overloaded{
          [&](const ThreeParamRow& f) { return inverse_3param(f, tolerance); },
          [&](const SymThreeParam& f) { return inverse_sym3(f, tolerance); },
          [&](const Geometric& f) { return inverse_geometric(f, tolerance); },
          [&](const Arithmetic& f) { return inverse_arithmetic(f, tolerance); },
          [&](const TridiagSym& f) { return inverse_tridiag_sym(f, tolerance); },
          [&](const QuadraticPattern& f) { return inverse_quadratic_pattern(f, tolerance); },
          [&](const AlternatingPattern& f) { return inverse_alternating_pattern(f, tolerance); },
          [&](const CycleSchrodinger& f) { return cycle_green(f.q, f.n, tolerance); },
      },
      form);
}

}  // namespace circinv::closed_form
