#include <cmath>
#include <string>

#include "circinv/error.hpp"
#include "circinv/forms.hpp"

namespace circinv::closed_form {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_order(std::size_t n) {
  if (n < 3) throw DomainError("structured forms need n >= 3");
}

std::vector<double> alternating_row(const AlternatingPattern& f) {
  const std::size_t n = f.n;
  const double a = f.a, b = f.b;
  std::vector<double> row(n);
  switch (f.family) {
    case 1:
      if (n % 4 != 1) throw DomainError("alternating family 1 needs n = 1 mod 4");
      for (std::size_t j = 0; j < n; ++j) row[j] = (j % 4 < 2 || j == n - 1) ? a : b;
      break;
    case 2:
      if (n % 4 != 2) throw DomainError("alternating family 2 needs n = 2 mod 4");
      for (std::size_t j = 0; j < n; ++j) row[j] = j % 2 == 0 ? 0.5 * (a + b) : (j % 4 == 1 ? a : b);
      break;
    case 3:
      if (n % 4 != 3) throw DomainError("alternating family 3 needs n = 3 mod 4");
      row[0] = b;
      for (std::size_t j = 1; j < n; ++j) row[j] = ((j - 1) / 2) % 2 == 0 ? a : b;
      break;
    case 4:
      if (n % 2 == 0) throw DomainError("alternating family 4 needs odd n");
      for (std::size_t j = 1; j <= n; ++j) {
        const double sign = j % 2 == 1 ? 1.0 : -1.0;
        row[j - 1] = a + sign * (static_cast<double>(n) + 2.0 - 2.0 * static_cast<double>(j)) * b;
      }
      break;
    default:
      throw DomainError("alternating family must be 1, 2, 3 or 4");
  }
  return row;
}

class Matcher {
 public:
  explicit Matcher(const CirculantVector& a) : a_(a), tol_(1e-12 * a.max_abs()) {}

  bool same(double x, double y) const { return std::abs(x - y) <= tol_; }
  bool zero(double x) const { return std::abs(x) <= tol_; }

  bool matches(const std::vector<double>& row) const {
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!same(a_[j], row[j])) return false;
    return true;
  }

 private:
  const CirculantVector& a_;
  double tol_;
};

}  // namespace

std::string kind_name(const StructuredForm& form) {
  return std::visit(overloaded{
                        [](const ThreeParamRow&) { return "3param"; },
                        [](const SymThreeParam&) { return "sym3"; },
                        [](const Geometric&) { return "geometric"; },
                        [](const Arithmetic&) { return "arithmetic"; },
                        [](const TridiagSym&) { return "tridiag"; },
                        [](const QuadraticPattern&) { return "quadratic"; },
                        [](const AlternatingPattern&) { return "alternating"; },
                        [](const CycleSchrodinger&) { return "cycle"; },
                    },
                    form);
}

std::size_t order(const StructuredForm& form) {
  return std::visit([](const auto& f) { return f.n; }, form);
}

CirculantVector generate(const StructuredForm& form) {
  const std::size_t n = order(form);
  require_order(n);
  std::vector<double> row(n, 0.0);
  std::visit(overloaded{
                 [&](const ThreeParamRow& f) {
                   row.assign(n, f.c);
                   row[0] = f.a;
                   row[1] = f.b;
                 },
                 [&](const SymThreeParam& f) {
                   row.assign(n, f.c);
                   row[0] = f.a;
                   row[1] = f.b;
                   row[n - 1] = f.b;
                 },
                 [&](const Geometric& f) {
                   double p = f.a;
                   for (std::size_t j = n; j-- > 0;) {
                     row[j] = p;
                     p *= f.r;
                   }
                 },
                 [&](const Arithmetic& f) {
                   for (std::size_t j = 0; j < n; ++j) row[j] = f.a + static_cast<double>(j) * f.b;
                 },
                 [&](const TridiagSym& f) {
                   row[0] = f.a;
                   row[1] = f.b;
                   row[n - 1] = f.b;
                 },
                 [&](const QuadraticPattern& f) {
                   for (std::size_t j = 0; j < n; ++j) {
                     const double jj = static_cast<double>(j);
                     row[j] = f.a + jj * f.b * (static_cast<double>(n) - jj);
                   }
                 },
                 [&](const AlternatingPattern& f) { row = alternating_row(f); },
                 [&](const CycleSchrodinger& f) {
                   row[0] = 2.0 * f.q;
                   row[1] = -1.0;
                   row[n - 1] = -1.0;
                 },
             },
             form);
  return CirculantVector(std::move(row));
}

std::optional<StructuredForm> detect_structure(const CirculantVector& a) {
  const std::size_t n = a.size();
  if (n < 3) return std::nullopt;
  const Matcher m(a);

  auto tail_equals = [&](std::size_t from, std::size_t to, double value) {
    for (std::size_t j = from; j < to; ++j)
      if (!m.same(a[j], value)) return false;
    return true;
  };

  const double b = a[1];
  if (!m.zero(b) && m.same(a[n - 1], b) && tail_equals(2, n - 1, 0.0))
    return TridiagSym{a[0], b, n};

  if (n >= 4 && m.same(a[n - 1], b) && !m.same(a[2], b) && tail_equals(2, n - 1, a[2]))
    return SymThreeParam{a[0], b, a[2], n};

  if (tail_equals(2, n, a[2])) return ThreeParamRow{a[0], b, a[2], n};

  if (!m.zero(a[n - 1])) {
    const Geometric g{a[n - 1], a[n - 2] / a[n - 1], n};
    if (m.matches(generate(g).values())) return g;
  }

  const Arithmetic ar{a[0], a[1] - a[0], n};
  if (m.matches(generate(ar).values())) return ar;

  const QuadraticPattern qp{a[0], (a[1] - a[0]) / static_cast<double>(n - 1), n};
  if (m.matches(generate(qp).values())) return qp;

  std::vector<AlternatingPattern> candidates;
  if (n % 4 == 1) candidates.push_back({1, a[0], a[2], n});
  if (n % 4 == 2 && n >= 6) candidates.push_back({2, a[1], a[3], n});
  if (n % 4 == 3) candidates.push_back({3, a[1], a[0], n});
  if (n % 2 == 1) {
    const double bb = (a[0] - a[1]) / (2.0 * static_cast<double>(n) - 2.0);
    candidates.push_back({4, a[0] - static_cast<double>(n) * bb, bb, n});
  }
  for (const auto& c : candidates)
    if (m.matches(generate(c).values())) return c;

  return std::nullopt;
}

}  // namespace circinv::closed_form
