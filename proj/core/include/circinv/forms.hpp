#pragma once

// Parametric circulant families with closed-form inverses.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "circinv/circulant.hpp"

namespace circinv::closed_form {

/// (a, b, c, ..., c)
struct ThreeParamRow {
  double a = 0, b = 0, c = 0;
  std::size_t n = 3;
};

/// (a, b, c, ..., c, b)
struct SymThreeParam {
  double a = 0, b = 0, c = 0;
  std::size_t n = 3;
};

/// (a r^{n-1}, ..., a r, a)
struct Geometric {
  double a = 0, r = 0;
  std::size_t n = 3;
};

/// (a, a + b, ..., a + (n-1) b)
struct Arithmetic {
  double a = 0, b = 0;
  std::size_t n = 3;
};

/// (a, b, 0, ..., 0, b)
struct TridiagSym {
  double a = 0, b = 0;
  std::size_t n = 3;
};

/// entries a + j b (n - j), j = 0..n-1
struct QuadraticPattern {
  double a = 0, b = 0;
  std::size_t n = 3;
};

/// The four two-valued families:
///   1: (a,a,b,b,a,a,...,b,b,a)                 n = 1 mod 4
///   2: ((a+b)/2,a,(a+b)/2,b,...,(a+b)/2,a)     n = 2 mod 4
///   3: (b,a,a,b,b,...,a,a)                     n = 3 mod 4
///   4: a + (-1)^{j-1} (n + 2 - 2j) b, j=1..n   n odd
struct AlternatingPattern {
  int family = 1;
  double a = 0, b = 0;
  std::size_t n = 5;
};

/// (2q, -1, 0, ..., 0, -1): Schrodinger operator on the n-cycle.
struct CycleSchrodinger {
  double q = 0;
  std::size_t n = 3;
};

using StructuredForm = std::variant<ThreeParamRow, SymThreeParam, Geometric, Arithmetic, TridiagSym,
                                    QuadraticPattern, AlternatingPattern, CycleSchrodinger>;

/// Short tag: "3param", "sym3", "geometric", "arithmetic", "tridiag",
/// "quadratic", "alternating", "cycle".
std::string kind_name(const StructuredForm& form);

std::size_t order(const StructuredForm& form);

/// Expands a form into its first row. Throws DomainError on an invalid
/// order or an alternating family whose residue does not match n.
CirculantVector generate(const StructuredForm& form);

/// Recognizes a row, in priority order TridiagSym, SymThreeParam,
/// ThreeParamRow, Geometric, Arithmetic, QuadraticPattern,
/// AlternatingPattern, using relative tolerance 1e-12 on the entries.
/// CycleSchrodinger rows are reported as TridiagSym(2q, -1).
std::optional<StructuredForm> detect_structure(const CirculantVector& a);

}  // namespace circinv::closed_form
