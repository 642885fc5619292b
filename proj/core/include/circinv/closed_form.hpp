#pragma once

// O(n) invertibility tests and inverses for the structured circulant families.
//
// Every InverseResult row is the first row of the inverse matrix, so
// multiply(generate(form), result.row) == unit.

#include <cstddef>
#include <span>
#include <vector>

#include "circinv/circulant.hpp"
#include "circinv/forms.hpp"
#include "circinv/results.hpp"

namespace circinv::closed_form {

/// Certificate for Circ(a,b,c,...,c): nonzero iff
/// [a + b + (n-2)c] * [(a-b)^2 + (1 - (-1)^n)(c-b)^2] != 0.
///
/// Normalized by s = max(1,|a|,|b|,|c|): the row-sum factor by n*s, the
/// quadratic factor by its square root over s.
InvertCertificate check_invertible_3param(const ThreeParamRow& f,
                                          double tolerance = kSingularTolerance);

/// Generic branch via q = (a-c)/(c-b); a = 2c - b uses the
/// arithmetic-sequence branch; c = b uses the diagonal-plus-J form.
InverseResult inverse_3param(const ThreeParamRow& f, double tolerance = kSingularTolerance);

/// Certificate for Circ(a,b,c,...,c,b): nonzero iff
/// (a + 2b + (n-3)c) * prod_{j=1}^{ceil((n-1)/2)} [a - c + 2(b-c) cos(2 pi j/n)] != 0.
/// Rows with c = b are certified as ThreeParamRow(a, b, b).
InvertCertificate check_invertible_sym3(const SymThreeParam& f,
                                        double tolerance = kSingularTolerance);

/// Generic branch via q = (c-a)/(2(b-c)); a = 3c - 2b uses the
/// cycle-Green branch; c = b delegates to inverse_3param.
InverseResult inverse_sym3(const SymThreeParam& f, double tolerance = kSingularTolerance);

/// Inverse row (r, -1, 0, ..., 0) / (a (r^n - 1)).
InvertCertificate check_invertible_geometric(const Geometric& f,
                                             double tolerance = kSingularTolerance);
InverseResult inverse_geometric(const Geometric& f, double tolerance = kSingularTolerance);

/// 2/(n^2 (2a + (n-1)b)) J - 1/(nb) Circ(1, -1, 0, ..., 0).
InvertCertificate check_invertible_arithmetic(const Arithmetic& f,
                                              double tolerance = kSingularTolerance);
InverseResult inverse_arithmetic(const Arithmetic& f, double tolerance = kSingularTolerance);

/// Inverse of Circ(2q, -1, 0, ..., 0, -1): w(q) / (2 (T_n(q) - 1)).
InvertCertificate check_invertible_cycle(double q, std::size_t n,
                                         double tolerance = kSingularTolerance);
InverseResult cycle_green(double q, std::size_t n, double tolerance = kSingularTolerance);

/// Symmetric tridiagonal circulant (a, b, 0, ..., 0, b), b != 0.
InvertCertificate check_invertible_tridiag(const TridiagSym& f,
                                           double tolerance = kSingularTolerance);
InverseResult inverse_tridiag_sym(const TridiagSym& f, double tolerance = kSingularTolerance);

/// 6/(n^2 (6a + b(n^2-1))) J - 1/(2nb) Circ(2, -1, 0, ..., 0, -1).
InvertCertificate check_invertible_quadratic(const QuadraticPattern& f,
                                             double tolerance = kSingularTolerance);
InverseResult inverse_quadratic_pattern(const QuadraticPattern& f,
                                        double tolerance = kSingularTolerance);

/// Families 1-3: 1/(a-b) Circ(0,1,0,...,0,1) - 2(a+b)/((a-b)(a(n+1)+b(n-1))) J.
/// Family 4:     1/(4b) Circ(2,1,0,...,0,1) - a/(b(an+b)) J.
InvertCertificate check_invertible_alternating(const AlternatingPattern& f,
                                               double tolerance = kSingularTolerance);
InverseResult inverse_alternating_pattern(const AlternatingPattern& f,
                                          double tolerance = kSingularTolerance);

/// Dispatch on the form.
InvertCertificate certify(const StructuredForm& form, double tolerance = kSingularTolerance);
InverseResult invert(const StructuredForm& form, double tolerance = kSingularTolerance);

}  // namespace circinv::closed_form
