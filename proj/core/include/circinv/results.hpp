#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circinv/circulant.hpp"

namespace circinv {

/// Scale-normalized factors below this are treated as zero.
inline constexpr double kSingularTolerance = 1e-10;

/// Invertibility verdict with its distance from singularity.
///
/// `margin` is the smallest normalized factor whose non-vanishing the
/// producing criterion requires; `witness` names that factor.
struct InvertCertificate {
  bool invertible = false;
  double margin = 0.0;
  std::string witness;

  static InvertCertificate from_margin(double margin, std::string witness,
                                       double tolerance = kSingularTolerance) {
    return {margin > tolerance, margin, std::move(witness)};
  }
};

/// First row of an inverse circulant together with how it was obtained.
struct InverseResult {
  CirculantVector row;
  std::string method;
  InvertCertificate certificate;
};

struct ConstraintCheck {
  double target = 0.0;
  double achieved = 0.0;
};

/// Solution of a (possibly singular) circulant system.
struct SolveReport {
  std::vector<double> solution;
  double residual = 0.0;  ///< max-norm of Circ(a) h - v
  std::optional<ConstraintCheck> constraint;
  std::optional<double> alpha;  ///< free parameter when the solutions form a line
};

}  // namespace circinv
