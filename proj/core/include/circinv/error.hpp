#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace circinv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input shapes that do not fit together (vector lengths, empty rows).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the parameters of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The matrix is singular (or singular to working precision).
///
/// `witness()` names the vanishing factor, eigenvalue index or pivot.
class SingularError : public Error {
 public:
  SingularError(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// A dense O(n^2) path was requested above the configured size cap.
class CapError : public Error {
 public:
  CapError(std::size_t n, std::size_t cap)
      : Error("dense materialization too large: n=" + std::to_string(n) +
              " exceeds cap " + std::to_string(cap)),
        n_(n),
        cap_(cap) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

/// A singular system whose right-hand side violates the compatibility condition.
class IncompatibleError : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace circinv
