#pragma once

#include <stdexcept>
#include <string>

namespace bihom {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Matrix inversion or solving hit a singular matrix.
struct SingularMatrix : Error {
  SingularMatrix() : Error("singular matrix") {}
};

/// Operand shapes do not match.
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what)
      : Error("dimension mismatch: " + what) {}
};

/// A spanning-set argument was expected to be linearly independent.
struct DependentSpanInput : Error {
  DependentSpanInput() : Error("spanning set is linearly dependent") {}
};

/// The chosen element is not fixed by both structure maps.
struct NotFixedPoint : Error {
  NotFixedPoint() : Error("element is not a common fixed point of alpha and beta") {}
};

/// The algebra's structure maps are not both invertible.
struct NotRegular : Error {
  NotRegular() : Error("algebra is not regular (alpha or beta not invertible)") {}
};

/// A named operation precondition does not hold for the given input.
struct PreconditionFailed : Error {
  std::string condition;
  explicit PreconditionFailed(const std::string& cond)
      : Error("precondition failed: " + cond), condition(cond) {}
};

/// Input file could not be parsed.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

/// The complement produced by the greedy basis extension could not be made
/// isotropic (obstructed cross pairing).
struct NoIsotropicComplement : Error {
  NoIsotropicComplement() : Error("no isotropic complement found for the ideal") {}
};

}  // namespace bihom
