#pragma once

#include <stdexcept>
#include <string>

namespace nk {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Matrix/block shape mismatch.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input value (bad Cayley table, non-closed complex, bad JSON shape, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation (e.g. chi >= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A stated precondition does not hold (degenerate linear part, factor not
/// unfactorizable, perturbation outside the amplitude guard, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An automorphism of a product could not be split into per-factor data.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

/// det(I - A) = 0 where a non-degenerate map is required.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A fixed point class label could not be rounded to an integer vector.
class LabelError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded.
class CapError : public Error {
 public:
  using Error::Error;
};

}  // namespace nk
