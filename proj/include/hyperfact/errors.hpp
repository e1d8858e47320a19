#pragma once

#include <stdexcept>
#include <string>

namespace hyperfact {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series specification is malformed: no terminating parameter, or a
/// denominator factor vanishes inside the summation range.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// A closed-form right-hand side divides by a vanishing shifted factorial.
class PoleInRHS : public Error {
 public:
  using Error::Error;
};

/// The monic normalization constant of a polynomial family vanishes.
class PoleInNormalization : public Error {
 public:
  using Error::Error;
};

/// Expanding a factorization did not reproduce the polynomial it describes.
class FactorizationMismatch : public Error {
 public:
  using Error::Error;
};

/// A claimed zero did not evaluate to exactly zero.
class ZeroCheckFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperfact
