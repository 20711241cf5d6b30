#pragma once

#include <stdexcept>
#include <string>

namespace mcat {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Composition attempted between morphisms whose objects do not line up.
class ComposeError : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different monoidal instances.
class InstanceError : public Error {
 public:
  using Error::Error;
};

/// Matrix or split dimensions do not match the requested operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a hard size cap (search space or parse-time dimension cap).
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Matrix is numerically singular. Carries the offending smallest singular value.
class SingularMatrixError : public Error {
 public:
  SingularMatrixError(const std::string& message, double sigma_min)
      : Error(message), sigma_min_(sigma_min) {}
  double sigma_min() const noexcept { return sigma_min_; }

 private:
  double sigma_min_;
};

/// Coupling measure requested for the zero operator.
class UndefinedMeasureError : public Error {
 public:
  using Error::Error;
};

/// State vector is not normalized.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// State embedding/extraction misuse: wrong instance, unknown point, or a
/// morphism whose domain is not the unit object.
class StateError : public Error {
 public:
  using Error::Error;
};

/// Supplied witness isomorphisms are not invertible or have the wrong endpoints.
class WitnessError : public Error {
 public:
  using Error::Error;
};

/// Sampling bounds violate the instance's size caps.
class SampleSpecError : public Error {
 public:
  using Error::Error;
};

/// Document text failed to parse or validate; the message names the offending path.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Unknown names, commands, or invalid flag combinations.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcat
