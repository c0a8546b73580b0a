#pragma once

#include <stdexcept>
#include <string>

namespace lcinterp {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Degree pair (m, n) with gcd(m, n) != 1.
class CoprimalityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two constructions that must agree did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Input data unusable (non-finite samples, nonpositive errors in a fit).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Quadrature refinement did not meet its tolerance.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// Requested computation is not supported on the chosen path.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcinterp
