#pragma once

#include <stdexcept>
#include <string>

namespace entpow {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input shapes or arguments supplied by the caller.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};
class IndexError : public Error {
 public:
  using Error::Error;
};
class OutOfRange : public Error {
 public:
  using Error::Error;
};
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A numerical precondition or invariant did not hold.
class NumericalError : public Error {
 public:
  using Error::Error;
};
class NotHermitian : public NumericalError {
 public:
  using NumericalError::NumericalError;
};
class NotPSD : public NumericalError {
 public:
  using NumericalError::NumericalError;
};
class NotUnitary : public NumericalError {
 public:
  using NumericalError::NumericalError;
};
class BinOverflow : public NumericalError {
 public:
  using NumericalError::NumericalError;
};
class EmptyReference : public NumericalError {
 public:
  using NumericalError::NumericalError;
};
class NonPositiveWidth : public NumericalError {
 public:
  using NumericalError::NumericalError;
};
class InvariantViolation : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace entpow
