#pragma once

#include <stdexcept>
#include <string>

namespace serre {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Rational map evaluated at a zero of its denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

class SingularCurve : public Error {
 public:
  using Error::Error;
};

class BadReduction : public Error {
 public:
  using Error::Error;
};

class UnsupportedPrime : public Error {
 public:
  using Error::Error;
};

/// No prime of good reduction in the requested witness window.
class EmptyScan : public Error {
 public:
  using Error::Error;
};

/// Surjectivity was requested for a curve with complex multiplication.
class CmCurve : public Error {
 public:
  using Error::Error;
};

/// A claimed trace lies outside the Hasse-Weil interval.
class EnvelopeViolation : public Error {
 public:
  using Error::Error;
};

class CacheMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace serre
