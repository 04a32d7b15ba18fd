#pragma once

#include <stdexcept>
#include <string>

namespace kplab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched caps, missing parameters, unknown keys.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An exponent fell off the configured lattice (1/M)Z, or a fractional power
/// has no exact rational value.
class LatticeError : public Error {
 public:
  using Error::Error;
};

class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

/// q^k = 1 in a c-vector denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A grid-backed coefficient was used outside its validity window, or a
/// computation left no valid grid point.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// Operation not available for this coefficient backend (e.g. d/ds on
/// sampled data).
class UnsupportedBackendError : public Error {
 public:
  using Error::Error;
};

/// tau(s-1, t) has zero constant term at some grid point.
class SingularPointError : public Error {
 public:
  using Error::Error;
};

}  // namespace kplab
