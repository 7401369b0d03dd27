#pragma once

#include <stdexcept>
#include <string>

namespace dcsit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Topology / CSIT configuration rejected by validate().
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A regression or exponent fit was asked for with too few usable points.
class InsufficientPoints : public Error {
 public:
  using Error::Error;
};

/// A transmit plan would exceed the per-TX power constraint.
class PowerInfeasible : public Error {
 public:
  using Error::Error;
};

/// Malformed or incomplete configuration file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace dcsit
