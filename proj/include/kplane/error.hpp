#pragma once

#include <stdexcept>
#include <string>

namespace kplane {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid dimensions, counts, exponents or other arguments.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The input lies outside the class an operation can handle
/// (e.g. power-decay fields whose plane integrals may diverge).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

/// A fitted quantity is undefined (log of zero, 0/0 ratios).
class UndefinedResult : public Error {
 public:
  using Error::Error;
};

/// Least-squares fit with fewer samples than required.
class UnderdeterminedFit : public Error {
 public:
  using Error::Error;
};

/// The candidate family was empty after filtering.
class NoEstimate : public Error {
 public:
  using Error::Error;
};

/// A witness or function failed admissibility.
class NotAdmissible : public Error {
 public:
  using Error::Error;
};

/// Malformed or invalid run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace kplane
