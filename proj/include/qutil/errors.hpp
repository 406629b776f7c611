// SPDX-License-Identifier: MIT

#pragma once

#include <stdexcept>
#include <string>

namespace qutil {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid user-facing configuration (bad flags, malformed grids, bad topology
/// dimensions). The CLI maps these to exit status 1.
class ConfigError : public Error {
public:
  using Error::Error;
};

class ParameterArityError : public Error {
public:
  using Error::Error;
};

class UnsupportedTranslationError : public Error {
public:
  using Error::Error;
};

class UnsupportedGateError : public Error {
public:
  using Error::Error;
};

class IndexError : public Error {
public:
  using Error::Error;
};

/// A circuit or matrix does not fit the target (architecture or verifier).
class CapacityError : public Error {
public:
  using Error::Error;
};

/// Results from different sweeps were mixed together.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

/// A transpiled circuit broke connectivity or basis purity.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

class RenderError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace qutil
