#pragma once

#include <stdexcept>
#include <string>

namespace flopwall {

/// Raised when a Gamma-type evaluation lands on (or within 1e-12 of) a pole.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A localization denominator vanished; the configuration is not generic.
struct DegenerateWeight : std::domain_error {
  using std::domain_error::domain_error;
};

/// Quadrature could not reach its tolerance within the allowed window.
struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid run configuration.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A report or config file could not be read or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace flopwall
