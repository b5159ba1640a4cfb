#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flopwall/config.hpp"

namespace flopwall::cli {

using flopgeom::FlopConfig;
using numkernel::Complex;
using numkernel::Rational;

inline constexpr const char* kVersion = "0.3.0";
inline constexpr int kConfigSchemaVersion = 1;

struct PathParams {
  double q_in = 0.3;
  double q_out = 3.0;
  double re_max = 2.0;
  int samples = 9;
};

struct RunConfig {
  int n = 2;
  int r = 1;
  // Either explicit weights or a seed; the seed is always recorded.
  std::optional<std::vector<Rational>> x, z;
  std::uint64_t seed = 1;
  Rational scale{1, 10};
  Complex z_eval{2.0, 0.0};
  int order = 40;
  std::map<std::string, double> tol;
  PathParams path;
  std::string suite = "all";
  unsigned workers = 0;  ///< 0 picks the hardware concurrency

  /// Tolerance for a suite, falling back to the built-in default.
  double tolerance(const std::string& suite_name) const;
  /// Builds and validates the FlopConfig; throws ConfigError.
  FlopConfig flop_config() const;
  /// Canonical JSON echo, keys sorted.
  std::string echo_json() const;
};

double default_tolerance(const std::string& suite_name);

/// Parses the JSON config format. Throws ConfigError on malformed input or
/// non-generic weights.
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);

/// Random weights p/q * scale with p in [-50, 50], q in [1, 50], redrawn until generic.
FlopConfig random_config(int n, int r, std::uint64_t seed, const Rational& scale = Rational(1, 10));

}  // namespace flopwall::cli
