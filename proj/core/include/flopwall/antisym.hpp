#pragma once

#include <cstdint>
#include <vector>

#include "flopwall/multipoly.hpp"

namespace flopwall::wallcross {

using numkernel::MultiPoly;
using numkernel::Rational;

// Variables are ordered x_1..x_r, z_1..z_r.

/// prod_i prod_{l<i} (z_i - z_l)(x_l - x_i)
MultiPoly antisym_lhs(int r);
/// sum_sigma sgn(sigma) prod_l prod_{j != sigma(l)} (x_j - z_l)
MultiPoly antisym_rhs(int r);

Rational antisym_lhs_value(int r, const std::vector<Rational>& x, const std::vector<Rational>& z);
Rational antisym_rhs_value(int r, const std::vector<Rational>& x, const std::vector<Rational>& z);

struct AntisymReport {
  int r = 0;
  int samples = 0;
  int sample_failures = 0;
  bool symbolic_checked = false;
  bool symbolic_equal = false;
  bool leading_coefficient_ok = false;
  bool pass() const {
    return sample_failures == 0 && (!symbolic_checked || (symbolic_equal && leading_coefficient_ok));
  }
};

/// Exact check at random rational points; symbolic expansion as well when r <= symbolic_max_r.
AntisymReport antisym_identity_check(int r, int samples, std::uint64_t seed, int symbolic_max_r = 4);

}  // namespace flopwall::wallcross
