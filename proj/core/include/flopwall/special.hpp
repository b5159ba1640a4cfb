#pragma once

#include <complex>
#include <numbers>

namespace flopwall::numkernel {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kTwoPiI{0.0, 2.0 * std::numbers::pi};

/// Distance within which an argument counts as a non-positive integer.
inline constexpr double kPoleTolerance = 1e-12;

/// True when s lies within kPoleTolerance of {0, -1, -2, ...}.
bool near_nonpositive_integer(Complex s);

/// Principal branch of log Gamma. Throws PoleError at non-positive integers.
Complex log_gamma(Complex s);

/// 1/Gamma(s); exactly zero at non-positive integers.
Complex recip_gamma(Complex s);

/// Gamma(s). Throws PoleError at non-positive integers.
Complex gamma(Complex s);

/// sin(a/(2i)), evaluated as -i sinh(a/2).
Complex sin_over_2i(Complex a);

/// sin(pi s) with the argument reduced modulo 2 before evaluation.
Complex sin_pi(Complex s);

}  // namespace flopwall::numkernel
