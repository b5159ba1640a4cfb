#pragma once

// Reference implementations kept independent of the library code paths.

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

/// Lanczos approximation (g = 7, 9 terms) with reflection; about 15 digits.
inline Complex gamma(Complex s) {
  static const double c[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                             771.32342877765313,   -176.61502916214059,   12.507343278686905,
                             -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  const double pi = 3.14159265358979323846;
  if (s.real() < 0.5) return pi / (std::sin(pi * s) * gamma(1.0 - s));
  s -= 1.0;
  Complex x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (s + double(i));
  Complex t = s + 7.5;
  return std::sqrt(2 * pi) * std::pow(t, s + 0.5) * std::exp(-t) * x;
}

inline double rel(Complex a, Complex b) {
  double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

}  // namespace oracle
