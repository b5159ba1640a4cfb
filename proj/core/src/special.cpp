#include "flopwall/special.hpp"

#include <array>
#include <cmath>
#include <string>

#include "flopwall/errors.hpp"

namespace flopwall::numkernel {

namespace {

// B_{2k} / (2k (2k-1)) for k = 1..10.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

constexpr double kShiftTarget = 15.0;

Complex stirling(Complex s) {
  const double half_log_2pi = 0.5 * std::log(2.0 * kPi);
  Complex inv = 1.0 / s, inv2 = inv * inv;
  Complex corr = 0.0, p = inv;
  for (double c : kStirling) {
    corr += c * p;
    p *= inv2;
  }
  return (s - 0.5) * std::log(s) - s + half_log_2pi + corr;
}

}  // namespace

bool near_nonpositive_integer(Complex s) {
  double k = std::round(s.real());
  return k <= 0.0 && std::abs(s - Complex(k, 0.0)) < kPoleTolerance;
}

Complex log_gamma(Complex s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw std::domain_error("log_gamma: non-finite argument");
  if (near_nonpositive_integer(s))
    throw PoleError("log_gamma: pole at s = " + std::to_string(s.real()));
  // Recurrence upward with principal logs keeps the principal branch.
  Complex shift = 0.0;
  while (s.real() < kShiftTarget) {
    shift += std::log(s);
    s += 1.0;
  }
  return stirling(s) - shift;
}

Complex sin_pi(Complex s) {
  double k = std::round(s.real());
  Complex v = std::sin(kPi * (s - k));
  return (static_cast<long long>(k) % 2 == 0) ? v : -v;
}

Complex recip_gamma(Complex s) {
  if (near_nonpositive_integer(s)) return 0.0;
  if (s.real() < 0.5) return sin_pi(s) * std::exp(log_gamma(1.0 - s)) / kPi;
  return std::exp(-log_gamma(s));
}

Complex gamma(Complex s) {
  if (near_nonpositive_integer(s)) throw PoleError("gamma: pole at s = " + std::to_string(s.real()));
  if (s.real() < 0.5) return kPi / (sin_pi(s) * std::exp(log_gamma(1.0 - s)));
  return std::exp(log_gamma(s));
}

Complex sin_over_2i(Complex a) { return Complex(0.0, -1.0) * std::sinh(0.5 * a); }

}  // namespace flopwall::numkernel
