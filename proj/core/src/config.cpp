#include "flopwall/config.hpp"

#include <stdexcept>

#include "flopwall/errors.hpp"

namespace flopwall::flopgeom {

std::string to_string(Side s) { return s == Side::plus ? "plus" : "minus"; }
Side other(Side s) { return s == Side::plus ? Side::minus : Side::plus; }

Weight operator+(const Weight& a, const Weight& b) {
  Weight out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Weight operator-(const Weight& a) {
  Weight out(a);
  for (auto& v : out) v = -v;
  return out;
}

bool is_zero(const Weight& w) {
  for (int v : w)
    if (v) return false;
  return true;
}

Complex evaluate(const Weight& w, const WeightPoint& p) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) s += static_cast<double>(w[i]) * p[i];
  return s;
}

WeightPoint scaled(const WeightPoint& p, Complex s) {
  WeightPoint out(p);
  for (auto& v : out) v *= s;
  return out;
}

FlopConfig::FlopConfig(int n, int r, std::vector<Rational> x, std::vector<Rational> z)
    : n_(n), r_(r), x_(std::move(x)), z_(std::move(z)) {
  if (r_ < 1 || n_ <= r_) throw ConfigError("need 1 <= r < n");
  if (static_cast<int>(x_.size()) != n_ || static_cast<int>(z_.size()) != n_)
    throw ConfigError("expected n values for each of x and z");
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i != j && x_[i] == x_[j]) throw ConfigError("non-generic weights: x values coincide");
      if (i != j && z_[i] == z_[j]) throw ConfigError("non-generic weights: z values coincide");
      if (x_[i] == z_[j]) throw ConfigError("non-generic weights: some x_i equals some z_j");
    }
  point_.reserve(2 * n_);
  for (const auto& v : x_) point_.emplace_back(v.to_double(), 0.0);
  for (const auto& v : z_) point_.emplace_back(v.to_double(), 0.0);
}

Weight FlopConfig::wx(int i) const {
  Weight w(2 * n_, 0);
  w.at(i) = 1;
  return w;
}

Weight FlopConfig::wz(int i) const {
  Weight w(2 * n_, 0);
  w.at(n_ + i) = 1;
  return w;
}

Rational FlopConfig::evaluate_exact(const Weight& w) const {
  Rational s(0);
  for (int i = 0; i < n_; ++i) {
    if (w[i]) s += Rational(w[i]) * x_[i];
    if (w[n_ + i]) s += Rational(w[n_ + i]) * z_[i];
  }
  return s;
}

std::vector<Rational> FlopConfig::rational_point() const {
  std::vector<Rational> out(x_);
  out.insert(out.end(), z_.begin(), z_.end());
  return out;
}

Weight flop_involution(const Weight& w, int n) {
  Weight out(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    out[n + i] = -w[i];
    out[i] = -w[n + i];
  }
  return out;
}

}  // namespace flopwall::flopgeom
