#pragma once

#include <string>
#include <vector>

#include "flopwall/rational.hpp"
#include "flopwall/special.hpp"

namespace flopwall::flopgeom {

using numkernel::Complex;
using numkernel::Rational;

enum class Side { minus, plus };

std::string to_string(Side s);
Side other(Side s);

/// Integer linear form on the 2n equivariant parameters, ordered (x_1..x_n, z_1..z_n).
using Weight = std::vector<int>;

/// Numeric values of the 2n parameters, same ordering as Weight.
using WeightPoint = std::vector<Complex>;

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
bool is_zero(const Weight& w);

/// Evaluate a linear form at a numeric point.
Complex evaluate(const Weight& w, const WeightPoint& p);

/// Multiply every coordinate of a point by s.
WeightPoint scaled(const WeightPoint& p, Complex s);

/// Instance data of a Grassmann flop over a point: n, r and generic weights.
/// x_i stands for c_1(L_i^vee), z_i for c_1(M_i^vee).
class FlopConfig {
 public:
  /// Throws ConfigError unless 1 <= r < n and all x_i - x_j, z_i - z_j, x_i - z_j are nonzero.
  FlopConfig(int n, int r, std::vector<Rational> x, std::vector<Rational> z);

  int n() const { return n_; }
  int r() const { return r_; }
  /// Complex dimension 2rn - r^2 of either side.
  int dim() const { return 2 * r_ * n_ - r_ * r_; }

  const std::vector<Rational>& x() const { return x_; }
  const std::vector<Rational>& z() const { return z_; }

  Weight wx(int i) const;  ///< the form x_i (0-based)
  Weight wz(int i) const;  ///< the form z_i (0-based)
  Weight zero_weight() const { return Weight(2 * n_, 0); }

  Rational evaluate_exact(const Weight& w) const;
  Complex evaluate(const Weight& w) const { return flopgeom::evaluate(w, point_); }

  const WeightPoint& point() const { return point_; }
  std::vector<Rational> rational_point() const;

 private:
  int n_, r_;
  std::vector<Rational> x_, z_;
  WeightPoint point_;
};

/// The exchange x_i -> -z_i, z_i -> -x_i relating the two sides of the flop.
Weight flop_involution(const Weight& w, int n);

}  // namespace flopwall::flopgeom
