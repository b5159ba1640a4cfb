#pragma once

#include <map>
#include <vector>

#include "flopwall/geometry.hpp"

namespace flopwall::hypergeom {

using flopgeom::FixedPointLabel;
using flopgeom::FlopConfig;
using flopgeom::Side;
using flopgeom::WeightPoint;
using numkernel::Complex;

/// Truncated series sum_e c_e q^{a+e}. Evaluated only through w = log q.
struct OffsetSeries {
  Complex offset = 0.0;
  std::map<int, Complex> coeffs;
  int order = 0;

  Complex coefficient(int e) const;
  Complex evaluate(Complex w) const;
};

/// Truncated series in r variables, sum_e c_e prod_k q_k^{a_k+e_k}, with a
/// multiplicative prefactor kept apart from the coefficients.
struct MultiOffsetSeries {
  std::vector<Complex> offsets;
  std::map<std::vector<int>, Complex> coeffs;
  int order = 0;  ///< per-variable truncation
  Complex prefactor = 1.0;

  int nvars() const { return static_cast<int>(offsets.size()); }
  Complex coefficient(const std::vector<int>& e) const;
  /// Set all q_k = q; keeps total degree <= order so the result is complete. Prefactor not applied.
  OffsetSeries specialize() const;
};

/// prod_j 1/Gamma(1 + (x_d - x_j)/2pi i + e) 1/Gamma(1 + (z_j - x_d)/2pi i - e) on the plus side,
/// prod_j 1/Gamma(1 + (z_d - x_j)/2pi i - e) 1/Gamma(1 + (z_j - z_d)/2pi i + e) on the minus side.
Complex gamma_block(const FlopConfig& cfg, Side side, int d, int e, const WeightPoint& p);

/// K-part of the H-function at a fixed point (beta = 0), weights taken from p.
/// Plus side offsets x_{delta_k}/2 pi i, minus side -z_{delta_k}/2 pi i.
MultiOffsetSeries h_series(const FlopConfig& cfg, Side side, const std::vector<int>& delta, int order,
                           const WeightPoint& p);
MultiOffsetSeries h_series(const FlopConfig& cfg, Side side, const FixedPointLabel& delta, int order);

/// Single-variable factor f_{delta,k}; includes the (-1)^{(r-1)e} twist.
OffsetSeries f_factor_series(const FlopConfig& cfg, Side side, const std::vector<int>& delta, int k, int order,
                             const WeightPoint& p);
OffsetSeries f_factor_series(const FlopConfig& cfg, const FixedPointLabel& delta, int k, int order);

MultiOffsetSeries tensor_product(const std::vector<OffsetSeries>& factors);

/// prod_k prod_{i<k} (-d_k + d_i), with d_k acting as multiplication by (a_k + e_k).
MultiOffsetSeries delta_hat_apply(const MultiOffsetSeries& s);

struct OdeResidual {
  double max_relative = 0.0;
  int worst_index = -1;
};

/// Applies prod_j(d - x_j/2pi i) - s q prod_j(d - z_j/2pi i) (plus side) or
/// prod_j(d + z_j/2pi i) - s q prod_j(d + x_j/2pi i) (minus side), s = (-1)^{n-r+1},
/// and reports the largest relative coefficient residual for 1 <= e <= order.
OdeResidual ode_check(const OffsetSeries& series, const FlopConfig& cfg, Side side, const WeightPoint& p);
OdeResidual ode_check(const OffsetSeries& series, const FlopConfig& cfg, Side side);

}  // namespace flopwall::hypergeom
