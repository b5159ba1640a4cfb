#include "flopwall/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "flopwall/errors.hpp"

namespace flopwall::hypergeom {

using numkernel::kPi;
using numkernel::kTwoPiI;
using numkernel::recip_gamma;
using numkernel::sin_over_2i;

namespace {

double sign_pow(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

Complex xv(const FlopConfig&, const WeightPoint& p, int i) { return p[i]; }
Complex zv(const FlopConfig& cfg, const WeightPoint& p, int i) { return p[cfg.n() + i]; }

}  // namespace

Complex gamma_block(const FlopConfig& cfg, Side side, int d, int e, const WeightPoint& p) {
  Complex v = 1.0;
  for (int j = 0; j < cfg.n(); ++j) {
    if (side == Side::plus) {
      Complex xd = xv(cfg, p, d);
      v *= recip_gamma(1.0 + (xd - xv(cfg, p, j)) / kTwoPiI + double(e));
      v *= recip_gamma(1.0 + (zv(cfg, p, j) - xd) / kTwoPiI - double(e));
    } else {
      Complex zd = zv(cfg, p, d);
      v *= recip_gamma(1.0 + (zd - xv(cfg, p, j)) / kTwoPiI - double(e));
      v *= recip_gamma(1.0 + (zv(cfg, p, j) - zd) / kTwoPiI + double(e));
    }
  }
  return v;
}

namespace {

Complex offset_of(const FlopConfig& cfg, Side side, int d, const WeightPoint& p) {
  return side == Side::plus ? xv(cfg, p, d) / kTwoPiI : -zv(cfg, p, d) / kTwoPiI;
}

// Advance a multi-index in [0, order]^r; false when exhausted.
bool next_index(std::vector<int>& e, int order) {
  for (int k = static_cast<int>(e.size()) - 1; k >= 0; --k) {
    if (e[k] < order) {
      ++e[k];
      return true;
    }
    e[k] = 0;
  }
  return false;
}

}  // namespace

Complex OffsetSeries::coefficient(int e) const {
  auto it = coeffs.find(e);
  return it == coeffs.end() ? Complex(0.0) : it->second;
}

Complex OffsetSeries::evaluate(Complex w) const {
  Complex sum = 0.0;
  for (const auto& [e, c] : coeffs)
    if (c != 0.0) sum += c * std::exp(w * (offset + double(e)));
  return sum;
}

Complex MultiOffsetSeries::coefficient(const std::vector<int>& e) const {
  auto it = coeffs.find(e);
  return it == coeffs.end() ? Complex(0.0) : it->second;
}

OffsetSeries MultiOffsetSeries::specialize() const {
  OffsetSeries out;
  out.order = order;
  for (const auto& a : offsets) out.offset += a;
  for (int e = 0; e <= order; ++e) out.coeffs[e] = 0.0;
  for (const auto& [e, c] : coeffs) {
    int tot = 0;
    for (int v : e) tot += v;
    if (tot <= order) out.coeffs[tot] += c;
  }
  return out;
}

MultiOffsetSeries h_series(const FlopConfig& cfg, Side side, const FixedPointLabel& delta, int order) {
  return h_series(cfg, side, delta.delta, order, cfg.point());
}

MultiOffsetSeries h_series(const FlopConfig& cfg, Side side, const std::vector<int>& delta, int order,
                           const WeightPoint& p) {
  if (order < 0) throw std::invalid_argument("h_series: negative order");
  const int r = static_cast<int>(delta.size());
  MultiOffsetSeries s;
  s.order = order;
  for (int d : delta) s.offsets.push_back(offset_of(cfg, side, d, p));

  // prefactor pi^{r(r-1)/2} / prod_{i<k} sin_over_2i(w_{d_i} - w_{d_k})
  Complex pre = std::pow(kPi, 0.5 * r * (r - 1));
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < k; ++i) {
      Complex diff = side == Side::plus ? xv(cfg, p, delta[i]) - xv(cfg, p, delta[k])
                                        : zv(cfg, p, delta[i]) - zv(cfg, p, delta[k]);
      Complex sn = sin_over_2i(diff);
      if (std::abs(sn) == 0.0) throw PoleError("h_series: vanishing prefactor sine");
      pre /= sn;
    }
  s.prefactor = pre;

  std::vector<std::vector<Complex>> block(r, std::vector<Complex>(order + 1));
  for (int k = 0; k < r; ++k)
    for (int e = 0; e <= order; ++e) block[k][e] = gamma_block(cfg, side, delta[k], e, p);

  std::vector<int> e(r, 0);
  do {
    long tot = 0;
    Complex c = 1.0;
    for (int k = 0; k < r; ++k) {
      tot += e[k];
      c *= block[k][e[k]];
      for (int i = 0; i < k; ++i) {
        // plus: (-x_{d_k} + x_{d_i})/2pi i - e_k + e_i;  minus: (-z_{d_k} + z_{d_i})/2pi i + d_k - d_i
        if (side == Side::plus)
          c *= (xv(cfg, p, delta[i]) - xv(cfg, p, delta[k])) / kTwoPiI - double(e[k]) + double(e[i]);
        else
          c *= (zv(cfg, p, delta[i]) - zv(cfg, p, delta[k])) / kTwoPiI + double(e[k]) - double(e[i]);
      }
    }
    s.coeffs[e] = sign_pow((r - 1) * tot) * c;
  } while (next_index(e, order));
  return s;
}

OffsetSeries f_factor_series(const FlopConfig& cfg, const FixedPointLabel& delta, int k, int order) {
  return f_factor_series(cfg, delta.side, delta.delta, k, order, cfg.point());
}

OffsetSeries f_factor_series(const FlopConfig& cfg, Side side, const std::vector<int>& delta, int k, int order,
                             const WeightPoint& p) {
  const int r = static_cast<int>(delta.size());
  OffsetSeries s;
  s.order = order;
  s.offset = offset_of(cfg, side, delta.at(k), p);
  for (int e = 0; e <= order; ++e) s.coeffs[e] = sign_pow(long(r - 1) * e) * gamma_block(cfg, side, delta[k], e, p);
  return s;
}

MultiOffsetSeries tensor_product(const std::vector<OffsetSeries>& factors) {
  MultiOffsetSeries m;
  const int r = static_cast<int>(factors.size());
  m.order = r ? factors[0].order : 0;
  for (const auto& f : factors) {
    m.offsets.push_back(f.offset);
    m.order = std::min(m.order, f.order);
  }
  std::vector<int> e(r, 0);
  do {
    Complex c = 1.0;
    for (int k = 0; k < r; ++k) c *= factors[k].coefficient(e[k]);
    m.coeffs[e] = c;
  } while (next_index(e, m.order));
  return m;
}

MultiOffsetSeries delta_hat_apply(const MultiOffsetSeries& s) {
  MultiOffsetSeries out = s;
  const int r = s.nvars();
  for (auto& [e, c] : out.coeffs)
    for (int k = 0; k < r; ++k)
      for (int i = 0; i < k; ++i) c *= (s.offsets[i] + double(e[i])) - (s.offsets[k] + double(e[k]));
  return out;
}

OdeResidual ode_check(const OffsetSeries& series, const FlopConfig& cfg, Side side) {
  return ode_check(series, cfg, side, cfg.point());
}

OdeResidual ode_check(const OffsetSeries& series, const FlopConfig& cfg, Side side, const WeightPoint& p) {
  const int n = cfg.n();
  const double sgn = sign_pow(n - cfg.r() + 1);
  auto poly = [&](Complex t, bool first) {
    Complex v = 1.0;
    for (int j = 0; j < n; ++j) {
      if (side == Side::plus)
        v *= t - (first ? xv(cfg, p, j) : zv(cfg, p, j)) / kTwoPiI;
      else
        v *= t + (first ? zv(cfg, p, j) : xv(cfg, p, j)) / kTwoPiI;
    }
    return v;
  };
  OdeResidual res;
  for (int e = 1; e <= series.order; ++e) {
    Complex lhs = poly(series.offset + double(e), true) * series.coefficient(e);
    Complex rhs = sgn * poly(series.offset + double(e - 1), false) * series.coefficient(e - 1);
    double scale = std::max(std::abs(lhs), std::abs(rhs));
    double rel = scale > 1e-300 ? std::abs(lhs - rhs) / scale : 0.0;
    if (rel > res.max_relative) {
      res.max_relative = rel;
      res.worst_index = e;
    }
  }
  return res;
}

}  // namespace flopwall::hypergeom
