#include "flopwall/transfer.hpp"

#include <algorithm>
#include <stdexcept>

#include "flopwall/errors.hpp"

namespace flopwall::wallcross {

using numkernel::sin_over_2i;

namespace {

bool contains(const std::vector<int>& v, int j) { return std::find(v.begin(), v.end(), j) != v.end(); }

Complex X(const FlopConfig&, const WeightPoint& p, int i) { return p[i]; }
Complex Z(const FlopConfig& cfg, const WeightPoint& p, int i) { return p[cfg.n() + i]; }

Complex checked_ratio(Complex num, Complex den) {
  if (den == 0.0) throw DegenerateWeight("vanishing sine in transfer coefficient");
  return num / den;
}

}  // namespace

Complex coeff_C(const FlopConfig& cfg, const FixedPointLabel& dm, const FixedPointLabel& dp) {
  return coeff_C(cfg, dm, dp, cfg.point());
}

Complex coeff_C(const FlopConfig& cfg, const FixedPointLabel& dm, const FixedPointLabel& dp,
                const WeightPoint& p) {
  const int n = cfg.n(), r = cfg.r();
  Complex v = 1.0;
  for (int i = 0; i < r; ++i) {
    Complex xp = X(cfg, p, dp.delta[i]), zm = Z(cfg, p, dm.delta[i]);
    v *= std::exp(0.5 * (n - r) * (xp - zm));
    for (int j = 0; j < n; ++j)
      if (!contains(dm.delta, j))
        v *= checked_ratio(sin_over_2i(xp - Z(cfg, p, j)), sin_over_2i(zm - Z(cfg, p, j)));
  }
  return v;
}

Complex coeff_CK(const FlopConfig& cfg, const AbelianLabel& f, const FixedPointLabel& dp,
                 const WeightPoint& p) {
  const int n = cfg.n(), r = cfg.r();
  Complex v = 1.0;
  for (int i = 0; i < r; ++i) {
    Complex xp = X(cfg, p, dp.delta[i]), zf = Z(cfg, p, f.f[i]);
    v *= std::exp(0.5 * (n - r) * (xp - zf));
    for (int j = 0; j < n; ++j)
      if (j != f.f[i]) v *= checked_ratio(sin_over_2i(xp - Z(cfg, p, j)), sin_over_2i(zf - Z(cfg, p, j)));
  }
  return v;
}

Complex coeff_CH(const FlopConfig& cfg, const AbelianLabel& f, const FixedPointLabel& dp,
                 const WeightPoint& p) {
  if (!f.injective()) return 0.0;
  const int r = cfg.r();
  Complex v = coeff_CK(cfg, f, dp, p);
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < k; ++i)
      v *= checked_ratio(sin_over_2i(Z(cfg, p, f.f[i]) - Z(cfg, p, f.f[k])),
                         sin_over_2i(X(cfg, p, dp.delta[i]) - X(cfg, p, dp.delta[k])));
  return v;
}

std::string to_string(TransitionMatrix::Kind k) {
  switch (k) {
    case TransitionMatrix::Kind::C: return "C";
    case TransitionMatrix::Kind::CK: return "CK";
    case TransitionMatrix::Kind::CH: return "CH";
  }
  return "?";
}

TransitionMatrix transition_matrix(const FlopConfig& cfg, TransitionMatrix::Kind kind) {
  return transition_matrix(cfg, kind, cfg.point());
}

TransitionMatrix transition_matrix(const FlopConfig& cfg, TransitionMatrix::Kind kind, const WeightPoint& p) {
  using K = TransitionMatrix::Kind;
  TransitionMatrix m{kind, {}, {}, {}};
  auto plus = flopgeom::enumerate_fixed_points(cfg, Side::plus);
  for (const auto& dp : plus) m.cols.push_back(dp.str());
  if (kind == K::C) {
    for (const auto& dm : flopgeom::enumerate_fixed_points(cfg, Side::minus)) {
      m.rows.push_back(dm.str());
      auto& row = m.entries.emplace_back();
      for (const auto& dp : plus) row.push_back(coeff_C(cfg, dm, dp, p));
    }
  } else {
    for (const auto& f : flopgeom::enumerate_abelian(cfg, Side::minus, kind == K::CH)) {
      m.rows.push_back(f.str());
      auto& row = m.entries.emplace_back();
      for (const auto& dp : plus) row.push_back(kind == K::CK ? coeff_CK(cfg, f, dp, p) : coeff_CH(cfg, f, dp, p));
    }
  }
  return m;
}

LocalizedCohClass uh_apply(const FlopConfig& cfg, const LocalizedCohClass& beta) {
  return uh_apply(cfg, beta, cfg.point());
}

LocalizedCohClass uh_apply(const FlopConfig& cfg, const LocalizedCohClass& beta, const WeightPoint& p) {
  if (beta.side != Side::minus) throw std::invalid_argument("uh_apply: minus-side class expected");
  auto minus = flopgeom::enumerate_fixed_points(cfg, Side::minus);
  auto plus = flopgeom::enumerate_fixed_points(cfg, Side::plus);
  if (beta.values.size() != minus.size()) throw std::invalid_argument("uh_apply: wrong length");
  LocalizedCohClass out{Side::plus, std::vector<Complex>(plus.size(), 0.0)};
  for (std::size_t b = 0; b < plus.size(); ++b)
    for (std::size_t a = 0; a < minus.size(); ++a)
      if (beta.values[a] != 0.0) out.values[b] += coeff_C(cfg, minus[a], plus[b], p) * beta.values[a];
  return out;
}

}  // namespace flopwall::wallcross
