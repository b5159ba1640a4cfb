#include "flopwall/ifunction.hpp"

#include <stdexcept>

#include "flopwall/errors.hpp"
#include "flopwall/integral_structure.hpp"

namespace flopwall::hypergeom {

using numkernel::kPi;
using numkernel::kTwoPiI;

Complex telescoped_ratio(Complex a, Complex z, int d) {
  Complex v = 1.0;
  if (d >= 0) {
    for (int h = 1; h <= d; ++h) v *= a + double(h) * z;
    if (v == 0.0) throw PoleError("telescoped_ratio: vanishing denominator");
    return 1.0 / v;
  }
  for (int h = d + 1; h <= 0; ++h) v *= a + double(h) * z;
  return v;
}

OffsetSeries i_function(const FlopConfig& cfg, Side side, const FixedPointLabel& delta, int order, Complex z) {
  return i_function(cfg, side, delta.delta, order, z);
}

OffsetSeries i_function(const FlopConfig& cfg, Side side, const std::vector<int>& delta, int order, Complex z) {
  if (z == 0.0) throw std::invalid_argument("i_function: z = 0");
  const int n = cfg.n(), r = static_cast<int>(delta.size());
  const auto& lam = cfg.point();
  auto X = [&](int i) { return lam[i]; };
  auto Z = [&](int i) { return lam[n + i]; };

  std::vector<Complex> y;
  for (int d : delta) y.push_back(side == Side::plus ? -X(d) : -Z(d));

  OffsetSeries s;
  s.order = order;
  for (int j = 0; j < r; ++j) s.offset += (side == Side::plus ? -y[j] : y[j]) / z;
  for (int e = 0; e <= order; ++e) s.coeffs[e] = 0.0;

  // Plus side sums N_{0,-e}, minus side N_{0,d}, over multi-indices with entries >= 0.
  std::vector<int> e(r, 0);
  while (true) {
    int tot = 0;
    for (int v : e) tot += v;
    if (tot <= order) {
      std::vector<int> d(r);
      for (int j = 0; j < r; ++j) d[j] = side == Side::plus ? -e[j] : e[j];
      Complex c = 1.0;
      for (int j = 0; j < r && c != 0.0; ++j) {
        for (int i = 0; i < n; ++i) c *= telescoped_ratio(Z(i) + y[j], z, d[j]);
        for (int k = 0; k < n; ++k) c *= telescoped_ratio(-X(k) - y[j], z, -d[j]);
      }
      for (int i = 0; i < r && c != 0.0; ++i)
        for (int j = 0; j < r; ++j)
          if (i != j) c /= telescoped_ratio(y[i] - y[j], z, d[i] - d[j]);
      s.coeffs[tot] += c;
    }
    int k = r - 1;
    while (k >= 0 && e[k] == order) e[k--] = 0;
    if (k < 0) break;
    ++e[k];
  }
  return s;
}

Complex i_factor(const FlopConfig& cfg, const FixedPointLabel& delta, Complex log_z) {
  const Complex z = std::exp(log_z);
  Complex rho = 0.0, gamma_hat = 1.0;
  for (const auto& w : flopgeom::tangent_weights(cfg, delta)) {
    Complex a = cfg.evaluate(w) / z;
    rho += a;
    gamma_hat *= numkernel::gamma(1.0 + a);
  }
  Complex rho_x = 0.0;  // c_1 of (E + F^vee)^{r}
  for (int j = 0; j < cfg.n(); ++j) rho_x += double(cfg.r()) * (cfg.point()[cfg.n() + j] - cfg.point()[j]);
  const double half_dim = 0.5 * cfg.dim();
  Complex psi_part = std::exp(half_dim * log_z) * std::exp(rho * log_z) * gamma_hat;
  Complex base_part = std::exp(-half_dim * log_z) * std::exp(-rho_x / z * log_z);
  return psi_part * base_part;
}

OffsetSeries i_function_factored(const FlopConfig& cfg, const FixedPointLabel& delta, int order, Complex log_z) {
  const Complex z = std::exp(log_z);
  WeightPoint mu = flopgeom::scaled(cfg.point(), kTwoPiI / z);
  MultiOffsetSeries h = h_series(cfg, delta.side, delta.delta, order, mu);
  OffsetSeries s = h.specialize();
  Complex k = h.prefactor * i_factor(cfg, delta, log_z);
  for (auto& [e, c] : s.coeffs) c *= k;
  return s;
}

Complex central_charge(const FlopConfig& cfg, Side side, const ktheory::KClass& e, Complex w, Complex z,
                       int order) {
  wallcross::PsiContext ctx(cfg, side, z);
  auto psi = wallcross::psi_apply(ctx, e);
  const Complex z_rot = std::exp(ctx.log_z() - Complex(0.0, kPi));
  Complex sum = 0.0;
  for (std::size_t i = 0; i < ctx.labels().size(); ++i) {
    const auto& label = ctx.labels()[i];
    Complex ival = i_function(cfg, side, label, order, z_rot).evaluate(w);
    sum += ival * psi.values[i] / flopgeom::euler_class_normal(cfg, label).to_double();
  }
  return sum;
}

Complex central_charge_continued(const FlopConfig& cfg, const ktheory::KClass& e, Complex w, Complex z,
                                 const BarnesOptions& opt) {
  if (cfg.r() != 1) throw std::invalid_argument("central_charge_continued: r = 1 required");
  if (e.side() != Side::plus) throw std::invalid_argument("central_charge_continued: plus-side class expected");
  wallcross::PsiContext ctx(cfg, Side::plus, z);
  auto psi = wallcross::psi_apply(ctx, e);
  const Complex log_rot = ctx.log_z() - Complex(0.0, kPi);
  const WeightPoint mu = flopgeom::scaled(cfg.point(), kTwoPiI / std::exp(log_rot));
  Complex sum = 0.0;
  for (std::size_t i = 0; i < ctx.labels().size(); ++i) {
    const auto& label = ctx.labels()[i];
    Complex h = barnes_integrate(w, cfg, label.delta[0], mu, cfg.n() - 1, opt).value;
    Complex ival = i_factor(cfg, label, log_rot) * h;
    sum += ival * psi.values[i] / flopgeom::euler_class_normal(cfg, label).to_double();
  }
  return sum;
}

}  // namespace flopwall::hypergeom
