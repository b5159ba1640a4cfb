#include <cmath>

#include "doctest.h"
#include "flopwall/barnes.hpp"
#include "flopwall/errors.hpp"
#include "flopwall/ifunction.hpp"
#include "flopwall/kclass.hpp"
#include "flopwall/run_config.hpp"
#include "flopwall/series.hpp"
#include "flopwall/special.hpp"
#include "oracles.hpp"

using namespace flopwall;
using namespace flopwall::hypergeom;
using flopgeom::enumerate_fixed_points;
using numkernel::kPi;

namespace {

const Complex kTwoPiI(0.0, 2.0 * kPi);

// Poles of the r = 1 integrand near s0: integers and -c_i - d.
double isolation(const FlopConfig& cfg, int l, Complex s0) {
  const auto& p = cfg.point();
  std::vector<Complex> poles;
  for (int d = -6; d <= 6; ++d) {
    poles.emplace_back(double(d));
    for (int i = 0; i < cfg.n(); ++i) poles.push_back(-(p[l] - p[cfg.n() + i]) / kTwoPiI - double(d));
  }
  double best = 1.0;
  for (Complex q : poles)
    if (std::abs(q - s0) > 1e-12) best = std::min(best, std::abs(q - s0));
  return best;
}

// (1/2 pi i) times a circle integral of f around s0.
template <class F>
Complex circle_residue(const F& f, Complex s0, double radius, int nodes = 128) {
  Complex sum = 0.0;
  for (int j = 0; j < nodes; ++j) {
    Complex u = std::polar(radius, 2.0 * kPi * j / nodes);
    sum += f(s0 + u) * u;
  }
  return sum / double(nodes);
}

Complex block_oracle(const FlopConfig& cfg, int l, int e) {
  const auto& p = cfg.point();
  Complex v = 1.0;
  for (int j = 0; j < cfg.n(); ++j) {
    v /= oracle::gamma(1.0 + (p[l] - p[j]) / kTwoPiI + double(e));
    v /= oracle::gamma(1.0 + (p[cfg.n() + j] - p[l]) / kTwoPiI - double(e));
  }
  return v;
}

}  // namespace

TEST_SUITE("hypergeom") {

TEST_CASE("r = 1 H-series coefficients against an independent Gamma") {
  auto cfg = cli::random_config(3, 1, 11);
  for (int l = 0; l < 3; ++l) {
    auto h = h_series(cfg, Side::plus, {l}, 6, cfg.point());
    CHECK(h.nvars() == 1);
    CHECK(h.prefactor == 1.0);
    CHECK(h.coeffs.size() == 7);
    for (int e = 0; e <= 6; ++e) CHECK(oracle::rel(h.coefficient({e}), block_oracle(cfg, l, e)) < 1e-11);
    CHECK(h.offsets[0] == cfg.point()[l] / kTwoPiI);
  }
}

TEST_CASE("Delta-hat: identity for r = 1, explicit for a monomial") {
  auto cfg = cli::random_config(2, 1, 12);
  auto h = h_series(cfg, Side::plus, {0}, 5, cfg.point());
  auto d = delta_hat_apply(h);
  for (const auto& [e, c] : h.coeffs) CHECK(d.coefficient(e) == c);

  MultiOffsetSeries m;
  m.offsets = {Complex(0.25, 1.0), Complex(-0.5, 0.0)};
  m.order = 3;
  m.coeffs[{2, 1}] = Complex(3.0);
  auto dm = delta_hat_apply(m);
  // (a_1 + 2) - (a_2 + 1)
  CHECK(std::abs(dm.coefficient({2, 1}) - 3.0 * Complex(1.75, 1.0)) < 1e-15);
  CHECK(dm.coefficient({0, 0}) == 0.0);
}

TEST_CASE("K-series equals Delta-hat of the product of single-variable factors") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {4, 3}}) {
    auto cfg = cli::random_config(n, r, 13);
    for (Side side : {Side::plus, Side::minus}) {
      const double sign = (side == Side::plus || (r * (r - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
      for (const auto& d : enumerate_fixed_points(cfg, side)) {
        auto k = h_series(cfg, side, d.delta, 4, cfg.point());
        std::vector<OffsetSeries> f;
        for (int i = 0; i < r; ++i) f.push_back(f_factor_series(cfg, side, d.delta, i, 4, cfg.point()));
        auto dh = delta_hat_apply(tensor_product(f));
        for (const auto& [e, v] : k.coeffs) CHECK(oracle::rel(v, sign * dh.coefficient(e)) < 1e-12);
      }
    }
  }
}

TEST_CASE("ODE annihilates the factors and detects a perturbation") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {5, 2}}) {
    auto cfg = cli::random_config(n, r, 14);
    for (Side side : {Side::plus, Side::minus})
      for (const auto& d : enumerate_fixed_points(cfg, side))
        for (int k = 0; k < r; ++k) {
          auto f = f_factor_series(cfg, side, d.delta, k, 30, cfg.point());
          CHECK(ode_check(f, cfg, side).max_relative < 1e-10);
          f.coeffs[3] *= 1.001;
          CHECK(ode_check(f, cfg, side).max_relative > 1e-4);
        }
  }
}

TEST_CASE("Barnes integrand residues reproduce both series") {
  auto cfg = cli::random_config(2, 1, 15);
  const auto& p = cfg.point();
  const int m = 1;
  const Complex w(0.3, 0.2);
  for (int l = 0; l < 2; ++l) {
    const Complex pre = barnes_prefactor(cfg, l, p);
    auto f = [&](Complex s) { return barnes_integrand(s, w, cfg, l, p, m); };
    auto plus = plus_series_r1(cfg, l, 4, p, m);
    for (int e = 0; e <= 3; ++e) {
      Complex term = plus.coefficient(e) * std::exp(w * (plus.offset + double(e)));
      CHECK(oracle::rel(pre * circle_residue(f, Complex(e), isolation(cfg, l, Complex(e)) / 4), term) < 1e-10);
    }
    for (int k = 0; k < 2; ++k) {
      auto minus = minus_series_r1(cfg, k, 4, p, m);
      Complex ck = (p[l] - p[2 + k]) / kTwoPiI;
      for (int d = 0; d <= 3; ++d) {
        Complex term = continuation_coefficient(cfg, k, l, p, m) * minus.coefficient(d) *
                       std::exp(-w * (minus.offset + double(d)));
        CHECK(oracle::rel(-pre * circle_residue(f, -ck - double(d), isolation(cfg, l, -ck - double(d)) / 4), term) < 1e-10);
      }
    }
  }
}

TEST_CASE("Barnes quadrature inside and past the wall") {
  for (int n : {2, 3}) {
    auto cfg = cli::random_config(n, 1, 16);
    const int m = n - 1;
    const auto& p = cfg.point();
    auto plus = plus_series_r1(cfg, 0, 80, p, m);
    for (double re : {std::log(0.2), std::log(0.4)}) {
      Complex w(re, m * kPi + 0.3);
      CHECK(oracle::rel(barnes_integrate(w, cfg, 0, p, m).value, plus.evaluate(w)) < 1e-9);
    }
    for (double re : {std::log(3.0), std::log(6.0)}) {
      Complex w(re, m * kPi - 0.2);
      auto b = barnes_integrate(w, cfg, 0, p, m);
      CHECK(oracle::rel(b.value, continued_sum(cfg, 0, w, 80, p, m)) < 1e-9);
      CHECK(b.error_estimate < 1e-9 * std::abs(b.value));
    }
    CHECK(verify_continuation_r1(cfg).pass(1e-8));
  }
}

TEST_CASE("Phase selection matters") {
  auto cfg = cli::random_config(2, 1, 17);
  const auto& p = cfg.point();
  const Complex w(std::log(3.0), 3.0 * kPi);
  auto b = barnes_integrate(w, cfg, 0, p, 3).value;
  CHECK(oracle::rel(b, continued_sum(cfg, 0, w, 80, p, 3)) < 1e-9);
  CHECK(oracle::rel(b, continued_sum(cfg, 0, w, 80, p, 1)) > 1e-3);
}

TEST_CASE("Barnes rejects w outside the convergence strip") {
  auto cfg = cli::random_config(2, 1, 18);
  CHECK_THROWS_AS(barnes_integrate(Complex(0.1, 0.0), cfg, 0, cfg.point(), 1), NonConvergence);
  CHECK_THROWS_AS(barnes_integrate(Complex(0.1, 2.0 * kPi), cfg, 0, cfg.point(), 1), NonConvergence);
  CHECK_NOTHROW(barnes_integrate(Complex(0.1, kPi), cfg, 0, cfg.point(), 1));
}

TEST_CASE("default path avoids the singular points") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 2}}) {
    auto path = default_path(n, r);
    CHECK(path.points.front().imag() == 0.0);
    CHECK(path.points.back().imag() == 0.0);
    CHECK(path.pole_distance(n, r) > 1.0);
  }
}

TEST_CASE("telescoped ratio") {
  const Complex a(0.7, 0.2), z(1.3, -0.4);
  CHECK(telescoped_ratio(a, z, 0) == 1.0);
  CHECK(oracle::rel(telescoped_ratio(a, z, 2), 1.0 / ((a + z) * (a + 2.0 * z))) < 1e-15);
  CHECK(oracle::rel(telescoped_ratio(a, z, -2), a * (a - z)) < 1e-15);
}

TEST_CASE("I-function: leading term, ordering, factored form") {
  const Complex z(2.0, 0.5);
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 2}}) {
    auto cfg = cli::random_config(n, r, 19);
    for (const auto& d : enumerate_fixed_points(cfg, Side::plus)) {
      auto direct = i_function(cfg, Side::plus, d, 6, z);
      CHECK(std::abs(direct.coefficient(0) - 1.0) < 1e-13);
      auto rev = d.delta;
      std::reverse(rev.begin(), rev.end());
      auto swapped = i_function(cfg, Side::plus, rev, 6, z);
      for (int e = 0; e <= 6; ++e) CHECK(oracle::rel(swapped.coefficient(e), direct.coefficient(e)) < 1e-12);
      auto fact = i_function_factored(cfg, d, 6, std::log(z));
      for (int e = 0; e <= 6; ++e) CHECK(oracle::rel(fact.coefficient(e), direct.coefficient(e)) < 1e-9);
    }
  }
}

TEST_CASE("central charge: linearity and continuation") {
  auto cfg = cli::random_config(2, 1, 20);
  const Complex z(2.0), w(std::log(0.3), kPi);
  auto labels = enumerate_fixed_points(cfg, Side::minus);
  auto a = ktheory::generator_e(cfg, labels[0]);
  auto b = ktheory::generator_e(cfg, labels[1]);
  auto ab = a;
  ab *= 2;
  ab += b;
  Complex za = central_charge(cfg, Side::minus, a, -w, z, 60);
  Complex zb = central_charge(cfg, Side::minus, b, -w, z, 60);
  CHECK(oracle::rel(central_charge(cfg, Side::minus, ab, -w, z, 60), 2.0 * za + zb) < 1e-12);

  const Complex wout(std::log(3.0), kPi);
  auto fm = ktheory::fm_transform(cfg, a);
  Complex cont = central_charge_continued(cfg, fm, wout, z);
  Complex minus = central_charge(cfg, Side::minus, a, -wout, z, 80);
  CHECK(oracle::rel(cont, minus) < 1e-7);
}

}  // TEST_SUITE
