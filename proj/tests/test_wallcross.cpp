#include <random>

#include "doctest.h"
#include "flopwall/antisym.hpp"
#include "flopwall/integral_structure.hpp"
#include "flopwall/kclass.hpp"
#include "flopwall/run_config.hpp"
#include "flopwall/transfer.hpp"
#include "oracles.hpp"

using namespace flopwall;
using flopgeom::operator+;
using flopgeom::operator-;
using namespace flopwall::wallcross;
using flopgeom::enumerate_fixed_points;
using numkernel::MultiPoly;
using numkernel::Rational;

namespace {

double vec_rel(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num = std::max(num, std::abs(a[i] - b[i]));
    den = std::max({den, std::abs(a[i]), std::abs(b[i])});
  }
  return den == 0.0 ? 0.0 : num / den;
}

}  // namespace

TEST_SUITE("wallcross") {

TEST_CASE("antisymmetric identity: small rank by hand") {
  CHECK(antisym_lhs(1) == MultiPoly::constant(2, Rational(1)));
  CHECK(antisym_rhs(1) == MultiPoly::constant(2, Rational(1)));
  // r = 2, variables x1 x2 z1 z2: (z2 - z1)(x1 - x2)
  auto v = [](int i) { return MultiPoly::variable(4, i); };
  auto expect = (v(3) - v(2)) * (v(0) - v(1));
  CHECK(antisym_lhs(2) == expect);
  CHECK(antisym_rhs(2) == expect);
}

TEST_CASE("antisymmetric identity: samples and symbolic expansion") {
  for (int r = 1; r <= 5; ++r) {
    auto rep = antisym_identity_check(r, 10, 100 + r);
    CHECK(rep.pass());
    CHECK(rep.symbolic_checked == (r <= 4));
    if (r <= 4) CHECK(rep.leading_coefficient_ok);
  }
  std::vector<Rational> x = {Rational(1, 2), Rational(-3), Rational(5, 7)}, z = {Rational(2), Rational(1, 9), Rational(-4, 3)};
  CHECK(antisym_lhs_value(3, x, z) == antisym_rhs_value(3, x, z));
}

TEST_CASE("C collapses to 1 at degenerate test weights") {
  auto cfg = cli::random_config(3, 2, 1);
  for (const auto& dm : enumerate_fixed_points(cfg, Side::minus))
    for (const auto& dp : enumerate_fixed_points(cfg, Side::plus)) {
      WeightPoint p = cfg.point();
      for (int i = 0; i < cfg.r(); ++i) p[dp.delta[i]] = p[cfg.n() + dm.delta[i]];
      CHECK(std::abs(coeff_C(cfg, dm, dp, p) - 1.0) < 1e-12);
    }
}

TEST_CASE("C for r = 1 is the ratio of generator restrictions") {
  for (int n : {2, 3, 4}) {
    auto cfg = cli::random_config(n, 1, 2);
    const auto& p = cfg.point();
    for (const auto& dm : enumerate_fixed_points(cfg, Side::minus))
      for (const auto& dp : enumerate_fixed_points(cfg, Side::plus)) {
        Complex num = 1.0, den = 1.0;
        for (int j = 0; j < n; ++j) {
          if (j == dm.delta[0]) continue;
          num *= 1.0 - std::exp(p[dp.delta[0]] - p[n + j]);
          den *= 1.0 - std::exp(p[n + dm.delta[0]] - p[n + j]);
        }
        CHECK(oracle::rel(coeff_C(cfg, dm, dp), num / den) < 1e-12);
        flopgeom::AbelianLabel f{Side::minus, dm.delta};
        CHECK(oracle::rel(coeff_CK(cfg, f, dp, p), coeff_C(cfg, dm, dp)) < 1e-13);
        CHECK(oracle::rel(coeff_CH(cfg, f, dp, p), coeff_C(cfg, dm, dp)) < 1e-13);
      }
  }
}

TEST_CASE("C^H vanishes off injective labels; S_r sum gives C") {
  auto cfg = cli::random_config(4, 2, 3);
  for (const auto& dp : enumerate_fixed_points(cfg, Side::plus)) {
    for (const auto& f : flopgeom::enumerate_abelian(cfg, Side::minus, false))
      if (!f.injective()) CHECK(coeff_CH(cfg, f, dp, cfg.point()) == 0.0);
    for (const auto& dm : enumerate_fixed_points(cfg, Side::minus)) {
      Complex s = coeff_CH(cfg, {Side::minus, dm.delta}, dp, cfg.point()) +
                  coeff_CH(cfg, {Side::minus, {dm.delta[1], dm.delta[0]}}, dp, cfg.point());
      CHECK(std::abs(s - coeff_C(cfg, dm, dp)) < 1e-10 * std::max(1.0, std::abs(coeff_C(cfg, dm, dp))));
    }
  }
}

TEST_CASE("U_H on basis vectors and linearity") {
  auto cfg = cli::random_config(3, 2, 4);
  auto minus = enumerate_fixed_points(cfg, Side::minus);
  auto plus = enumerate_fixed_points(cfg, Side::plus);
  for (std::size_t a = 0; a < minus.size(); ++a) {
    LocalizedCohClass beta{Side::minus, std::vector<Complex>(minus.size(), 0.0)};
    beta.values[a] = 1.0;
    auto img = uh_apply(cfg, beta);
    for (std::size_t b = 0; b < plus.size(); ++b) CHECK(img.values[b] == coeff_C(cfg, minus[a], plus[b]));
  }
  LocalizedCohClass u{Side::minus, {1.0, Complex(0, 2), -3.0}}, v{Side::minus, {0.5, 4.0, Complex(1, 1)}};
  LocalizedCohClass w{Side::minus, {}};
  for (std::size_t i = 0; i < 3; ++i) w.values.push_back(2.0 * u.values[i] - v.values[i]);
  auto iu = uh_apply(cfg, u), iv = uh_apply(cfg, v), iw = uh_apply(cfg, w);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(iw.values[i] - (2.0 * iu.values[i] - iv.values[i])) < 1e-12);
}

TEST_CASE("U_H o ch = ch o FM at (3, 2)") {
  auto cfg = cli::random_config(3, 2, 5);
  for (const auto& dm : enumerate_fixed_points(cfg, Side::minus)) {
    auto e = ktheory::generator_e(cfg, dm);
    LocalizedCohClass beta{Side::minus, ktheory::chern_character(cfg, e, 1.0)};
    CHECK(vec_rel(uh_apply(cfg, beta).values, ktheory::chern_character(cfg, ktheory::fm_transform(cfg, e), 1.0)) < 1e-10);
  }
}

TEST_CASE("transition matrix layout") {
  auto cfg = cli::random_config(3, 2, 6);
  auto m = transition_matrix(cfg, TransitionMatrix::Kind::C);
  CHECK(m.rows.size() == 3);
  CHECK(m.cols.size() == 3);
  CHECK(m.entries[0][1] == coeff_C(cfg, {Side::minus, {0, 1}}, {Side::plus, {0, 2}}));
  CHECK(transition_matrix(cfg, TransitionMatrix::Kind::CK).rows.size() == 9);
}

TEST_CASE("Psi basics and the pairing") {
  auto cfg = cli::random_config(2, 1, 7);
  PsiContext ctx(cfg, Side::minus, 2.0);
  for (Complex v : psi_apply(ctx, ktheory::zero_class(cfg, Side::minus)).values) CHECK(v == 0.0);
  LocalizedCohClass ones{Side::minus, {1.0, 1.0}};
  Complex expect = 0.0;
  for (const auto& l : enumerate_fixed_points(cfg, Side::minus)) expect += 1.0 / flopgeom::euler_class_normal(cfg, l).to_double();
  CHECK(oracle::rel(pairing(cfg, ones, ones), expect) < 1e-14);
  LocalizedCohClass a{Side::minus, {2.0, Complex(0, 1)}}, b{Side::minus, {Complex(1, -1), 3.0}};
  CHECK(pairing(cfg, a, b) == pairing(cfg, b, a));
  auto round = psi_inverse(ctx, psi_on_coh(ctx, a));
  CHECK(vec_rel(round.values, a.values) < 1e-14);
}

TEST_CASE("Iritani pairing identity") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}})
    for (Complex z : {Complex(2.0), Complex(3.0, 1.0)}) {
      auto cfg = cli::random_config(n, r, 8);
      PsiContext ctx(cfg, Side::minus, z);
      auto rot = ctx.rotated(-numkernel::kPi);
      CHECK(std::abs(rot.z() + z) < 1e-14 * std::abs(z));
      const double scale = std::pow(2.0 * numkernel::kPi, cfg.dim());
      auto labels = enumerate_fixed_points(cfg, Side::minus);
      auto c = ktheory::generator_e(cfg, labels[0]);
      auto d = ktheory::trivial_class(cfg, Side::minus);
      d += c;
      Complex lhs = pairing(cfg, psi_apply(rot, c), psi_apply(ctx, d));
      CHECK(oracle::rel(lhs, scale * ktheory::chi_z_pairing(cfg, c, d, z)) < 1e-8);
    }
}

TEST_CASE("U intertwines Psi with FM, preserves the pairing, is invertible") {
  std::mt19937_64 rng(31);
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {3, 1}}) {
    auto cfg = cli::random_config(n, r, 9);
    PsiContext m(cfg, Side::minus, Complex(2.0, 0.3));
    auto p = m.on_side(Side::plus);
    auto mr = m.rotated(-numkernel::kPi), pr = mr.on_side(Side::plus);
    for (const auto& dm : enumerate_fixed_points(cfg, Side::minus)) {
      auto e = ktheory::generator_e(cfg, dm);
      auto lhs = u_apply(p, m, psi_apply(m, e));
      CHECK(vec_rel(lhs.values, psi_apply(p, ktheory::fm_transform(cfg, e)).values) < 1e-9);
    }
    auto labels = enumerate_fixed_points(cfg, Side::minus);
    for (int t = 0; t < 10; ++t) {
      auto a = ktheory::generator_e(cfg, labels[rng() % labels.size()]);
      auto b = ktheory::generator_e(cfg, labels[rng() % labels.size()]);
      b += ktheory::trivial_class(cfg, Side::minus);
      auto fa = psi_apply(mr, a), gb = psi_apply(m, b);
      Complex before = pairing(cfg, fa, gb), after = pairing(cfg, u_apply(pr, mr, fa), u_apply(p, m, gb));
      CHECK(oracle::rel(after, before) < 1e-8);
    }
    auto cond = conditioning(u_matrix(p, m));
    CHECK(cond.hadamard_ratio > 1e-10);
    CHECK(std::abs(cond.det) > 0.0);
  }
}

TEST_CASE("u_apply rejects mismatched branches") {
  auto cfg = cli::random_config(2, 1, 10);
  PsiContext m(cfg, Side::minus, 2.0);
  auto p = m.rotated(-numkernel::kPi).on_side(Side::plus);
  CHECK_THROWS(u_apply(p, m, LocalizedCohClass{Side::minus, {1.0, 1.0}}));
}

}  // TEST_SUITE
