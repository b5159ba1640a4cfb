#include "flopwall/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "flopwall/errors.hpp"
#include "flopwall/multipoly.hpp"

namespace flopwall::flopgeom {

using numkernel::MultiPoly;

namespace {

std::string join1(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i] + 1;
  os << "}";
  return os.str();
}

bool contains(const std::vector<int>& v, int j) { return std::find(v.begin(), v.end(), j) != v.end(); }

MultiPoly as_poly(const Weight& w) {
  std::vector<Rational> c;
  c.reserve(w.size());
  for (int v : w) c.emplace_back(v);
  return MultiPoly::linear(c);
}

// 1/(1 + Y) truncated at total degree `deg`, for a linear form Y.
MultiPoly inverse_one_plus(const MultiPoly& y, int deg) {
  int m = y.nvars();
  MultiPoly out = MultiPoly::constant(m, Rational(1));
  MultiPoly power = out;
  MultiPoly neg_y = -y;
  for (int k = 1; k <= deg; ++k) {
    power = MultiPoly::mul_truncated(power, neg_y, deg);
    out += power;
  }
  return out;
}

}  // namespace

std::string FixedPointLabel::str() const { return join1(delta); }

bool AbelianLabel::injective() const {
  std::vector<int> s(f);
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

std::string AbelianLabel::str() const { return join1(f); }

std::vector<FixedPointLabel> enumerate_fixed_points(const FlopConfig& cfg, Side side) {
  const int n = cfg.n(), r = cfg.r();
  std::vector<FixedPointLabel> out;
  std::vector<int> d(r);
  for (int i = 0; i < r; ++i) d[i] = i;
  while (true) {
    out.push_back({side, d});
    int i = r - 1;
    while (i >= 0 && d[i] == n - r + i) --i;
    if (i < 0) break;
    ++d[i];
    for (int k = i + 1; k < r; ++k) d[k] = d[k - 1] + 1;
  }
  return out;
}

std::vector<AbelianLabel> enumerate_abelian(const FlopConfig& cfg, Side side, bool injective_only) {
  const int n = cfg.n(), r = cfg.r();
  std::vector<AbelianLabel> out;
  std::vector<int> f(r, 0);
  while (true) {
    AbelianLabel a{side, f};
    if (!injective_only || a.injective()) out.push_back(a);
    int i = r - 1;
    while (i >= 0 && f[i] == n - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

std::size_t fixed_point_index(const FlopConfig& cfg, const FixedPointLabel& label) {
  auto all = enumerate_fixed_points(cfg, label.side);
  auto it = std::find(all.begin(), all.end(), label);
  if (it == all.end()) throw std::invalid_argument("not a fixed point label: " + label.str());
  return static_cast<std::size_t>(it - all.begin());
}

std::vector<Weight> restrict_chern_roots(const FlopConfig& cfg, const FixedPointLabel& label) {
  std::vector<Weight> out;
  for (int d : label.delta) out.push_back(label.side == Side::minus ? -cfg.wz(d) : -cfg.wx(d));
  return out;
}

std::vector<Weight> tangent_weights(const FlopConfig& cfg, const FixedPointLabel& label) {
  const int n = cfg.n();
  std::vector<Weight> out;
  out.reserve(cfg.dim());
  if (label.side == Side::minus) {
    // Hom(F, R^vee) - End(R^vee), then Hom(R^vee, E)
    for (int di : label.delta)
      for (int j = 0; j < n; ++j)
        if (!contains(label.delta, j)) out.push_back(cfg.wz(j) - cfg.wz(di));
    for (int di : label.delta)
      for (int j = 0; j < n; ++j) out.push_back(cfg.wz(di) - cfg.wx(j));
  } else {
    // Hom(R^vee, E) - End(R^vee), then Hom(F, R^vee)
    for (int di : label.delta)
      for (int j = 0; j < n; ++j)
        if (!contains(label.delta, j)) out.push_back(cfg.wx(di) - cfg.wx(j));
    for (int di : label.delta)
      for (int j = 0; j < n; ++j) out.push_back(cfg.wz(j) - cfg.wx(di));
  }
  for (const auto& w : out)
    if (cfg.evaluate_exact(w).is_zero())
      throw DegenerateWeight("zero tangent weight at " + to_string(label.side) + " " + label.str());
  return out;
}

Rational euler_class_normal(const FlopConfig& cfg, const FixedPointLabel& label) {
  Rational e(1);
  for (const auto& w : tangent_weights(cfg, label)) e *= cfg.evaluate_exact(w);
  return e;
}

FixedPointGeometry fixed_point_geometry(const FlopConfig& cfg, const FixedPointLabel& label) {
  FixedPointGeometry g{label, restrict_chern_roots(cfg, label), tangent_weights(cfg, label), Rational(1)};
  for (const auto& w : g.tangent_weights) g.euler_normal *= cfg.evaluate_exact(w);
  return g;
}

bool RelationReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const RelationEntry& e) { return e.pass; });
}

RelationReport check_relations(const FlopConfig& cfg, Side side) {
  const int n = cfg.n(), r = cfg.r(), m = 2 * n;
  RelationReport report;
  for (const auto& label : enumerate_fixed_points(cfg, side)) {
    // plus: prod(1 - x_i) / prod(1 + y_j);  minus: prod(1 + z_i) / prod(1 - y_j)
    MultiPoly series = MultiPoly::constant(m, Rational(1));
    for (int i = 0; i < n; ++i) {
      MultiPoly factor = MultiPoly::constant(m, Rational(1));
      if (side == Side::plus)
        factor -= MultiPoly::variable(m, i);
      else
        factor += MultiPoly::variable(m, n + i);
      series = MultiPoly::mul_truncated(series, factor, n);
    }
    for (const auto& y : restrict_chern_roots(cfg, label)) {
      MultiPoly yp = as_poly(y);
      if (side == Side::minus) yp = -yp;
      series = MultiPoly::mul_truncated(series, inverse_one_plus(yp, n), n);
    }
    for (int l = n - r + 1; l <= n; ++l) report.entries.push_back({label, l, series.homogeneous_part(l).is_zero()});
  }
  return report;
}

}  // namespace flopwall::flopgeom
