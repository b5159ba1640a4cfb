#include "flopwall/kclass.hpp"

#include <algorithm>
#include <stdexcept>

#include "flopwall/errors.hpp"

namespace flopwall::ktheory {

using flopgeom::enumerate_fixed_points;
using flopgeom::operator-;

namespace {

bool contains(const std::vector<int>& v, int j) { return std::find(v.begin(), v.end(), j) != v.end(); }

Complex checked_denominator(const std::vector<Weight>& lines, const WeightPoint& p) {
  Complex d = wedge_dual_value(lines, p);
  if (std::abs(d) == 0.0) throw DegenerateWeight("vanishing K-theoretic localization denominator");
  return d;
}

}  // namespace

LocalizedKClass& LocalizedKClass::operator+=(const LocalizedKClass& o) {
  if (o.side_ != side_ || o.size() != size()) throw std::invalid_argument("LocalizedKClass: mismatched sum");
  for (std::size_t i = 0; i < restrictions_.size(); ++i) restrictions_[i] += o.restrictions_[i];
  return *this;
}

LocalizedKClass& LocalizedKClass::operator*=(std::int64_t c) {
  for (auto& v : restrictions_) v *= c;
  return *this;
}

LocalizedKClass trivial_class(const FlopConfig& cfg, Side side) {
  auto n = enumerate_fixed_points(cfg, side).size();
  return LocalizedKClass(side, std::vector<VirtualCharacter>(n, VirtualCharacter::one(2 * cfg.n())));
}

LocalizedKClass zero_class(const FlopConfig& cfg, Side side) {
  auto n = enumerate_fixed_points(cfg, side).size();
  return LocalizedKClass(side, std::vector<VirtualCharacter>(n, VirtualCharacter(2 * cfg.n())));
}

LocalizedKClass generator_e(const FlopConfig& cfg, const FixedPointLabel& delta_minus) {
  if (delta_minus.side != Side::minus) throw std::invalid_argument("generator_e: minus-side label expected");
  std::vector<VirtualCharacter> res;
  for (const auto& d0 : enumerate_fixed_points(cfg, Side::minus)) {
    std::vector<Weight> lines;  // (1 - e^{-w}) with w = z_j - z_{d0_i}
    for (int di : d0.delta)
      for (int j = 0; j < cfg.n(); ++j)
        if (!contains(delta_minus.delta, j)) lines.push_back(cfg.wz(j) - cfg.wz(di));
    res.push_back(wedge_dual_expand(lines, 2 * cfg.n()));
  }
  return LocalizedKClass(Side::minus, std::move(res));
}

std::vector<Weight> tilde_tangent_weights(const FlopConfig& cfg, const FixedPointLabel& dm,
                                          const FixedPointLabel& dp) {
  const int n = cfg.n();
  std::vector<Weight> out;
  out.reserve(cfg.dim());
  for (int di : dm.delta)
    for (int j = 0; j < n; ++j)
      if (!contains(dm.delta, j)) out.push_back(cfg.wz(j) - cfg.wz(di));
  for (int di : dm.delta)
    for (int dj : dp.delta) out.push_back(cfg.wz(di) - cfg.wx(dj));
  for (int dj : dp.delta)
    for (int i = 0; i < n; ++i)
      if (!contains(dp.delta, i)) out.push_back(cfg.wx(dj) - cfg.wx(i));
  for (const auto& w : out)
    if (cfg.evaluate_exact(w).is_zero()) throw DegenerateWeight("zero tangent weight on the resolution");
  return out;
}

FmImage::FmImage(const FlopConfig& cfg, std::shared_ptr<const KClass> source,
                 std::optional<LocalizedKClass> exact)
    : source_(std::move(source)),
      minus_(enumerate_fixed_points(cfg, Side::minus)),
      plus_(enumerate_fixed_points(cfg, Side::plus)),
      exact_(std::move(exact)) {
  if (source_->side() != Side::minus) throw std::invalid_argument("fm_transform: minus-side class expected");
  for (const auto& p : plus_) plus_tangent_.push_back(flopgeom::tangent_weights(cfg, p));
  tilde_.resize(minus_.size());
  for (std::size_t a = 0; a < minus_.size(); ++a)
    for (const auto& p : plus_) tilde_[a].push_back(tilde_tangent_weights(cfg, minus_[a], p));
}

Complex FmImage::restriction(std::size_t fp, const WeightPoint& p) const {
  if (exact_) return exact_->restriction(fp, p);
  Complex top = wedge_dual_value(plus_tangent_.at(fp), p);
  Complex sum = 0.0;
  for (std::size_t a = 0; a < minus_.size(); ++a) {
    Complex v = source_->restriction(a, p);
    if (v == 0.0) continue;
    sum += v * top / checked_denominator(tilde_[a][fp], p);
  }
  return sum;
}

FmImage fm_transform(const FlopConfig& cfg, const LocalizedKClass& a) {
  if (a.side() != Side::minus) throw std::invalid_argument("fm_transform: minus-side class expected");
  const int m = 2 * cfg.n();
  auto minus = enumerate_fixed_points(cfg, Side::minus);
  auto plus = enumerate_fixed_points(cfg, Side::plus);

  std::optional<LocalizedKClass> exact;
  std::vector<VirtualCharacter> res;
  bool ok = true;
  for (std::size_t b = 0; b < plus.size() && ok; ++b) {
    VirtualCharacter top = wedge_dual_expand(flopgeom::tangent_weights(cfg, plus[b]), m);
    VirtualCharacter acc(m);
    for (std::size_t i = 0; i < minus.size() && ok; ++i) {
      if (a.at(i).is_zero()) continue;
      VirtualCharacter term = a.at(i) * top;
      for (const auto& w : tilde_tangent_weights(cfg, minus[i], plus[b])) {
        auto q = term.divide_one_minus(-w);  // 1 - e^{-w}
        if (!q) {
          ok = false;
          break;
        }
        term = std::move(*q);
      }
      acc += term;
    }
    res.push_back(std::move(acc));
  }
  if (ok) exact.emplace(Side::plus, std::move(res));
  return FmImage(cfg, std::make_shared<LocalizedKClass>(a), std::move(exact));
}

FmImage fm_transform(const FlopConfig& cfg, std::shared_ptr<const KClass> a) {
  return FmImage(cfg, std::move(a), std::nullopt);
}

LocalizedKClass fm_generator_formula(const FlopConfig& cfg, const FixedPointLabel& delta_minus) {
  std::vector<VirtualCharacter> res;
  for (const auto& dp : enumerate_fixed_points(cfg, Side::plus)) {
    std::vector<Weight> lines;  // 1 - e^{x_{dp_i} - z_j} = 1 - e^{-w}, w = z_j - x_{dp_i}
    for (int di : dp.delta)
      for (int j = 0; j < cfg.n(); ++j)
        if (!contains(delta_minus.delta, j)) lines.push_back(cfg.wz(j) - cfg.wx(di));
    res.push_back(wedge_dual_expand(lines, 2 * cfg.n()));
  }
  return LocalizedKClass(Side::plus, std::move(res));
}

std::vector<Complex> chern_character(const FlopConfig& cfg, const KClass& a, Complex scale) {
  WeightPoint p = flopgeom::scaled(cfg.point(), scale);
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.restriction(i, p);
  return out;
}

Complex euler_characteristic_at(const FlopConfig& cfg, const KClass& a, const WeightPoint& p) {
  auto labels = enumerate_fixed_points(cfg, a.side());
  Complex sum = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    sum += a.restriction(i, p) / checked_denominator(flopgeom::tangent_weights(cfg, labels[i]), p);
  return sum;
}

Complex euler_characteristic(const FlopConfig& cfg, const KClass& a) {
  return euler_characteristic_at(cfg, a, cfg.point());
}

Complex chi_z_pairing(const FlopConfig& cfg, const KClass& c, const KClass& d, Complex z) {
  if (c.side() != d.side()) throw std::invalid_argument("chi_z_pairing: classes on different sides");
  if (z == 0.0) throw std::invalid_argument("chi_z_pairing: z = 0");
  WeightPoint p = flopgeom::scaled(cfg.point(), numkernel::kTwoPiI / z);
  WeightPoint mp = flopgeom::scaled(p, -1.0);
  auto labels = enumerate_fixed_points(cfg, c.side());
  Complex sum = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    sum += c.restriction(i, mp) * d.restriction(i, p) /
           checked_denominator(flopgeom::tangent_weights(cfg, labels[i]), p);
  return sum;
}

}  // namespace flopwall::ktheory
