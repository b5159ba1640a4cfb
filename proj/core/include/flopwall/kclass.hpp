#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "flopwall/character.hpp"
#include "flopwall/geometry.hpp"

namespace flopwall::ktheory {

using flopgeom::FixedPointLabel;
using flopgeom::FlopConfig;
using flopgeom::Side;

/// Anything that can be restricted to the fixed points of one side and
/// evaluated at an arbitrary (possibly complex, rescaled) weight point.
class KClass {
 public:
  virtual ~KClass() = default;
  virtual Side side() const = 0;
  virtual std::size_t size() const = 0;
  virtual Complex restriction(std::size_t fp, const WeightPoint& p) const = 0;
};

/// K-class stored exactly through its fixed-point restrictions (lexicographic order).
class LocalizedKClass final : public KClass {
 public:
  LocalizedKClass(Side side, std::vector<VirtualCharacter> restrictions)
      : side_(side), restrictions_(std::move(restrictions)) {}

  Side side() const override { return side_; }
  std::size_t size() const override { return restrictions_.size(); }
  Complex restriction(std::size_t fp, const WeightPoint& p) const override {
    return restrictions_.at(fp).evaluate(p);
  }

  const std::vector<VirtualCharacter>& restrictions() const { return restrictions_; }
  const VirtualCharacter& at(std::size_t fp) const { return restrictions_.at(fp); }

  LocalizedKClass& operator+=(const LocalizedKClass& o);
  LocalizedKClass& operator*=(std::int64_t c);
  friend bool operator==(const LocalizedKClass& a, const LocalizedKClass& b) {
    return a.side_ == b.side_ && a.restrictions_ == b.restrictions_;
  }

 private:
  Side side_;
  std::vector<VirtualCharacter> restrictions_;
};

LocalizedKClass trivial_class(const FlopConfig& cfg, Side side);
LocalizedKClass zero_class(const FlopConfig& cfg, Side side);

/// e_{delta^-}: restriction at delta_0 is prod_i prod_{j not in delta^-} (1 - e^{z_{delta_0 i} - z_j}).
LocalizedKClass generator_e(const FlopConfig& cfg, const FixedPointLabel& delta_minus);

/// Tangent weights of the common resolution at the fixed point (delta^-, delta^+).
std::vector<Weight> tilde_tangent_weights(const FlopConfig& cfg, const FixedPointLabel& delta_minus,
                                          const FixedPointLabel& delta_plus);

/// FM(A) computed by localization on the common resolution. Evaluates numerically
/// at any weight point; carries an exact form when every transfer term divides.
class FmImage final : public KClass {
 public:
  FmImage(const FlopConfig& cfg, std::shared_ptr<const KClass> source,
          std::optional<LocalizedKClass> exact);

  Side side() const override { return Side::plus; }
  std::size_t size() const override { return plus_.size(); }
  Complex restriction(std::size_t fp, const WeightPoint& p) const override;

  const std::optional<LocalizedKClass>& exact() const { return exact_; }

 private:
  std::shared_ptr<const KClass> source_;
  std::vector<FixedPointLabel> minus_, plus_;
  std::vector<std::vector<Weight>> plus_tangent_;
  std::vector<std::vector<std::vector<Weight>>> tilde_;  // [minus][plus]
  std::optional<LocalizedKClass> exact_;
};

FmImage fm_transform(const FlopConfig& cfg, const LocalizedKClass& a);
/// Numeric-only transform of an arbitrary minus-side class.
FmImage fm_transform(const FlopConfig& cfg, std::shared_ptr<const KClass> a);

/// Closed formula: FM(e_{delta^-})|_{delta^+} = prod_i prod_{j not in delta^-} (1 - e^{x_{delta^+ i} - z_j}).
LocalizedKClass fm_generator_formula(const FlopConfig& cfg, const FixedPointLabel& delta_minus);

/// Restrictions evaluated at scale * (config weights).
std::vector<Complex> chern_character(const FlopConfig& cfg, const KClass& a, Complex scale);

/// chi(A) by K-theoretic localization at the weight point p.
Complex euler_characteristic_at(const FlopConfig& cfg, const KClass& a, const WeightPoint& p);
Complex euler_characteristic(const FlopConfig& cfg, const KClass& a);

/// chi(C^vee (x) D) with all weights rescaled by 2 pi i / z.
Complex chi_z_pairing(const FlopConfig& cfg, const KClass& c, const KClass& d, Complex z);

}  // namespace flopwall::ktheory
