#pragma once

#include <string>
#include <vector>

#include "flopwall/config.hpp"

namespace flopwall::flopgeom {

/// Torus-fixed point of X_side: an increasing r-subset (0-based internally).
struct FixedPointLabel {
  Side side;
  std::vector<int> delta;

  std::string str() const;  ///< 1-based, e.g. "{1,3}"
  friend bool operator==(const FixedPointLabel&, const FixedPointLabel&) = default;
  friend auto operator<=>(const FixedPointLabel&, const FixedPointLabel&) = default;
};

/// Fixed point of the abelian quotient: any function {1..r} -> {1..n}.
struct AbelianLabel {
  Side side;
  std::vector<int> f;

  bool injective() const;
  std::string str() const;
  friend bool operator==(const AbelianLabel&, const AbelianLabel&) = default;
};

struct FixedPointGeometry {
  FixedPointLabel label;
  std::vector<Weight> chern_roots;
  std::vector<Weight> tangent_weights;
  Rational euler_normal;
};

std::vector<FixedPointLabel> enumerate_fixed_points(const FlopConfig& cfg, Side side);
std::vector<AbelianLabel> enumerate_abelian(const FlopConfig& cfg, Side side, bool injective_only);

/// Position of a label in enumerate_fixed_points order.
std::size_t fixed_point_index(const FlopConfig& cfg, const FixedPointLabel& label);

std::vector<Weight> restrict_chern_roots(const FlopConfig& cfg, const FixedPointLabel& label);

/// Weights of the tangent space at the fixed point, 2rn - r^2 of them.
/// Throws DegenerateWeight if one evaluates to zero.
std::vector<Weight> tangent_weights(const FlopConfig& cfg, const FixedPointLabel& label);

Rational euler_class_normal(const FlopConfig& cfg, const FixedPointLabel& label);

FixedPointGeometry fixed_point_geometry(const FlopConfig& cfg, const FixedPointLabel& label);

struct RelationEntry {
  FixedPointLabel label;
  int degree;
  bool pass;
};

struct RelationReport {
  std::vector<RelationEntry> entries;
  bool all_pass() const;
};

/// Checks that the degree-l part of the total Chern class ratio vanishes at
/// every fixed point for n - r < l <= n, in exact polynomial arithmetic.
RelationReport check_relations(const FlopConfig& cfg, Side side);

}  // namespace flopwall::flopgeom
