#pragma once

#include <string>
#include <vector>

#include "flopwall/geometry.hpp"

namespace flopwall::wallcross {

using flopgeom::AbelianLabel;
using flopgeom::FixedPointLabel;
using flopgeom::FlopConfig;
using flopgeom::Side;
using flopgeom::WeightPoint;
using numkernel::Complex;

/// Cohomology class in restriction coordinates, one value per fixed point.
struct LocalizedCohClass {
  Side side;
  std::vector<Complex> values;
};

/// C_{delta^-, delta^+} at weight point p (defaults to the config weights).
Complex coeff_C(const FlopConfig& cfg, const FixedPointLabel& dm, const FixedPointLabel& dp);
Complex coeff_C(const FlopConfig& cfg, const FixedPointLabel& dm, const FixedPointLabel& dp,
                const WeightPoint& p);

/// C^K_{f^-, delta^+}: abelian version, any function f^-.
Complex coeff_CK(const FlopConfig& cfg, const AbelianLabel& f, const FixedPointLabel& dp,
                 const WeightPoint& p);
/// C^H = C^K times the root-factor sine ratio; zero for non-injective f.
Complex coeff_CH(const FlopConfig& cfg, const AbelianLabel& f, const FixedPointLabel& dp,
                 const WeightPoint& p);

struct TransitionMatrix {
  enum class Kind { C, CK, CH };
  Kind kind;
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::vector<Complex>> entries;  // [row][col]
};

std::string to_string(TransitionMatrix::Kind k);

TransitionMatrix transition_matrix(const FlopConfig& cfg, TransitionMatrix::Kind kind);
TransitionMatrix transition_matrix(const FlopConfig& cfg, TransitionMatrix::Kind kind, const WeightPoint& p);

/// (U_H beta)|_{delta^+} = sum_{delta^-} C_{delta^-,delta^+} beta|_{delta^-}, with C evaluated at p.
LocalizedCohClass uh_apply(const FlopConfig& cfg, const LocalizedCohClass& beta);
LocalizedCohClass uh_apply(const FlopConfig& cfg, const LocalizedCohClass& beta, const WeightPoint& p);

}  // namespace flopwall::wallcross
