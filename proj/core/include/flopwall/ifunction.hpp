#pragma once

#include <vector>

#include "flopwall/barnes.hpp"
#include "flopwall/kclass.hpp"
#include "flopwall/series.hpp"

namespace flopwall::hypergeom {

/// Restriction of the (specialized) I-function at a fixed point, built directly
/// from the hypergeometric factor with every infinite product telescoped.
/// `delta` may be given in any order. Series in q truncated at total degree `order`.
OffsetSeries i_function(const FlopConfig& cfg, Side side, const std::vector<int>& delta, int order, Complex z);
OffsetSeries i_function(const FlopConfig& cfg, Side side, const FixedPointLabel& delta, int order, Complex z);

/// prod_{h<=0}(a + h z) / prod_{h<=d}(a + h z) for either sign of d.
Complex telescoped_ratio(Complex a, Complex z, int d);

/// The scalar linking I to the H-function at a fixed point:
/// z^{dim/2} exp(rho log z / z) Gamma-hat(z) times z^{-dim/2} exp(-rho_X log z / z).
Complex i_factor(const FlopConfig& cfg, const FixedPointLabel& delta, Complex log_z);

/// I restriction assembled as i_factor times the H-function at the rescaled weights.
OffsetSeries i_function_factored(const FlopConfig& cfg, const FixedPointLabel& delta, int order, Complex log_z);

/// Z(E) = sum_delta I|_delta(e^{-pi i} z, w) Psi(E)|_delta(z) / e(N_delta), series form.
Complex central_charge(const FlopConfig& cfg, Side side, const ktheory::KClass& e, Complex w, Complex z,
                       int order);

/// r = 1, plus side, with I continued past the wall by Barnes quadrature.
Complex central_charge_continued(const FlopConfig& cfg, const ktheory::KClass& e, Complex w, Complex z,
                                 const BarnesOptions& opt = {});

}  // namespace flopwall::hypergeom
