#pragma once

#include <vector>

#include "flopwall/kclass.hpp"
#include "flopwall/transfer.hpp"

namespace flopwall::wallcross {

/// Evaluation data for the Gamma-integral-structure map at one numeric z.
/// z is represented through log z so that e^{-pi i} z stays on a definite branch.
class PsiContext {
 public:
  /// Principal branch of log z.
  PsiContext(const FlopConfig& cfg, Side side, Complex z);
  static PsiContext from_log(const FlopConfig& cfg, Side side, Complex log_z);

  /// Same side and weights, with log z shifted by i*angle.
  PsiContext rotated(double angle) const;
  PsiContext on_side(Side s) const { return from_log(cfg_, s, log_z_); }

  const FlopConfig& config() const { return cfg_; }
  Side side() const { return side_; }
  Complex z() const { return z_; }
  Complex log_z() const { return log_z_; }

  /// Weight point rescaled by 2 pi i / z.
  const WeightPoint& scaled_point() const { return scaled_; }
  const std::vector<FixedPointLabel>& labels() const { return labels_; }
  const std::vector<std::vector<flopgeom::Weight>>& tangent() const { return tangent_; }

  /// z^{dim/2} exp((sum_t w_t/z) log z) prod_t Gamma(1 + w_t/z) at fixed point i.
  Complex prefactor(std::size_t i) const { return prefactor_.at(i); }

 private:
  PsiContext(const FlopConfig& cfg, Side side, Complex log_z, int);
  FlopConfig cfg_;
  Side side_;
  Complex log_z_, z_;
  WeightPoint scaled_;
  std::vector<FixedPointLabel> labels_;
  std::vector<std::vector<flopgeom::Weight>> tangent_;
  std::vector<Complex> prefactor_;
};

/// psi on restriction vectors expressed in the rescaled weight frame.
LocalizedCohClass psi_on_coh(const PsiContext& ctx, const LocalizedCohClass& phi);
LocalizedCohClass psi_inverse(const PsiContext& ctx, const LocalizedCohClass& f);
/// Psi(A) = psi(ch(A) at scale 2 pi i / z).
LocalizedCohClass psi_apply(const PsiContext& ctx, const ktheory::KClass& a);

/// sum_delta a|_delta b|_delta / e(N_delta).
Complex pairing(const FlopConfig& cfg, const LocalizedCohClass& a, const LocalizedCohClass& b);

/// U = psi_+ o U_H o psi_-^{-1}; both contexts must share log z.
LocalizedCohClass u_apply(const PsiContext& plus, const PsiContext& minus, const LocalizedCohClass& beta);

/// Matrix of u_apply on the fixed-point basis, [plus][minus].
std::vector<std::vector<Complex>> u_matrix(const PsiContext& plus, const PsiContext& minus);

struct MatrixConditioning {
  Complex det;
  double hadamard_ratio;  ///< |det| / prod of row norms, in [0, 1]
  double rcond;           ///< smallest / largest singular value
};
MatrixConditioning conditioning(const std::vector<std::vector<Complex>>& m);

}  // namespace flopwall::wallcross
