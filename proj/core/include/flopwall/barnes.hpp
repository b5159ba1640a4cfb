#pragma once

#include <vector>

#include "flopwall/series.hpp"

namespace flopwall::hypergeom {

/// Integrand of the Mellin-Barnes representation of the plus-side series at
/// fixed point l (r = 1 form), without the prefactor:
///   pi/sin(pi s) e^{w(s + x_l/2pi i)} e^{-pi i m s} prod_i Gamma(c_i + s) / prod_j Gamma(1 + a_j + s)
/// with c_i = (x_l - z_i)/2pi i, a_j = (x_l - x_j)/2pi i. The phase m is n - 1 for r = 1
/// and n - r for the single-variable factors of higher rank.
Complex barnes_integrand(Complex s, Complex w, const FlopConfig& cfg, int l, const WeightPoint& p, int m);

/// prod_i sin_over_2i(x_l - z_i) / pi^n
Complex barnes_prefactor(const FlopConfig& cfg, int l, const WeightPoint& p);

struct BarnesOptions {
  double tol = 1e-12;     ///< relative accuracy target
  double t_max = 200.0;   ///< largest truncation height
  int max_panels = 20000;
};

struct BarnesResult {
  Complex value;             ///< continued series value
  Complex line_integral;     ///< (1/2 pi i) times the vertical-line integral
  Complex residue_correction;
  double sigma = -0.5;       ///< real part of the contour
  double height = 0.0;       ///< truncation height T
  double error_estimate = 0.0;
  int panels = 0;
};

/// Value of the plus-side series at w, analytically continued through the
/// strip around Im w = m pi, computed by quadrature on a vertical contour.
/// Poles of the leftward family that fall right of the line are restored
/// by explicit residues.
BarnesResult barnes_integrate(Complex w, const FlopConfig& cfg, int l, const WeightPoint& p, int m,
                              const BarnesOptions& opt = {});
BarnesResult barnes_integrate(Complex w, const FlopConfig& cfg, int l, const BarnesOptions& opt = {});

/// Plus-side single-variable series at l, with phase m (twist (-1)^{(n-1-m)e}).
OffsetSeries plus_series_r1(const FlopConfig& cfg, int l, int order, const WeightPoint& p, int m);
/// Minus-side single-variable series at k, same twist, in q_- = 1/q_+.
OffsetSeries minus_series_r1(const FlopConfig& cfg, int k, int order, const WeightPoint& p, int m);

/// Continuation coefficient e^{m(x_l - z_k)/2} prod_{i != k} sin_over_2i(x_l - z_i)/sin_over_2i(z_k - z_i).
Complex continuation_coefficient(const FlopConfig& cfg, int k, int l, const WeightPoint& p, int m);

/// sum_k coefficient(k, l) * minus_series_k(-w).
Complex continued_sum(const FlopConfig& cfg, int l, Complex w, int order, const WeightPoint& p, int m);

/// Points in the w-plane for the wall-crossing path.
struct PathSpec {
  std::vector<Complex> points;
  double pole_distance(int n, int r) const;  ///< distance to the nearest singular point
};

/// Re w from -re_max to re_max along Im w = (n - r) pi, joined to Im w = 0 at both ends.
PathSpec default_path(int n, int r, double re_max = 2.0, int samples = 9);

struct ContinuationCase {
  int l;
  Complex w;
  bool inside;  ///< true: compared with the plus series; false: with the continued sum
  Complex barnes;
  Complex oracle;
  double rel_err;
};

struct ContinuationReport {
  std::vector<ContinuationCase> cases;
  double max_rel_err = 0.0;
  double max_coefficient_err = 0.0;  ///< least-squares recovery of the coefficients
  bool pass(double tol) const { return max_rel_err < tol && max_coefficient_err < tol; }
};

/// Barnes vs series at |q| = q_in on the (n-r) pi line, Barnes vs continued
/// minus series at |q| = q_out, plus coefficient recovery by least squares.
/// For r = 1 these are the H-series; for r > 1 the single-variable factors.
ContinuationReport verify_continuation_r1(const FlopConfig& cfg, int order = 80, double q_in = 0.3,
                                          double q_out = 3.0, const BarnesOptions& opt = {});
/// Same, also comparing at the points of `path` that lie on the crossing line
/// inside |q| <= q_in or outside |q| >= q_out.
ContinuationReport verify_continuation_r1(const FlopConfig& cfg, int order, double q_in, double q_out,
                                          const PathSpec& path, const BarnesOptions& opt = {});

}  // namespace flopwall::hypergeom
