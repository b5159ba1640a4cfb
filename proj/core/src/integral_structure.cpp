#include "flopwall/integral_structure.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "flopwall/errors.hpp"

namespace flopwall::wallcross {

using numkernel::kTwoPiI;

PsiContext::PsiContext(const FlopConfig& cfg, Side side, Complex z) : PsiContext(cfg, side, std::log(z), 0) {
  if (z == 0.0) throw std::invalid_argument("PsiContext: z = 0");
}

PsiContext PsiContext::from_log(const FlopConfig& cfg, Side side, Complex log_z) {
  return PsiContext(cfg, side, log_z, 0);
}

PsiContext PsiContext::rotated(double angle) const {
  return PsiContext(cfg_, side_, log_z_ + Complex(0.0, angle), 0);
}

PsiContext::PsiContext(const FlopConfig& cfg, Side side, Complex log_z, int)
    : cfg_(cfg), side_(side), log_z_(log_z), z_(std::exp(log_z)) {
  scaled_ = flopgeom::scaled(cfg_.point(), kTwoPiI / z_);
  labels_ = flopgeom::enumerate_fixed_points(cfg_, side_);
  const double half_dim = 0.5 * cfg_.dim();
  for (const auto& label : labels_) {
    auto tw = flopgeom::tangent_weights(cfg_, label);
    Complex rho = 0.0, gam = 1.0;
    for (const auto& w : tw) {
      Complex a = cfg_.evaluate(w) / z_;
      rho += a;
      gam *= numkernel::gamma(1.0 + a);
    }
    prefactor_.push_back(std::exp(half_dim * log_z_) * std::exp(rho * log_z_) * gam);
    tangent_.push_back(std::move(tw));
  }
}

LocalizedCohClass psi_on_coh(const PsiContext& ctx, const LocalizedCohClass& phi) {
  if (phi.side != ctx.side() || phi.values.size() != ctx.labels().size())
    throw std::invalid_argument("psi: class does not match context");
  LocalizedCohClass out = phi;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= ctx.prefactor(i);
  return out;
}

LocalizedCohClass psi_inverse(const PsiContext& ctx, const LocalizedCohClass& f) {
  if (f.side != ctx.side() || f.values.size() != ctx.labels().size())
    throw std::invalid_argument("psi_inverse: class does not match context");
  LocalizedCohClass out = f;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] /= ctx.prefactor(i);
  return out;
}

LocalizedCohClass psi_apply(const PsiContext& ctx, const ktheory::KClass& a) {
  if (a.side() != ctx.side()) throw std::invalid_argument("psi_apply: side mismatch");
  LocalizedCohClass ch{a.side(), ktheory::chern_character(ctx.config(), a, kTwoPiI / ctx.z())};
  return psi_on_coh(ctx, ch);
}

Complex pairing(const FlopConfig& cfg, const LocalizedCohClass& a, const LocalizedCohClass& b) {
  if (a.side != b.side || a.values.size() != b.values.size())
    throw std::invalid_argument("pairing: classes do not match");
  auto labels = flopgeom::enumerate_fixed_points(cfg, a.side);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    double e = flopgeom::euler_class_normal(cfg, labels[i]).to_double();
    sum += a.values[i] * b.values[i] / e;
  }
  return sum;
}

LocalizedCohClass u_apply(const PsiContext& plus, const PsiContext& minus, const LocalizedCohClass& beta) {
  if (plus.side() != Side::plus || minus.side() != Side::minus)
    throw std::invalid_argument("u_apply: contexts must be (plus, minus)");
  if (std::abs(plus.log_z() - minus.log_z()) > 1e-15 * (1.0 + std::abs(plus.log_z())))
    throw std::invalid_argument("u_apply: contexts use different z");
  return psi_on_coh(plus, uh_apply(plus.config(), psi_inverse(minus, beta), plus.scaled_point()));
}

std::vector<std::vector<Complex>> u_matrix(const PsiContext& plus, const PsiContext& minus) {
  const std::size_t nm = minus.labels().size();
  std::vector<std::vector<Complex>> m(plus.labels().size(), std::vector<Complex>(nm));
  for (std::size_t a = 0; a < nm; ++a) {
    LocalizedCohClass e{Side::minus, std::vector<Complex>(nm, 0.0)};
    e.values[a] = 1.0;
    auto col = u_apply(plus, minus, e);
    for (std::size_t b = 0; b < col.values.size(); ++b) m[b][a] = col.values[b];
  }
  return m;
}

MatrixConditioning conditioning(const std::vector<std::vector<Complex>>& m) {
  const Eigen::Index rows = static_cast<Eigen::Index>(m.size());
  const Eigen::Index cols = rows ? static_cast<Eigen::Index>(m[0].size()) : 0;
  if (rows != cols) throw std::invalid_argument("conditioning: square matrix expected");
  Eigen::MatrixXcd a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = m[i][j];
  MatrixConditioning c{};
  c.det = a.determinant();
  double norms = 1.0;
  for (Eigen::Index i = 0; i < rows; ++i) norms *= a.row(i).norm();
  c.hadamard_ratio = norms > 0.0 ? std::abs(c.det) / norms : 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const auto& s = svd.singularValues();
  c.rcond = s.size() && s(0) > 0.0 ? s(s.size() - 1) / s(0) : 0.0;
  return c;
}

}  // namespace flopwall::wallcross
