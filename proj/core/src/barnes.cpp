#include "flopwall/barnes.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

#include "flopwall/errors.hpp"

namespace flopwall::hypergeom {

using numkernel::kPi;
using numkernel::kTwoPiI;
using numkernel::log_gamma;
using numkernel::sin_over_2i;

namespace {

constexpr Complex kI{0.0, 1.0};

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Complex value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  Complex fc = f(c);
  Complex k = kWgk[7] * fc, g = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    Complex s = f(c - h * kXgk[j]) + f(c + h * kXgk[j]);
    k += kWgk[j] * s;
    if (j % 2 == 1) g += kWg[j / 2] * s;
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}

struct Adaptive {
  std::priority_queue<Panel> heap;
  Complex total = 0.0;
  double error = 0.0;
  int panels = 0;
};

template <class F>
void add_range(Adaptive& st, const F& f, double a, double b) {
  int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / 1.0)));
  double h = (b - a) / pieces;
  for (int i = 0; i < pieces; ++i) {
    Panel p = gk15(f, a + i * h, a + (i + 1) * h);
    st.total += p.value;
    st.error += p.error;
    st.heap.push(p);
    ++st.panels;
  }
}

template <class F>
void refine(Adaptive& st, const F& f, double rel_tol, int max_panels) {
  while (!st.heap.empty() && st.error > rel_tol * std::abs(st.total) && st.panels < max_panels) {
    Panel p = st.heap.top();
    st.heap.pop();
    double mid = 0.5 * (p.a + p.b);
    Panel l = gk15(f, p.a, mid), r = gk15(f, mid, p.b);
    st.total += l.value + r.value - p.value;
    st.error += l.error + r.error - p.error;
    st.heap.push(l);
    st.heap.push(r);
    ++st.panels;
  }
  if (st.error > rel_tol * std::abs(st.total))
    throw NonConvergence("barnes_integrate: panel budget exhausted");
}

struct Params {
  Complex xl;
  std::vector<Complex> c, a;
};

Params params(const FlopConfig& cfg, int l, const WeightPoint& p) {
  Params q;
  q.xl = p[l];
  for (int i = 0; i < cfg.n(); ++i) q.c.push_back((p[l] - p[cfg.n() + i]) / kTwoPiI);
  for (int j = 0; j < cfg.n(); ++j) q.a.push_back((p[l] - p[j]) / kTwoPiI);
  return q;
}

// log of the integrand, skipping Gamma(c_skip + s) when skip >= 0
Complex log_integrand(Complex s, Complex w, const Params& q, int m, int skip) {
  Complex sn = numkernel::sin_pi(s);
  if (std::abs(sn) < 1e-300) throw PoleError("barnes_integrand: integer argument");
  Complex v = std::log(kPi) - std::log(sn) + w * (s + q.xl / kTwoPiI) - kI * kPi * double(m) * s;
  for (std::size_t i = 0; i < q.c.size(); ++i)
    if (static_cast<int>(i) != skip) v += log_gamma(q.c[i] + s);
  for (const auto& a : q.a) v -= log_gamma(1.0 + a + s);
  return v;
}

double choose_sigma(const Params& q) {
  double best = -0.5, best_gap = -1.0;
  for (double cand : {-0.5, -0.4, -0.6, -0.3, -0.7, -0.2, -0.8}) {
    double gap = 1.0;
    for (const auto& c : q.c) {
      double re = -c.real();
      double frac = re - std::floor(re);  // real parts of -c - d modulo 1
      double cf = cand - std::floor(cand);
      gap = std::min(gap, std::min(std::abs(frac - cf), 1.0 - std::abs(frac - cf)));
    }
    if (gap > best_gap + 0.05) {
      best_gap = gap;
      best = cand;
    }
  }
  return best;
}

double sign_pow(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

Complex barnes_integrand(Complex s, Complex w, const FlopConfig& cfg, int l, const WeightPoint& p, int m) {
  return std::exp(log_integrand(s, w, params(cfg, l, p), m, -1));
}

Complex barnes_prefactor(const FlopConfig& cfg, int l, const WeightPoint& p) {
  Complex v = 1.0;
  for (int i = 0; i < cfg.n(); ++i) v *= sin_over_2i(p[l] - p[cfg.n() + i]) / kPi;
  return v;
}

BarnesResult barnes_integrate(Complex w, const FlopConfig& cfg, int l, const BarnesOptions& opt) {
  return barnes_integrate(w, cfg, l, cfg.point(), cfg.n() - 1, opt);
}

BarnesResult barnes_integrate(Complex w, const FlopConfig& cfg, int l, const WeightPoint& p, int m,
                              const BarnesOptions& opt) {
  const Params q = params(cfg, l, p);
  BarnesResult res;
  res.sigma = choose_sigma(q);
  const double sigma = res.sigma;

  const double kappa_up = kPi + w.imag() - kPi * m;
  const double kappa_down = kPi - w.imag() + kPi * m;
  if (kappa_up < 0.05 || kappa_down < 0.05)
    throw NonConvergence("barnes_integrate: w outside the strip of convergence");
  Complex sum_c = 0.0;
  for (const auto& c : q.c) sum_c += c;
  for (const auto& a : q.a) sum_c -= a;
  const double power = std::max(0.0, sum_c.real() - cfg.n());

  // Leftward poles that sit right of the line contribute explicit residues.
  for (std::size_t i = 0; i < q.c.size(); ++i) {
    double fact = 1.0;
    for (int d = 0;; ++d) {
      if (d > 0) fact *= d;
      Complex s = -q.c[i] - double(d);
      if (s.real() <= sigma) break;
      res.residue_correction += sign_pow(d) / fact * std::exp(log_integrand(s, w, q, m, static_cast<int>(i)));
    }
  }

  auto f = [&](double t) { return std::exp(log_integrand(Complex(sigma, t), w, q, m, -1)) / (2.0 * kPi); };
  auto tail = [&](double t) {
    double up = kappa_up - power / t, down = kappa_down - power / t;
    if (up <= 0.0 || down <= 0.0) return std::numeric_limits<double>::infinity();
    return 2.0 * (std::abs(f(t)) / up + std::abs(f(-t)) / down);
  };

  Adaptive st;
  double t = 8.0;
  add_range(st, f, -t, t);
  refine(st, f, 0.5 * opt.tol, opt.max_panels);
  while (tail(t) > 0.1 * opt.tol * std::max(std::abs(st.total), 1e-300)) {
    double t_new = std::min(1.5 * t, opt.t_max);
    if (t_new <= t) throw NonConvergence("barnes_integrate: tail bound not reached below t_max");
    add_range(st, f, t, t_new);
    add_range(st, f, -t_new, -t);
    refine(st, f, 0.5 * opt.tol, opt.max_panels);
    t = t_new;
  }
  res.height = t;
  res.panels = st.panels;
  res.line_integral = st.total;
  Complex pre = barnes_prefactor(cfg, l, p);
  res.value = pre * (-res.line_integral - res.residue_correction);
  res.error_estimate = std::abs(pre) * (st.error + tail(t));
  return res;
}

OffsetSeries plus_series_r1(const FlopConfig& cfg, int l, int order, const WeightPoint& p, int m) {
  OffsetSeries s;
  s.order = order;
  s.offset = p[l] / kTwoPiI;
  const int twist = cfg.n() - 1 - m;
  for (int e = 0; e <= order; ++e) s.coeffs[e] = sign_pow(long(twist) * e) * gamma_block(cfg, Side::plus, l, e, p);
  return s;
}

OffsetSeries minus_series_r1(const FlopConfig& cfg, int k, int order, const WeightPoint& p, int m) {
  OffsetSeries s;
  s.order = order;
  s.offset = -p[cfg.n() + k] / kTwoPiI;
  const int twist = cfg.n() - 1 - m;
  for (int d = 0; d <= order; ++d) s.coeffs[d] = sign_pow(long(twist) * d) * gamma_block(cfg, Side::minus, k, d, p);
  return s;
}

Complex continuation_coefficient(const FlopConfig& cfg, int k, int l, const WeightPoint& p, int m) {
  const int n = cfg.n();
  Complex v = std::exp(0.5 * m * (p[l] - p[n + k]));
  for (int i = 0; i < n; ++i)
    if (i != k) v *= sin_over_2i(p[l] - p[n + i]) / sin_over_2i(p[n + k] - p[n + i]);
  return v;
}

Complex continued_sum(const FlopConfig& cfg, int l, Complex w, int order, const WeightPoint& p, int m) {
  Complex sum = 0.0;
  for (int k = 0; k < cfg.n(); ++k)
    sum += continuation_coefficient(cfg, k, l, p, m) * minus_series_r1(cfg, k, order, p, m).evaluate(-w);
  return sum;
}

double PathSpec::pole_distance(int n, int r) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    Complex a = points[i], b = points[i + 1];
    for (int k = -6; k <= 6; ++k) {
      Complex pole(0.0, (n - r + 1) * kPi + 2.0 * kPi * k);
      Complex ab = b - a;
      double len2 = std::norm(ab);
      double t = len2 > 0 ? std::clamp(((pole - a) * std::conj(ab)).real() / len2, 0.0, 1.0) : 0.0;
      best = std::min(best, std::abs(a + t * ab - pole));
    }
  }
  return best;
}

PathSpec default_path(int n, int r, double re_max, int samples) {
  PathSpec path;
  const double h = (n - r) * kPi;
  path.points.emplace_back(-re_max, 0.0);
  for (int i = 0; i < samples; ++i) {
    double x = -re_max + 2.0 * re_max * i / (samples - 1);
    path.points.emplace_back(x, h);
  }
  path.points.emplace_back(re_max, 0.0);
  return path;
}

ContinuationReport verify_continuation_r1(const FlopConfig& cfg, int order, double q_in, double q_out,
                                          const BarnesOptions& opt) {
  return verify_continuation_r1(cfg, order, q_in, q_out, default_path(cfg.n(), cfg.r()), opt);
}

ContinuationReport verify_continuation_r1(const FlopConfig& cfg, int order, double q_in, double q_out,
                                          const PathSpec& path, const BarnesOptions& opt) {
  const int n = cfg.n(), m = n - cfg.r();
  const WeightPoint& p = cfg.point();
  ContinuationReport rep;
  auto rel = [](Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); };

  // Path points on the crossing line that lie in either convergence region,
  // plus |q| = q_in and three points past the wall.
  const double h = m * kPi, re_in = std::log(q_in), re_out = std::log(q_out);
  std::vector<Complex> inside = {Complex(re_in, h)};
  std::vector<Complex> outside = {Complex(re_out, h), Complex(re_out + 0.5, h), Complex(re_out + 1.0, h)};
  for (Complex w : path.points) {
    if (std::abs(w.imag() - h) > 1e-12) continue;
    if (w.real() <= re_in) inside.push_back(w);
    if (w.real() >= re_out) outside.push_back(w);
  }

  for (int l = 0; l < n; ++l) {
    const OffsetSeries plus = plus_series_r1(cfg, l, order, p, m);
    for (Complex w : inside) {
      Complex b = barnes_integrate(w, cfg, l, p, m, opt).value;
      Complex o = plus.evaluate(w);
      rep.cases.push_back({l, w, true, b, o, rel(b, o)});
    }
    for (Complex w : outside) {
      Complex b = barnes_integrate(w, cfg, l, p, m, opt).value;
      Complex o = continued_sum(cfg, l, w, order, p, m);
      rep.cases.push_back({l, w, false, b, o, rel(b, o)});
    }

    // Recover the coefficients from Barnes values alone.
    const int samples = 2 * n + 2;
    Eigen::MatrixXcd A(samples, n);
    Eigen::VectorXcd rhs(samples);
    for (int s = 0; s < samples; ++s) {
      double re = std::log(q_out) + 2.5 * s / (samples - 1);
      double im = m * kPi + 0.8 * (2.0 * s / (samples - 1) - 1.0);
      Complex w(re, im);
      rhs(s) = barnes_integrate(w, cfg, l, p, m, opt).value;
      for (int k = 0; k < n; ++k) A(s, k) = minus_series_r1(cfg, k, order, p, m).evaluate(-w);
    }
    Eigen::VectorXcd coef = A.colPivHouseholderQr().solve(rhs);
    double scale = 0.0;
    for (int k = 0; k < n; ++k) scale = std::max(scale, std::abs(continuation_coefficient(cfg, k, l, p, m)));
    for (int k = 0; k < n; ++k)
      rep.max_coefficient_err = std::max(
          rep.max_coefficient_err, std::abs(coef(k) - continuation_coefficient(cfg, k, l, p, m)) / scale);
  }
  for (const auto& c : rep.cases) rep.max_rel_err = std::max(rep.max_rel_err, c.rel_err);
  return rep;
}

}  // namespace flopwall::hypergeom
