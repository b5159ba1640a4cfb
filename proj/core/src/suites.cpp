#include "flopwall/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <thread>

#include "flopwall/antisym.hpp"
#include "flopwall/barnes.hpp"
#include "flopwall/errors.hpp"
#include "flopwall/geometry.hpp"
#include "flopwall/ifunction.hpp"
#include "flopwall/integral_structure.hpp"
#include "flopwall/kclass.hpp"
#include "flopwall/series.hpp"
#include "flopwall/transfer.hpp"

namespace flopwall::cli {

using flopgeom::FixedPointLabel;
using flopgeom::Side;
using ktheory::LocalizedKClass;

namespace {

double rel_err(Complex a, Complex b) {
  double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

double vec_err(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num = std::max(num, std::abs(a[i] - b[i]));
    den = std::max({den, std::abs(a[i]), std::abs(b[i])});
  }
  return den == 0.0 ? 0.0 : num / den;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string fmt(Complex v) { return v.imag() == 0.0 ? fmt(v.real()) : fmt(v.real()) + (v.imag() < 0 ? "" : "+") + fmt(v.imag()) + "i"; }

CaseResult make_case(std::string suite, std::string name, const FlopConfig& cfg) {
  CaseResult c;
  c.suite = std::move(suite);
  c.name = std::move(name);
  c.params["n"] = std::to_string(cfg.n());
  c.params["r"] = std::to_string(cfg.r());
  return c;
}

CaseResult& finish(CaseResult& c, double err, double tol) {
  c.max_rel_err = err;
  c.status = (err <= tol) ? Status::pass : Status::fail;  // NaN fails
  c.params["tol"] = fmt(tol);
  return c;
}

std::vector<LocalizedKClass> minus_generators(const FlopConfig& cfg) {
  std::vector<LocalizedKClass> out;
  for (const auto& dm : flopgeom::enumerate_fixed_points(cfg, Side::minus))
    out.push_back(ktheory::generator_e(cfg, dm));
  return out;
}

LocalizedKClass random_combination(const FlopConfig& cfg, const std::vector<LocalizedKClass>& gens,
                                   std::mt19937_64& rng) {
  while (true) {
    LocalizedKClass a = ktheory::zero_class(cfg, Side::minus);
    bool nonzero = false;
    for (const auto& g : gens) {
      long k = static_cast<long>(rng() % 7) - 3;
      if (!k) continue;
      LocalizedKClass t = g;
      t *= k;
      a += t;
      nonzero = true;
    }
    if (nonzero) return a;
  }
}

long binomial(int n, int k) {
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"identities", "geometry",       "ktheory", "wallcross",
                                                 "continuation", "central-charge", "all",     "acceptance"};
  return names;
}

std::vector<CaseResult> run_cases(const std::vector<std::function<CaseResult()>>& tasks, unsigned workers) {
  std::vector<CaseResult> out(tasks.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(1, tasks.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      auto t0 = std::chrono::steady_clock::now();
      try {
        out[i] = tasks[i]();
      } catch (const std::exception& e) {
        out[i].status = Status::error;
        out[i].message = e.what();
        out[i].max_rel_err = std::nan("");
      }
      out[i].runtime_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned k = 1; k < workers; ++k) pool.emplace_back(work);
  work();
  return out;
}

CaseResult check_antisym(int r, int samples, std::uint64_t seed) {
  CaseResult c;
  c.suite = "identities";
  c.name = "antisymmetric-identity";
  c.params["r"] = std::to_string(r);
  c.params["samples"] = std::to_string(samples);
  c.params["seed"] = std::to_string(seed);
  auto rep = wallcross::antisym_identity_check(r, samples, seed);
  c.params["symbolic"] = rep.symbolic_checked ? "yes" : "no";
  c.max_rel_err = rep.sample_failures ? 1.0 : 0.0;
  c.status = rep.pass() ? Status::pass : Status::fail;
  if (!rep.pass())
    c.message = std::to_string(rep.sample_failures) + " sample failures" +
                (rep.symbolic_checked && !rep.symbolic_equal ? ", symbolic mismatch" : "") +
                (rep.symbolic_checked && !rep.leading_coefficient_ok ? ", leading coefficient" : "");
  return c;
}

CaseResult check_sr_collapse(const FlopConfig& cfg, double tol) {
  CaseResult c = make_case("identities", "sr-collapse", cfg);
  const auto& p = cfg.point();
  std::vector<Complex> collapsed, direct;
  for (const auto& dm : flopgeom::enumerate_fixed_points(cfg, Side::minus))
    for (const auto& dp : flopgeom::enumerate_fixed_points(cfg, Side::plus)) {
      std::vector<int> f = dm.delta;
      Complex sum = 0.0;
      do sum += wallcross::coeff_CH(cfg, {Side::minus, f}, dp, p);
      while (std::next_permutation(f.begin(), f.end()));
      collapsed.push_back(sum);
      direct.push_back(wallcross::coeff_C(cfg, dm, dp, p));
    }
  return finish(c, vec_err(collapsed, direct), tol);
}

CaseResult check_cohomology_relations(const FlopConfig& cfg, Side side) {
  CaseResult c = make_case("geometry", "cohomology-relations", cfg);
  c.params["side"] = flopgeom::to_string(side);
  auto rep = flopgeom::check_relations(cfg, side);
  int failures = 0;
  for (const auto& e : rep.entries)
    if (!e.pass) {
      ++failures;
      if (c.message.empty()) c.message = "first failure at " + e.label.str() + " degree " + std::to_string(e.degree);
    }
  c.params["checks"] = std::to_string(rep.entries.size());
  return finish(c, failures ? 1.0 : 0.0, 0.0);
}

CaseResult check_fixed_point_count(const FlopConfig& cfg) {
  CaseResult c = make_case("geometry", "fixed-points", cfg);
  bool ok = true;
  for (Side s : {Side::minus, Side::plus}) {
    auto labels = flopgeom::enumerate_fixed_points(cfg, s);
    ok = ok && static_cast<long>(labels.size()) == binomial(cfg.n(), cfg.r());
    for (const auto& l : labels) {
      ok = ok && static_cast<int>(flopgeom::tangent_weights(cfg, l).size()) == cfg.dim();
      ok = ok && !flopgeom::euler_class_normal(cfg, l).is_zero();
    }
  }
  return finish(c, ok ? 0.0 : 1.0, 0.0);
}

CaseResult check_fm_closed(const FlopConfig& cfg, double tol) {
  CaseResult c = make_case("ktheory", "fm-generator-formula", cfg);
  double err = 0.0;
  int exact = 0, total = 0;
  for (const auto& dm : flopgeom::enumerate_fixed_points(cfg, Side::minus)) {
    auto img = ktheory::fm_transform(cfg, ktheory::generator_e(cfg, dm));
    auto formula = ktheory::fm_generator_formula(cfg, dm);
    ++total;
    if (img.exact()) {
      ++exact;
      if (!(*img.exact() == formula)) err = std::max(err, 1.0);
    }
    for (Complex s : {Complex(1.0), Complex(0.4, 0.9)}) {
      auto p = flopgeom::scaled(cfg.point(), s);
      std::vector<Complex> a, b;
      for (std::size_t i = 0; i < img.size(); ++i) {
        a.push_back(img.restriction(i, p));
        b.push_back(formula.restriction(i, p));
      }
      err = std::max(err, vec_err(a, b));
    }
  }
  c.params["exact"] = std::to_string(exact) + "/" + std::to_string(total);
  return finish(c, err, tol);
}

CaseResult check_fm_chern(const FlopConfig& cfg, double tol) {
  CaseResult c = make_case("ktheory", "fm-chern-diagram", cfg);
  double err = 0.0;
  for (const auto& dm : flopgeom::enumerate_fixed_points(cfg, Side::minus)) {
    auto e = ktheory::generator_e(cfg, dm);
    auto img = ktheory::fm_transform(cfg, e);
    for (Complex s : {Complex(1.0), Complex(0.3, 0.7)}) {
      wallcross::LocalizedCohClass beta{Side::minus, ktheory::chern_character(cfg, e, s)};
      auto lhs = wallcross::uh_apply(cfg, beta, flopgeom::scaled(cfg.point(), s));
      err = std::max(err, vec_err(lhs.values, ktheory::chern_character(cfg, img, s)));
    }
  }
  return finish(c, err, tol);
}

CaseResult check_euler_invariance(const FlopConfig& cfg, Complex z, std::uint64_t seed, int combos, double tol) {
  CaseResult c = make_case("ktheory", "euler-invariance", cfg);
  c.params["seed"] = std::to_string(seed);
  c.params["z"] = fmt(z);
  std::mt19937_64 rng(seed);
  auto gens = minus_generators(cfg);
  std::vector<Complex> chi_m, chi_p, chiz_m, chiz_p;
  for (int k = 0; k < combos; ++k) {
    auto a = random_combination(cfg, gens, rng);
    auto b = random_combination(cfg, gens, rng);
    auto fa = ktheory::fm_transform(cfg, a);
    auto fb = ktheory::fm_transform(cfg, b);
    chi_m.push_back(ktheory::euler_characteristic(cfg, a));
    chi_p.push_back(ktheory::euler_characteristic(cfg, fa));
    chiz_m.push_back(ktheory::chi_z_pairing(cfg, a, b, z));
    chiz_p.push_back(ktheory::chi_z_pairing(cfg, fa, fb, z));
  }
  return finish(c, std::max(vec_err(chi_m, chi_p), vec_err(chiz_m, chiz_p)), tol);
}

CaseResult check_iritani(const FlopConfig& cfg, Complex z, double tol) {
  CaseResult c = make_case("wallcross", "iritani-pairing", cfg);
  c.params["z"] = fmt(z);
  std::vector<LocalizedKClass> minus = minus_generators(cfg);
  minus.push_back(ktheory::trivial_class(cfg, Side::minus));
  std::vector<ktheory::FmImage> plus;
  for (const auto& a : minus) plus.push_back(ktheory::fm_transform(cfg, a));
  const double scale = std::pow(2.0 * numkernel::kPi, cfg.dim());
  double err = 0.0;
  // Gram matrices compared entrywise against their largest entry; many entries vanish.
  auto run = [&](Side side, auto const& classes) {
    wallcross::PsiContext ctx(cfg, side, z);
    auto rot = ctx.rotated(-numkernel::kPi);
    std::vector<Complex> lhs, rhs;
    for (const auto& a : classes)
      for (const auto& b : classes) {
        lhs.push_back(wallcross::pairing(cfg, wallcross::psi_apply(rot, a), wallcross::psi_apply(ctx, b)));
        rhs.push_back(scale * ktheory::chi_z_pairing(cfg, a, b, z));
      }
    err = std::max(err, vec_err(lhs, rhs));
  };
  run(Side::minus, minus);
  run(Side::plus, plus);
  return finish(c, err, tol);
}

CaseResult check_symplectic(const FlopConfig& cfg, Complex z, std::uint64_t seed, int pairs, double tol) {
  CaseResult c = make_case("wallcross", "symplectic", cfg);
  c.params["z"] = fmt(z);
  c.params["seed"] = std::to_string(seed);
  wallcross::PsiContext m(cfg, Side::minus, z);
  auto m_rot = m.rotated(-numkernel::kPi);
  auto p = m.on_side(Side::plus);
  auto p_rot = m_rot.on_side(Side::plus);
  std::mt19937_64 rng(seed);
  auto gens = minus_generators(cfg);
  double err = 0.0;
  std::vector<Complex> pair_p, pair_m;
  for (int k = 0; k < pairs; ++k) {
    auto a = random_combination(cfg, gens, rng);
    auto b = random_combination(cfg, gens, rng);
    auto pa = wallcross::psi_apply(m_rot, a);
    auto pb = wallcross::psi_apply(m, b);
    auto ua = wallcross::u_apply(p_rot, m_rot, pa);
    auto ub = wallcross::u_apply(p, m, pb);
    pair_p.push_back(wallcross::pairing(cfg, ua, ub));
    pair_m.push_back(wallcross::pairing(cfg, pa, pb));
    // U intertwines the two integral structures with FM.
    err = std::max(err, vec_err(ub.values, wallcross::psi_apply(p, ktheory::fm_transform(cfg, b)).values));
  }
  err = std::max(err, vec_err(pair_p, pair_m));
  auto cond = wallcross::conditioning(wallcross::u_matrix(p, m));
  c.params["hadamard_ratio"] = fmt(cond.hadamard_ratio);
  c.params["rcond"] = fmt(cond.rcond);
  finish(c, err, tol);
  if (!(cond.hadamard_ratio > 1e-10)) {
    c.status = Status::fail;
    c.message = "U is numerically singular";
  }
  return c;
}

CaseResult check_structural(const FlopConfig& cfg, int order, double tol) {
  CaseResult c = make_case("wallcross", "k-series-decomposition", cfg);
  c.params["order"] = std::to_string(order);
  const int r = cfg.r();
  double err = 0.0;
  for (Side side : {Side::plus, Side::minus}) {
    const double sign = (side == Side::plus || (r * (r - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
    for (const auto& d : flopgeom::enumerate_fixed_points(cfg, side)) {
      auto k = hypergeom::h_series(cfg, side, d.delta, order, cfg.point());
      std::vector<hypergeom::OffsetSeries> f;
      for (int i = 0; i < r; ++i) f.push_back(hypergeom::f_factor_series(cfg, side, d.delta, i, order, cfg.point()));
      auto dh = hypergeom::delta_hat_apply(hypergeom::tensor_product(f));
      for (const auto& [e, v] : k.coeffs) err = std::max(err, rel_err(v, sign * dh.coefficient(e)));
      for (int i = 0; i < r; ++i) err = std::max(err, rel_err(k.offsets[i], dh.offsets[i]));
    }
  }
  return finish(c, err, tol);
}

CaseResult check_ode(const FlopConfig& cfg, int order, double tol) {
  CaseResult c = make_case("wallcross", "ode-annihilation", cfg);
  c.params["order"] = std::to_string(order);
  double err = 0.0;
  for (Side side : {Side::plus, Side::minus})
    for (const auto& d : flopgeom::enumerate_fixed_points(cfg, side)) {
      for (int k = 0; k < cfg.r(); ++k) {
        auto f = hypergeom::f_factor_series(cfg, side, d.delta, k, order, cfg.point());
        err = std::max(err, hypergeom::ode_check(f, cfg, side).max_relative);
      }
      if (cfg.r() == 1) {
        auto h = hypergeom::h_series(cfg, side, d, order).specialize();
        err = std::max(err, hypergeom::ode_check(h, cfg, side).max_relative);
      }
    }
  return finish(c, err, tol);
}

CaseResult check_continuation(const FlopConfig& cfg, int order, const PathParams& path, double tol) {
  CaseResult c = make_case("continuation", "barnes-continuation", cfg);
  c.params["order"] = std::to_string(order);
  c.params["q_in"] = fmt(path.q_in);
  c.params["q_out"] = fmt(path.q_out);
  auto rep = hypergeom::verify_continuation_r1(cfg, order, path.q_in, path.q_out,
                                               hypergeom::default_path(cfg.n(), cfg.r(), path.re_max, path.samples));
  c.params["points"] = std::to_string(rep.cases.size());
  c.params["coefficient_err"] = fmt(rep.max_coefficient_err);
  return finish(c, std::max(rep.max_rel_err, rep.max_coefficient_err), tol);
}

CaseResult check_i_factorization(const FlopConfig& cfg, Complex z, int order, double tol) {
  CaseResult c = make_case("central-charge", "i-factorization", cfg);
  c.params["z"] = fmt(z);
  c.params["order"] = std::to_string(order);
  const Complex log_z = std::log(z);
  double err = 0.0;
  for (Side side : {Side::plus, Side::minus})
    for (const auto& d : flopgeom::enumerate_fixed_points(cfg, side)) {
      auto direct = hypergeom::i_function(cfg, side, d, order, z);
      auto fact = hypergeom::i_function_factored(cfg, d, order, log_z);
      err = std::max(err, rel_err(direct.offset, fact.offset));
      for (int e = 0; e <= order; ++e) err = std::max(err, rel_err(direct.coefficient(e), fact.coefficient(e)));
    }
  return finish(c, err, tol);
}

CaseResult check_central_charge(const FlopConfig& cfg, Complex z, double q_out, int order, double tol) {
  CaseResult c = make_case("central-charge", "continued-central-charge", cfg);
  c.params["z"] = fmt(z);
  c.params["order"] = std::to_string(order);
  const Complex w(std::log(q_out), (cfg.n() - 1) * numkernel::kPi);
  c.params["w"] = fmt(w);
  std::vector<LocalizedKClass> classes = {ktheory::trivial_class(cfg, Side::minus)};
  for (auto& g : minus_generators(cfg)) classes.push_back(std::move(g));
  double err = 0.0;
  for (const auto& e : classes) {
    Complex lhs = hypergeom::central_charge_continued(cfg, ktheory::fm_transform(cfg, e), w, z);
    Complex rhs = hypergeom::central_charge(cfg, Side::minus, e, -w, z, order);
    err = std::max(err, rel_err(lhs, rhs));
  }
  return finish(c, err, tol);
}

namespace {

using Task = std::function<CaseResult()>;

void add_suite_tasks(std::vector<Task>& tasks, const std::string& suite, const RunConfig& rc,
                     const FlopConfig& cfg) {
  const double tol = rc.tolerance(suite);
  const auto seed = rc.seed;
  if (suite == "identities") {
    tasks.push_back([=] { return check_antisym(cfg.r(), 20, seed); });
    tasks.push_back([=] { return check_sr_collapse(cfg, tol); });
  } else if (suite == "geometry") {
    tasks.push_back([=] { return check_fixed_point_count(cfg); });
    tasks.push_back([=] { return check_cohomology_relations(cfg, Side::minus); });
    tasks.push_back([=] { return check_cohomology_relations(cfg, Side::plus); });
  } else if (suite == "ktheory") {
    tasks.push_back([=] { return check_fm_closed(cfg, std::min(tol, 1e-12)); });
    tasks.push_back([=] { return check_fm_chern(cfg, tol); });
    tasks.push_back([=, z = rc.z_eval] { return check_euler_invariance(cfg, z, seed, 5, tol); });
  } else if (suite == "wallcross") {
    tasks.push_back([=, z = rc.z_eval] { return check_iritani(cfg, z, tol); });
    tasks.push_back([=, z = rc.z_eval] { return check_symplectic(cfg, z, seed, 10, tol); });
    tasks.push_back([=] { return check_structural(cfg, std::min(rc.order, 10), std::max(tol * 1e-2, 1e-12)); });
    tasks.push_back([=] { return check_ode(cfg, rc.order, std::max(tol * 1e-2, 1e-10)); });
  } else if (suite == "continuation") {
    tasks.push_back([=] { return check_continuation(cfg, std::max(rc.order, 80), rc.path, tol); });
  } else if (suite == "central-charge") {
    tasks.push_back([=, z = rc.z_eval] { return check_i_factorization(cfg, z, std::min(rc.order, 20), 1e-10); });
    if (cfg.r() == 1)
      tasks.push_back([=, z = rc.z_eval] {
        return check_central_charge(cfg, z, rc.path.q_out, std::max(rc.order, 80), tol);
      });
  } else {
    throw ConfigError("unknown suite '" + suite + "'");
  }
}

}  // namespace

bool CriterionResult::pass() const {
  if (time_limit > 0.0 && seconds > time_limit) return false;
  for (const auto& c : cases)
    if (c.status != Status::pass) return false;
  return !cases.empty();
}

CriterionResult run_criterion(int id, std::uint64_t seed, unsigned workers) {
  CriterionResult res;
  res.id = id;
  std::vector<Task> tasks;
  auto cfg = [&](int r, int n) { return random_config(n, r, seed); };
  using RN = std::vector<std::pair<int, int>>;
  const RN diagram = {{1, 2}, {1, 3}, {2, 3}, {2, 4}};
  const Complex z_pair[] = {Complex(2.0), Complex(3.0, 1.0)};
  switch (id) {
    case 1:
      res.title = "antisymmetric identity, r = 1..6";
      res.time_limit = 10.0;
      for (int r = 1; r <= 6; ++r) tasks.push_back([=] { return check_antisym(r, 20, seed + r); });
      break;
    case 2:
      res.title = "S_r collapse of C^H onto C";
      res.time_limit = 10.0;
      for (auto [r, n] : RN{{2, 3}, {2, 4}, {3, 5}})
        tasks.push_back([=] { return check_sr_collapse(cfg(r, n), 1e-10); });
      break;
    case 3:
      res.title = "U_H o ch = ch o FM on generators";
      res.time_limit = 30.0;
      for (auto [r, n] : diagram) tasks.push_back([=] { return check_fm_chern(cfg(r, n), 1e-10); });
      break;
    case 4:
      res.title = "FM by localization vs closed generator formula";
      for (auto [r, n] : diagram) tasks.push_back([=] { return check_fm_closed(cfg(r, n), 1e-12); });
      break;
    case 5:
      res.title = "chi and chi_z invariant under FM";
      for (auto [r, n] : RN{{1, 2}, {2, 3}})
        tasks.push_back([=] { return check_euler_invariance(cfg(r, n), Complex(3.0, 1.0), seed, 5, 1e-10); });
      break;
    case 6:
      res.title = "Iritani pairing lemma";
      for (Complex z : z_pair) tasks.push_back([=] { return check_iritani(cfg(1, 2), z, 1e-8); });
      break;
    case 7:
      res.title = "r = 1 wall crossing by Mellin-Barnes continuation";
      res.time_limit = 120.0;
      for (int n : {2, 3}) tasks.push_back([=] { return check_continuation(cfg(1, n), 80, PathParams{}, 1e-8); });
      break;
    case 8:
      res.title = "K-series decomposition and ODE annihilation";
      tasks.push_back([=] { return check_structural(cfg(2, 3), 10, 1e-12); });
      for (auto [r, n] : RN{{2, 3}, {1, 2}, {1, 3}}) tasks.push_back([=] { return check_ode(cfg(r, n), 40, 1e-10); });
      break;
    case 9:
      res.title = "I-function factorization through H";
      for (Complex z : z_pair) tasks.push_back([=] { return check_i_factorization(cfg(1, 2), z, 20, 1e-10); });
      break;
    case 10:
      res.title = "central charge continuation";
      tasks.push_back([=] { return check_central_charge(cfg(1, 2), Complex(2.0), 3.0, 80, 1e-6); });
      break;
    case 11:
      res.title = "U preserves the pairing and is nonsingular";
      for (auto [r, n] : RN{{1, 2}, {1, 3}, {2, 3}})
        tasks.push_back([=] { return check_symplectic(cfg(r, n), Complex(2.0), seed, 10, 1e-8); });
      break;
    case 12:
      res.title = "cohomology relations at fixed points";
      for (auto [r, n] : RN{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}})
        for (Side s : {Side::minus, Side::plus}) tasks.push_back([=] { return check_cohomology_relations(cfg(r, n), s); });
      break;
    default:
      throw ConfigError("no acceptance criterion " + std::to_string(id));
  }
  auto t0 = std::chrono::steady_clock::now();
  res.cases = run_cases(tasks, workers);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char tag[16];
  std::snprintf(tag, sizeof tag, "criterion-%02d", id);
  for (auto& c : res.cases) c.suite = tag;
  return res;
}

Report run_suite(const RunConfig& config, const std::string& suite, bool timings) {
  Report rep;
  rep.version = kVersion;
  rep.seed = config.seed;
  rep.config_echo = config.echo_json();
  rep.timings = timings;
  if (suite == "acceptance") {
    for (int id = 1; id <= kCriterionCount; ++id) {
      auto cr = run_criterion(id, config.seed, config.workers);
      if (cr.time_limit > 0.0 && cr.seconds > cr.time_limit && !cr.cases.empty()) {
        cr.cases.back().status = Status::fail;
        cr.cases.back().message = "criterion exceeded its time budget";
      }
      for (auto& c : cr.cases) rep.cases.push_back(std::move(c));
    }
    return rep;
  }
  const FlopConfig cfg = config.flop_config();
  std::vector<Task> tasks;
  if (suite == "all") {
    for (const char* s : {"identities", "geometry", "ktheory", "wallcross", "continuation", "central-charge"})
      add_suite_tasks(tasks, s, config, cfg);
  } else {
    add_suite_tasks(tasks, suite, config, cfg);
  }
  rep.cases = run_cases(tasks, config.workers);
  return rep;
}

}  // namespace flopwall::cli
