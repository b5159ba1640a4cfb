#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "flopwall/config.hpp"
#include "flopwall/report.hpp"
#include "flopwall/run_config.hpp"

namespace flopwall::cli {

/// identities, geometry, ktheory, wallcross, continuation, central-charge, all, acceptance
const std::vector<std::string>& suite_names();

/// Runs one suite (or all of them) on the configured instance. Check failures
/// land in the report; only ConfigError escapes.
Report run_suite(const RunConfig& config, const std::string& suite, bool timings = false);

// Individual checks. Each returns a finished case with its status decided against tol.
CaseResult check_antisym(int r, int samples, std::uint64_t seed);
CaseResult check_sr_collapse(const FlopConfig& cfg, double tol);
CaseResult check_cohomology_relations(const FlopConfig& cfg, flopgeom::Side side);
CaseResult check_fixed_point_count(const FlopConfig& cfg);
CaseResult check_fm_closed(const FlopConfig& cfg, double tol);
CaseResult check_fm_chern(const FlopConfig& cfg, double tol);
CaseResult check_euler_invariance(const FlopConfig& cfg, Complex z, std::uint64_t seed, int combos, double tol);
CaseResult check_iritani(const FlopConfig& cfg, Complex z, double tol);
CaseResult check_symplectic(const FlopConfig& cfg, Complex z, std::uint64_t seed, int pairs, double tol);
CaseResult check_structural(const FlopConfig& cfg, int order, double tol);
CaseResult check_ode(const FlopConfig& cfg, int order, double tol);
CaseResult check_continuation(const FlopConfig& cfg, int order, const PathParams& path, double tol);
CaseResult check_i_factorization(const FlopConfig& cfg, Complex z, int order, double tol);
CaseResult check_central_charge(const FlopConfig& cfg, Complex z, double q_out, int order, double tol);

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<CaseResult> cases;
  double seconds = 0.0;
  double time_limit = 0.0;  ///< 0 when the criterion has no time budget
  bool pass() const;
};

inline constexpr int kCriterionCount = 12;

/// Runs acceptance criterion id (1..12) on its fixed grid of (r, n), with
/// weights drawn from seed.
CriterionResult run_criterion(int id, std::uint64_t seed, unsigned workers = 0);

/// Runs tasks on up to `workers` threads; results keep the task order.
std::vector<CaseResult> run_cases(const std::vector<std::function<CaseResult()>>& tasks, unsigned workers);

}  // namespace flopwall::cli
