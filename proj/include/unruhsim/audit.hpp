#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "unruhsim/sweep.hpp"

namespace unruhsim {

// Residual tolerance for the asserted coherence sum rules.
inline constexpr double kSumRuleTolerance = 1e-10;

struct AuditEntry {
  Scenario scenario;
  Measure measure;
  double max_abs_deviation = 0.0;
  double beta_at_max = 0.0;
  double p_at_max = 0.0;
  double numeric_at_max = 0.0;
  double closedform_at_max = 0.0;
  std::size_t points_above_tol = 0;
  std::size_t points = 0;
  // Largest off-X entry met on the grid (S and E use the X-part).
  double off_x_max = 0.0;
  bool pass = true;
};

struct SumRuleSummary {
  std::string name;
  std::string relation;
  bool asserted = true;
  int samples = 0;
  double max_residual = 0.0;  // numeric-engine coherences
  double max_catalog_residual = 0.0;
  double worst_alpha = 0.0;
  double worst_beta = 0.0;
  double worst_p = 0.0;
  bool pass = true;
};

// Per-scenario comparison of the two arguments of the S maximum. A sign flip
// is a grid point where the printed N bracket is negative and taking its
// absolute value would change the printed S.
struct SBranchDiagnostic {
  Scenario scenario;
  double max_f_branch_dev = 0.0;
  double max_n_branch_dev = 0.0;  // numeric 4|N| vs printed 4(...)
  double max_n_abs_dev = 0.0;     // numeric 4|N| vs |printed 4(...)|
  std::size_t sign_flips = 0;
  std::size_t points = 0;
};

// Numeric residual of the weighted Case II rule against its analytic defect.
struct WeightedRulePoint {
  double alpha;
  double residual;
  double predicted;
};

struct WeightedRuleProfile {
  double beta = 0.0;
  double p = 0.0;
  std::vector<WeightedRulePoint> points;
  double max_model_deviation = 0.0;  // over the random sum-rule samples too
};

struct AuditReport {
  double alpha = 0.0;
  int beta_steps = 0;
  int p_steps = 0;
  double tol = 0.0;
  std::vector<AuditEntry> entries;
  std::vector<SBranchDiagnostic> s_branches;  // informational; empty without S
  std::vector<SumRuleSummary> sum_rules;
  WeightedRuleProfile weighted_profile;

  bool has_discrepancies() const;
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
  std::string render(OutputFormat format) const;
};

// Coherence sum rules at `samples` uniform random (alpha, beta, P) points.
// Fills `profile` with the weighted-rule alpha scan when non-null.
std::vector<SumRuleSummary> survey_sum_rules(int samples, std::uint64_t seed, unsigned workers,
                                             WeightedRuleProfile* profile = nullptr);

// Requires config.engine == Both (ConfigError otherwise).
AuditReport run_audit(const SweepConfig& config);

}  // namespace unruhsim
