#pragma once

// Catalog of the printed analytic S/E/C expressions, transcribed as printed
// (sign slips and all). The numeric engine is the arbiter; nothing here is
// corrected.

#include <array>
#include <string_view>

#include "unruhsim/measures.hpp"
#include "unruhsim/unruh.hpp"

namespace unruhsim {

bool cf_covers(const Scenario& scenario, Measure measure);

// Throws CoverageError for an uncatalogued pair, ParameterError for
// out-of-range parameters.
double cf_eval(const Scenario& scenario, Measure measure, double alpha, double beta, double p);

// The two arguments of the printed S = max{f-branch, N-branch}. The N-branch
// is 4[...] exactly as printed, so it may be negative where the generic
// X-state value uses 4|N|.
struct SBranches {
  double f_branch = 0.0;
  double n_branch = 0.0;
};

SBranches cf_s_branches(const Scenario& scenario, double alpha, double beta, double p);

struct SumRuleResidual {
  std::string_view name;
  std::string_view relation;
  double lhs = 0.0;          // from numeric-engine coherences
  double rhs = 0.0;
  double residual = 0.0;     // |lhs - rhs|
  double catalog_lhs = 0.0;  // same left side from the catalog
  double catalog_residual = 0.0;
  // The weighted Case II rule is reported, never asserted.
  bool asserted = true;
};

struct SumRuleReport {
  double alpha = 0.0;
  double beta = 0.0;
  double p = 0.0;
  std::array<SumRuleResidual, 4> rules{};
};

SumRuleReport cf_sum_rules(double alpha, double beta, double p);

// lhs - rhs of the weighted Case II rule when the coherences are the true
// ones: -8 (1-P)^2 alpha^2 (1-alpha^2)^2 sin^2(beta) cos^2(beta).
double weighted_rule_defect(double alpha, double beta, double p);

}  // namespace unruhsim
