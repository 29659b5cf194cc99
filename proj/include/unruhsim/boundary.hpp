#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "unruhsim/engine.hpp"

namespace unruhsim {

// Classical threshold: 4 for S, 0 for E. C has none (ParameterError).
double threshold_for(Measure m);

struct BoundaryOptions {
  double p_tol = 1e-10;       // final bisection bracket width in P
  int coarse_samples = 64;    // monotone-bracket validation grid
  double scan_step = 1e-3;    // fallback scan when the bracket is not monotone
};

enum class BracketMethod { Bisection, ScanThenBisection, Origin, None };

std::string_view bracket_method_name(BracketMethod m);

struct BoundaryPoint {
  double beta = 0.0;
  // First P at which the measure falls to the threshold; empty when the
  // measure stays above it on [0, 1) or never exceeds it.
  std::optional<double> p_star;
  double value_at_p_star = 0.0;
  BracketMethod method = BracketMethod::None;
};

struct BoundaryResult {
  Scenario scenario{Regions::ABC_I};
  Measure measure = Measure::S;
  double alpha = 0.0;
  double threshold = 0.0;
  BoundaryOptions options;
  std::vector<BoundaryPoint> curve;

  std::string to_csv() const;
  nlohmann::ordered_json to_json() const;
};

BoundaryPoint find_crossing(const ScenarioEvaluator& evaluator, Measure measure, double beta,
                            const BoundaryOptions& options = {});

// beta samples are spread uniformly over [0, pi/4] (a single sample is beta = 0).
BoundaryResult find_boundary(const Scenario& scenario, Measure measure, double alpha,
                             int beta_samples, const BoundaryOptions& options = {},
                             unsigned workers = 1);

}  // namespace unruhsim
