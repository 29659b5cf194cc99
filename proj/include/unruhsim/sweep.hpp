#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unruhsim/engine.hpp"

namespace unruhsim {

// Inclusive uniform grid lo, ..., hi with `steps` points.
struct GridRange {
  double lo = 0.0;
  double hi = 1.0;
  int steps = 101;

  double at(int i) const;
};

enum class EngineSelection { Numeric, ClosedForm, Both };
enum class OutputFormat { Csv, Json };

std::string_view engine_selection_name(EngineSelection e);
EngineSelection parse_engine_selection(std::string_view name);
OutputFormat parse_output_format(std::string_view name);

inline constexpr double kDefaultAlpha = 0.70710678118654752440;  // 1/sqrt(2)

struct SweepConfig {
  double alpha = kDefaultAlpha;
  GridRange beta{0.0, kBetaMax, 101};
  GridRange p{0.0, 1.0, 101};
  std::vector<Scenario> scenarios{Scenario(Regions::ABC_I)};
  std::vector<Measure> measures{Measure::S, Measure::E, Measure::C};
  EngineSelection engine = EngineSelection::Numeric;
  std::string output_path;
  OutputFormat format = OutputFormat::Csv;
  double tol = 1e-8;
  unsigned workers = 1;
  // Sum-rule sampling used by the audit.
  int sum_rule_samples = 1000;
  std::uint64_t seed = 20230815;

  // Throws ConfigError.
  void validate() const;
};

struct ScenarioResult {
  Scenario scenario;
  Measure measure;
  Engine engine;
  double alpha;
  double beta;
  double p;
  double value;
};

// Rows are ordered by scenario, beta index, p index, measure, engine
// (numeric first). Output is independent of the worker count.
std::vector<ScenarioResult> run_sweep(const SweepConfig& config);

// run_sweep followed by an atomic write of config.output_path.
std::vector<ScenarioResult> run_sweep_to_file(const SweepConfig& config);

}  // namespace unruhsim
