#include "unruhsim/sweep.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "parallel.hpp"
#include "unruhsim/closedform.hpp"
#include "unruhsim/io.hpp"

namespace unruhsim {

double GridRange::at(int i) const {
  if (i <= 0) return lo;
  if (i >= steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

std::string_view engine_selection_name(EngineSelection e) {
  switch (e) {
    case EngineSelection::Numeric: return "numeric";
    case EngineSelection::ClosedForm: return "closedform";
    case EngineSelection::Both: return "both";
  }
  return "?";
}

EngineSelection parse_engine_selection(std::string_view name) {
  if (name == "numeric") return EngineSelection::Numeric;
  if (name == "closedform") return EngineSelection::ClosedForm;
  if (name == "both") return EngineSelection::Both;
  throw ConfigError("unknown engine '" + std::string(name) + "' (numeric|closedform|both)");
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ConfigError("unknown format '" + std::string(name) + "' (csv|json)");
}

void SweepConfig::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ConfigError("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  auto check = [](const GridRange& g, double max, const char* what) {
    if (g.steps < 2) throw ConfigError(std::string(what) + " grid needs at least 2 steps");
    if (!(g.lo >= 0.0 && g.hi <= max && g.lo <= g.hi)) {
      throw ConfigError(std::string(what) + " range [" + std::to_string(g.lo) + ", " +
                        std::to_string(g.hi) + "] is outside [0, " + std::to_string(max) + "]");
    }
  };
  check(beta, kBetaMax, "beta");
  check(p, 1.0, "p");
  if (scenarios.empty()) throw ConfigError("no scenario selected");
  if (measures.empty()) throw ConfigError("no measure selected");
  if (!(tol > 0.0)) throw ConfigError("tolerance must be positive");
  if (workers == 0) throw ConfigError("workers must be at least 1");
  if (sum_rule_samples < 1) throw ConfigError("sum-rule samples must be at least 1");
}

std::vector<ScenarioResult> run_sweep(const SweepConfig& config) {
  config.validate();
  const bool with_numeric = config.engine != EngineSelection::ClosedForm;
  const bool with_closed = config.engine != EngineSelection::Numeric;
  const std::size_t n_engines = (with_numeric ? 1 : 0) + (with_closed ? 1 : 0);
  const auto n_beta = static_cast<std::size_t>(config.beta.steps);
  const auto n_p = static_cast<std::size_t>(config.p.steps);
  const std::size_t per_point = config.measures.size() * n_engines;
  const std::size_t per_row = n_p * per_point;
  const std::size_t rows = config.scenarios.size() * n_beta;

  std::vector<ScenarioResult> out(rows * per_row,
                                  ScenarioResult{config.scenarios.front(), Measure::S,
                                                 Engine::Numeric, 0, 0, 0, 0});

  detail::parallel_for(rows, config.workers, [&](std::size_t row) {
    const Scenario& scenario = config.scenarios[row / n_beta];
    const int bi = static_cast<int>(row % n_beta);
    const double beta = config.beta.at(bi);
    std::optional<ScenarioEvaluator> evaluator;
    if (with_numeric) evaluator.emplace(scenario, config.alpha, beta);

    std::size_t slot = row * per_row;
    for (std::size_t pi = 0; pi < n_p; ++pi) {
      const double p = config.p.at(static_cast<int>(pi));
      MeasureTriple numeric;
      if (evaluator) numeric = evaluator->at(p).values;
      for (Measure m : config.measures) {
        if (with_numeric) {
          out[slot++] = {scenario, m, Engine::Numeric, config.alpha, beta, p, numeric.get(m)};
        }
        if (with_closed) {
          out[slot++] = {scenario, m, Engine::ClosedForm, config.alpha, beta, p,
                         cf_eval(scenario, m, config.alpha, beta, p)};
        }
      }
    }
  });
  return out;
}

std::vector<ScenarioResult> run_sweep_to_file(const SweepConfig& config) {
  if (config.output_path.empty()) throw ConfigError("no output path given");
  auto rows = run_sweep(config);
  write_file_atomic(config.output_path, format_results(rows, config.format));
  return rows;
}

}  // namespace unruhsim
