// unruhsim: sweeps, figure data, formula audits, sum-rule checks and
// sudden-death boundaries for GHZ-like states seen by accelerated observers
// under amplitude damping.
//
// Exit codes: 0 success, 2 configuration error, 3 I/O error, 4 audit or
// sum-rule discrepancy above tolerance.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unruhsim/audit.hpp"
#include "unruhsim/boundary.hpp"
#include "unruhsim/closedform.hpp"
#include "unruhsim/figure.hpp"
#include "unruhsim/io.hpp"
#include "unruhsim/sweep.hpp"

namespace {

using namespace unruhsim;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitDiscrepancy = 4;

struct Options {
  double alpha = kDefaultAlpha;
  int beta_steps = 101;
  int p_steps = 101;
  double beta_min = 0.0;
  double beta_max = kBetaMax;
  double p_min = 0.0;
  double p_max = 1.0;
  std::string scenario;
  std::string measures;
  std::string engine;
  std::string out;
  std::string format = "csv";
  double tol = 1e-8;
  unsigned workers = 1;
  // boundary
  int beta_samples = 17;
  // sumrules / audit
  double beta = 0.52359877559829887308;  // pi/6
  double p = 0.3;
  int samples = 1000;
  std::uint64_t seed = 20230815;
  // figure
  int figure = 1;
  int resolution = 101;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Scenario> parse_scenarios(const std::string& name, const std::string& fallback) {
  const std::string n = name.empty() ? fallback : name;
  if (n == "all") return {Scenario::all().begin(), Scenario::all().end()};
  std::vector<Scenario> out;
  for (const auto& item : split_list(n)) out.push_back(Scenario::parse(item));
  if (out.empty()) throw ConfigError("no scenario selected");
  return out;
}

std::vector<Measure> parse_measures(const std::string& list, const std::string& fallback) {
  std::vector<Measure> out;
  for (const auto& item : split_list(list.empty() ? fallback : list)) {
    out.push_back(parse_measure(item));
  }
  if (out.empty()) throw ConfigError("no measure selected");
  return out;
}

SweepConfig make_config(const Options& o, const std::string& default_scenario,
                        EngineSelection default_engine) {
  SweepConfig c;
  c.alpha = o.alpha;
  c.beta = {o.beta_min, o.beta_max, o.beta_steps};
  c.p = {o.p_min, o.p_max, o.p_steps};
  c.scenarios = parse_scenarios(o.scenario, default_scenario);
  c.measures = parse_measures(o.measures, "S,E,C");
  c.engine = o.engine.empty() ? default_engine : parse_engine_selection(o.engine);
  c.output_path = o.out;
  c.format = parse_output_format(o.format);
  c.tol = o.tol;
  c.workers = o.workers;
  c.sum_rule_samples = o.samples;
  c.seed = o.seed;
  c.validate();
  return c;
}

void emit(const Options& o, const std::string& content) {
  if (o.out.empty()) {
    std::cout << content;
  } else {
    write_file_atomic(o.out, content);
  }
}

int cmd_sweep(const Options& o) {
  const SweepConfig c = make_config(o, "ABC_I", EngineSelection::Numeric);
  const auto rows = run_sweep(c);
  emit(o, format_results(rows, c.format));
  return kExitOk;
}

int cmd_audit(const Options& o) {
  const SweepConfig c = make_config(o, "all", EngineSelection::Both);
  const AuditReport rep = run_audit(c);
  const std::string text = rep.render(c.format);
  std::cout << text;
  if (!o.out.empty()) write_file_atomic(o.out, text);
  return rep.has_discrepancies() ? kExitDiscrepancy : kExitOk;
}

int cmd_boundary(const Options& o) {
  const auto scenarios = parse_scenarios(o.scenario, "ABC_I");
  const auto measures = parse_measures(o.measures, "S");
  if (scenarios.size() != 1 || measures.size() != 1) {
    throw ConfigError("boundary takes exactly one scenario and one measure (S or E)");
  }
  if (measures[0] == Measure::C) throw ConfigError("boundary measure must be S or E");
  if (!(o.alpha >= 0.0 && o.alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");
  if (o.beta_samples < 1) throw ConfigError("beta-samples must be at least 1");
  if (o.workers == 0) throw ConfigError("workers must be at least 1");
  const BoundaryResult res =
      find_boundary(scenarios[0], measures[0], o.alpha, o.beta_samples, {}, o.workers);
  emit(o, parse_output_format(o.format) == OutputFormat::Json ? res.to_json().dump(2) + "\n"
                                                               : res.to_csv());
  return kExitOk;
}

int cmd_sumrules(const Options& o) {
  if (!(o.alpha >= 0.0 && o.alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");
  if (!(o.beta >= 0.0 && o.beta <= kBetaMax)) throw ConfigError("beta must lie in [0, pi/4]");
  if (!(o.p >= 0.0 && o.p <= 1.0)) throw ConfigError("p must lie in [0, 1]");
  if (o.workers == 0) throw ConfigError("workers must be at least 1");
  const OutputFormat fmt = parse_output_format(o.format);
  const SumRuleReport point = cf_sum_rules(o.alpha, o.beta, o.p);
  WeightedRuleProfile profile;
  const auto survey = survey_sum_rules(o.samples, o.seed, o.workers, &profile);

  bool violated = false;
  for (const auto& s : survey) violated = violated || !s.pass;

  std::string text;
  if (fmt == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["point"] = {{"alpha", point.alpha}, {"beta", point.beta}, {"p", point.p}};
    nlohmann::ordered_json rules = nlohmann::ordered_json::array();
    for (const auto& r : point.rules) {
      rules.push_back({{"name", std::string(r.name)},
                       {"relation", std::string(r.relation)},
                       {"lhs", r.lhs},
                       {"rhs", r.rhs},
                       {"residual", r.residual},
                       {"catalog_lhs", r.catalog_lhs},
                       {"catalog_residual", r.catalog_residual},
                       {"asserted", r.asserted}});
    }
    j["point"]["rules"] = std::move(rules);
    nlohmann::ordered_json surv = nlohmann::ordered_json::array();
    for (const auto& s : survey) {
      surv.push_back({{"name", s.name},
                      {"samples", s.samples},
                      {"max_residual", s.max_residual},
                      {"max_catalog_residual", s.max_catalog_residual},
                      {"asserted", s.asserted},
                      {"pass", s.pass}});
    }
    j["survey"] = std::move(surv);
    j["weighted_rule_defect"] = {
        {"formula", "-8 (1-P)^2 alpha^2 (1-alpha^2)^2 sin^2(beta) cos^2(beta)"},
        {"at_point", weighted_rule_defect(o.alpha, o.beta, o.p)},
        {"max_model_deviation", profile.max_model_deviation}};
    text = j.dump(2) + "\n";
  } else {
    const auto g = format_double;
    text += "sum rules at alpha=" + g(point.alpha) + " beta=" + g(point.beta) + " p=" + g(point.p) +
            "\n";
    for (const auto& r : point.rules) {
      text += "  " + std::string(r.name) + ": " + std::string(r.relation) + "\n";
      text += "    lhs=" + g(r.lhs) + " rhs=" + g(r.rhs) + " residual=" + g(r.residual) +
              " catalog_residual=" + g(r.catalog_residual) + (r.asserted ? "" : " (reported)") +
              "\n";
    }
    text += "weighted rule defect -8 (1-P)^2 alpha^2 (1-alpha^2)^2 sin^2(beta) cos^2(beta) = " +
            g(weighted_rule_defect(o.alpha, o.beta, o.p)) + "\n";
    text += "random survey (" + std::to_string(o.samples) + " points, seed " +
            std::to_string(o.seed) + ")\n";
    for (const auto& s : survey) {
      text += "  " + s.name + " max_residual=" + g(s.max_residual) +
              " catalog_max_residual=" + g(s.max_catalog_residual) + " " +
              (s.asserted ? (s.pass ? "ok" : "VIOLATED") : "reported") + "\n";
    }
    text += "  weighted rule: max |numeric defect - formula| = " + g(profile.max_model_deviation) +
            "\n";
  }
  emit(o, text);
  return violated ? kExitDiscrepancy : kExitOk;
}

int cmd_figure(const Options& o) {
  if (!(o.alpha >= 0.0 && o.alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");
  if (o.workers == 0) throw ConfigError("workers must be at least 1");
  if (o.resolution < 16) throw ConfigError("resolution must be at least 16");
  if (o.figure < 1 || o.figure > 7) throw ConfigError("figure must be 1..7");
  const std::string out = o.out.empty() ? "fig" + std::to_string(o.figure) + ".csv" : o.out;
  for (const auto& path : emit_figure_data(o.figure, o.alpha, o.resolution, out, o.workers)) {
    std::cout << path.string() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GHZ-like states in non-inertial frames under amplitude damping"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key=value file; command-line flags take precedence");

  Options o;
  app.add_option("--alpha", o.alpha, "GHZ amplitude alpha in [0,1]")->capture_default_str();
  app.add_option("--beta-steps", o.beta_steps, "beta grid points")->capture_default_str();
  app.add_option("--p-steps", o.p_steps, "P grid points")->capture_default_str();
  app.add_option("--beta-min", o.beta_min, "beta grid start");
  app.add_option("--beta-max", o.beta_max, "beta grid end (<= pi/4)");
  app.add_option("--p-min", o.p_min, "P grid start");
  app.add_option("--p-max", o.p_max, "P grid end");
  app.add_option("--scenario", o.scenario,
                 "ABC_I, ABC_II, AB_I_C_I, AB_I_C_II, AB_II_C_I, AB_II_C_II, AB_I_B_II, "
                 "AC_I_C_II, a comma list, or all");
  app.add_option("--measures", o.measures, "comma list of S,E,C");
  app.add_option("--engine", o.engine, "numeric|closedform|both");
  app.add_option("--out", o.out, "output path (stdout when omitted)");
  app.add_option("--format", o.format, "csv|json")->capture_default_str();
  app.add_option("--tol", o.tol, "audit tolerance")->capture_default_str();
  app.add_option("--workers", o.workers, "worker threads")->capture_default_str();
  app.add_option("--beta-samples", o.beta_samples, "boundary: beta samples")->capture_default_str();
  app.add_option("--beta", o.beta, "sumrules: beta of the reported point");
  app.add_option("--p", o.p, "sumrules: P of the reported point");
  app.add_option("--samples", o.samples, "random sum-rule samples")->capture_default_str();
  app.add_option("--seed", o.seed, "sum-rule sampling seed")->capture_default_str();
  app.add_option("--figure", o.figure, "figure: id 1..7")->capture_default_str();
  app.add_option("--resolution", o.resolution, "figure: grid points per axis")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "evaluate measures over a (beta, P) grid");
  auto* audit = app.add_subcommand("audit", "compare printed closed forms with the numeric engine");
  auto* boundary = app.add_subcommand("boundary", "locate sudden-death crossings in P");
  auto* sumrules = app.add_subcommand("sumrules", "check the coherence sum rules");
  auto* figure = app.add_subcommand("figure", "write figure surface data as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (sweep->parsed()) return cmd_sweep(o);
    if (audit->parsed()) return cmd_audit(o);
    if (boundary->parsed()) return cmd_boundary(o);
    if (sumrules->parsed()) return cmd_sumrules(o);
    if (figure->parsed()) return cmd_figure(o);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    // Configuration, parameter and label errors all stem from the inputs.
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
