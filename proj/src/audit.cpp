#include "unruhsim/audit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "parallel.hpp"
#include "unruhsim/closedform.hpp"
#include "unruhsim/io.hpp"

namespace unruhsim {

namespace {

std::string qualified(const Scenario& s) {
  return std::string(s.case_name()) + "/" + std::string(s.name());
}

struct PointValues {
  MeasureTriple numeric;
  MeasureTriple closed;
  double off_x = 0.0;
  double num_f = 0.0, num_n = 0.0;
  SBranches printed;
};

struct SamplePoint {
  double alpha, beta, p;
};

constexpr double kProfileBeta = 0.52359877559829887308;  // pi/6
constexpr double kProfileP = 0.3;

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::vector<SumRuleSummary> survey_sum_rules(int samples, std::uint64_t seed, unsigned workers,
                                             WeightedRuleProfile* profile) {
  if (samples < 1) throw ConfigError("sum-rule samples must be at least 1");
  // Uniform random points of the full parameter box.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<SamplePoint> points(static_cast<std::size_t>(samples));
  for (auto& s : points) {
    s.alpha = unit(rng);
    s.beta = std::min(kBetaMax, kBetaMax * unit(rng));
    s.p = unit(rng);
  }
  std::vector<SumRuleReport> reports(points.size());
  detail::parallel_for(points.size(), workers, [&](std::size_t i) {
    reports[i] = cf_sum_rules(points[i].alpha, points[i].beta, points[i].p);
  });

  std::vector<SumRuleSummary> out;
  for (std::size_t r = 0; r < 4; ++r) {
    SumRuleSummary sum;
    sum.name = std::string(reports.front().rules[r].name);
    sum.relation = std::string(reports.front().rules[r].relation);
    sum.asserted = reports.front().rules[r].asserted;
    sum.samples = samples;
    sum.max_residual = -1.0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const SumRuleResidual& res = reports[i].rules[r];
      sum.max_catalog_residual = std::max(sum.max_catalog_residual, res.catalog_residual);
      if (res.residual > sum.max_residual) {
        sum.max_residual = res.residual;
        sum.worst_alpha = points[i].alpha;
        sum.worst_beta = points[i].beta;
        sum.worst_p = points[i].p;
      }
    }
    sum.pass = !sum.asserted || sum.max_residual < kSumRuleTolerance;
    out.push_back(std::move(sum));
  }

  if (profile != nullptr) {
    WeightedRuleProfile& prof = *profile;
    prof = {};
    prof.beta = kProfileBeta;
    prof.p = kProfileP;
    for (int k = 0; k <= 10; ++k) {
      const double a = k / 10.0;
      const SumRuleResidual w = cf_sum_rules(a, kProfileBeta, kProfileP).rules[3];
      const double predicted = weighted_rule_defect(a, kProfileBeta, kProfileP);
      prof.points.push_back({a, w.lhs - w.rhs, predicted});
      prof.max_model_deviation =
          std::max(prof.max_model_deviation, std::abs(w.lhs - w.rhs - predicted));
    }
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const SumRuleResidual& w = reports[i].rules[3];
      const double predicted = weighted_rule_defect(points[i].alpha, points[i].beta, points[i].p);
      prof.max_model_deviation =
          std::max(prof.max_model_deviation, std::abs(w.lhs - w.rhs - predicted));
    }
  }
  return out;
}

AuditReport run_audit(const SweepConfig& config) {
  config.validate();
  if (config.engine != EngineSelection::Both) {
    throw ConfigError("audit compares both engines; engine must be 'both'");
  }
  AuditReport rep;
  rep.alpha = config.alpha;
  rep.beta_steps = config.beta.steps;
  rep.p_steps = config.p.steps;
  rep.tol = config.tol;

  const auto n_beta = static_cast<std::size_t>(config.beta.steps);
  const auto n_p = static_cast<std::size_t>(config.p.steps);
  const std::size_t rows = config.scenarios.size() * n_beta;
  std::vector<PointValues> grid(rows * n_p);

  detail::parallel_for(rows, config.workers, [&](std::size_t row) {
    const Scenario& scenario = config.scenarios[row / n_beta];
    const double beta = config.beta.at(static_cast<int>(row % n_beta));
    const ScenarioEvaluator eval(scenario, config.alpha, beta);
    for (std::size_t pi = 0; pi < n_p; ++pi) {
      const double p = config.p.at(static_cast<int>(pi));
      PointValues& pv = grid[row * n_p + pi];
      const NumericEvaluation ne = eval.at(p);
      pv.numeric = ne.values;
      pv.off_x = ne.off_x_max;
      pv.num_f = ne.f_branch;
      pv.num_n = ne.n_branch;
      pv.printed = cf_s_branches(scenario, config.alpha, beta, p);
      pv.closed.s = cf_eval(scenario, Measure::S, config.alpha, beta, p);
      pv.closed.e_gte = cf_eval(scenario, Measure::E, config.alpha, beta, p);
      pv.closed.c = cf_eval(scenario, Measure::C, config.alpha, beta, p);
    }
  });

  for (std::size_t si = 0; si < config.scenarios.size(); ++si) {
    for (Measure m : config.measures) {
      AuditEntry entry{config.scenarios[si], m};
      entry.max_abs_deviation = -1.0;
      for (std::size_t bi = 0; bi < n_beta; ++bi) {
        for (std::size_t pi = 0; pi < n_p; ++pi) {
          const PointValues& pv = grid[(si * n_beta + bi) * n_p + pi];
          const double num = pv.numeric.get(m);
          const double cf = pv.closed.get(m);
          // NaN from a printed radical with a negative argument counts as a
          // maximal deviation.
          const double dev = std::isnan(cf) ? INFINITY : std::abs(num - cf);
          ++entry.points;
          if (dev > config.tol) ++entry.points_above_tol;
          entry.off_x_max = std::max(entry.off_x_max, pv.off_x);
          if (dev > entry.max_abs_deviation) {
            entry.max_abs_deviation = dev;
            entry.beta_at_max = config.beta.at(static_cast<int>(bi));
            entry.p_at_max = config.p.at(static_cast<int>(pi));
            entry.numeric_at_max = num;
            entry.closedform_at_max = cf;
          }
        }
      }
      entry.pass = entry.points_above_tol == 0;
      rep.entries.push_back(entry);
    }
  }

  const bool has_s =
      std::find(config.measures.begin(), config.measures.end(), Measure::S) != config.measures.end();
  for (std::size_t si = 0; has_s && si < config.scenarios.size(); ++si) {
    SBranchDiagnostic d{config.scenarios[si]};
    for (std::size_t k = 0; k < n_beta * n_p; ++k) {
      const PointValues& pv = grid[si * n_beta * n_p + k];
      const SBranches& b = pv.printed;
      d.max_f_branch_dev = std::max(d.max_f_branch_dev, std::abs(pv.num_f - b.f_branch));
      d.max_n_branch_dev = std::max(d.max_n_branch_dev, std::abs(pv.num_n - b.n_branch));
      d.max_n_abs_dev = std::max(d.max_n_abs_dev, std::abs(pv.num_n - std::abs(b.n_branch)));
      if (std::max(b.f_branch, b.n_branch) != std::max(b.f_branch, std::abs(b.n_branch))) {
        ++d.sign_flips;
      }
      ++d.points;
    }
    rep.s_branches.push_back(d);
  }

  rep.sum_rules = survey_sum_rules(config.sum_rule_samples, config.seed, config.workers,
                                   &rep.weighted_profile);
  return rep;
}

bool AuditReport::has_discrepancies() const {
  for (const auto& e : entries) {
    if (!e.pass) return true;
  }
  for (const auto& s : sum_rules) {
    if (!s.pass) return true;
  }
  return false;
}

std::string AuditReport::to_text() const {
  const auto g = format_double;
  std::string out;
  out += "audit alpha=" + g(alpha) + " grid=" + std::to_string(beta_steps) + "x" +
         std::to_string(p_steps) + " tol=" + g(tol) + "\n\n";

  out += "engine comparison (numeric engine is authoritative)\n";
  out += pad("scenario", 20) + pad("measure", 8) + pad("max_abs_dev", 26) + pad("beta", 26) +
         pad("p", 26) + pad("numeric", 26) + pad("closedform", 26) + pad("above_tol", 12) +
         pad("off_x_max", 26) + "status\n";
  for (const auto& e : entries) {
    out += pad(qualified(e.scenario), 20) + pad(std::string(measure_name(e.measure)), 8) +
           pad(g(e.max_abs_deviation), 26) + pad(g(e.beta_at_max), 26) + pad(g(e.p_at_max), 26) +
           pad(g(e.numeric_at_max), 26) + pad(g(e.closedform_at_max), 26) +
           pad(std::to_string(e.points_above_tol) + "/" + std::to_string(e.points), 12) +
           pad(g(e.off_x_max), 26) + (e.pass ? "ok" : "DISCREPANCY") + "\n";
  }

  if (!s_branches.empty()) {
    out += "\nS branches: numeric vs printed (informational)\n";
    out += pad("scenario", 20) + pad("f_branch_dev", 26) + pad("n_branch_dev", 26) +
           pad("n_abs_dev", 26) + "sign_flips\n";
    for (const auto& d : s_branches) {
      out += pad(qualified(d.scenario), 20) + pad(g(d.max_f_branch_dev), 26) +
             pad(g(d.max_n_branch_dev), 26) + pad(g(d.max_n_abs_dev), 26) +
             std::to_string(d.sign_flips) + "/" + std::to_string(d.points) + "\n";
    }
  }

  out += "\nsum rules (numeric-engine coherences; catalog residual for reference)\n";
  for (const auto& s : sum_rules) {
    out += "  " + s.name + ": " + s.relation + "\n";
    out += "    samples=" + std::to_string(s.samples) + " max_residual=" + g(s.max_residual) +
           " at (alpha=" + g(s.worst_alpha) + ", beta=" + g(s.worst_beta) + ", p=" + g(s.worst_p) +
           ") catalog_max_residual=" + g(s.max_catalog_residual) + " " +
           (s.asserted ? (s.pass ? "ok" : "VIOLATED") : "reported") + "\n";
  }

  const auto& w = weighted_profile;
  out += "\nweighted Case II rule: lhs - rhs = -8 (1-P)^2 alpha^2 (1-alpha^2)^2 sin^2(beta) cos^2(beta)\n";
  out += "  nonzero unless alpha in {0, 1}, beta = 0 or P = 1; max |numeric - predicted| = " +
         g(w.max_model_deviation) + "\n";
  out += "  profile at beta=" + g(w.beta) + " p=" + g(w.p) + "\n";
  out += "  " + pad("alpha", 26) + pad("lhs-rhs", 26) + "predicted\n";
  for (const auto& pt : w.points) {
    out += "  " + pad(g(pt.alpha), 26) + pad(g(pt.residual), 26) + g(pt.predicted) + "\n";
  }

  std::size_t n = 0;
  std::string lines;
  for (const auto& e : entries) {
    if (e.pass) continue;
    ++n;
    lines += "  " + qualified(e.scenario) + " " + std::string(measure_name(e.measure)) +
             " at beta=" + g(e.beta_at_max) + " p=" + g(e.p_at_max) + ": numeric=" +
             g(e.numeric_at_max) + " closedform=" + g(e.closedform_at_max) +
             " |dev|=" + g(e.max_abs_deviation) + " (" + std::to_string(e.points_above_tol) +
             " grid points above tol)\n";
  }
  for (const auto& s : sum_rules) {
    if (s.pass) continue;
    ++n;
    lines += "  sum rule " + s.name + " residual " + g(s.max_residual) + "\n";
  }
  out += "\ndiscrepancies: " + std::to_string(n) + "\n" + lines;
  return out;
}

nlohmann::ordered_json AuditReport::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["alpha"] = alpha;
  j["beta_steps"] = beta_steps;
  j["p_steps"] = p_steps;
  j["tol"] = tol;
  ordered_json entries_j = ordered_json::array();
  for (const auto& e : entries) {
    entries_j.push_back({{"scenario", qualified(e.scenario)},
                         {"measure", std::string(measure_name(e.measure))},
                         {"max_abs_deviation", e.max_abs_deviation},
                         {"beta", e.beta_at_max},
                         {"p", e.p_at_max},
                         {"numeric", e.numeric_at_max},
                         {"closedform", e.closedform_at_max},
                         {"points_above_tol", e.points_above_tol},
                         {"points", e.points},
                         {"off_x_max", e.off_x_max},
                         {"pass", e.pass}});
  }
  j["entries"] = std::move(entries_j);
  ordered_json branches = ordered_json::array();
  for (const auto& d : s_branches) {
    branches.push_back({{"scenario", qualified(d.scenario)},
                        {"max_f_branch_dev", d.max_f_branch_dev},
                        {"max_n_branch_dev", d.max_n_branch_dev},
                        {"max_n_abs_dev", d.max_n_abs_dev},
                        {"sign_flips", d.sign_flips},
                        {"points", d.points}});
  }
  j["s_branches"] = std::move(branches);
  ordered_json rules = ordered_json::array();
  for (const auto& s : sum_rules) {
    rules.push_back({{"name", s.name},
                     {"relation", s.relation},
                     {"asserted", s.asserted},
                     {"samples", s.samples},
                     {"max_residual", s.max_residual},
                     {"worst", {{"alpha", s.worst_alpha}, {"beta", s.worst_beta}, {"p", s.worst_p}}},
                     {"max_catalog_residual", s.max_catalog_residual},
                     {"pass", s.pass}});
  }
  j["sum_rules"] = std::move(rules);
  ordered_json prof;
  prof["defect"] = "-8 (1-P)^2 alpha^2 (1-alpha^2)^2 sin^2(beta) cos^2(beta)";
  prof["beta"] = weighted_profile.beta;
  prof["p"] = weighted_profile.p;
  prof["max_model_deviation"] = weighted_profile.max_model_deviation;
  ordered_json pts = ordered_json::array();
  for (const auto& pt : weighted_profile.points) {
    pts.push_back({{"alpha", pt.alpha}, {"lhs_minus_rhs", pt.residual}, {"predicted", pt.predicted}});
  }
  prof["points"] = std::move(pts);
  j["weighted_rule"] = std::move(prof);
  j["has_discrepancies"] = has_discrepancies();
  return j;
}

std::string AuditReport::render(OutputFormat format) const {
  return format == OutputFormat::Json ? to_json().dump(2) + "\n" : to_text();
}

}  // namespace unruhsim
