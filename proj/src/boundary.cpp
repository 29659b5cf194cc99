#include "unruhsim/boundary.hpp"

#include <cmath>
#include <string>

#include "parallel.hpp"
#include "unruhsim/io.hpp"

namespace unruhsim {

namespace {

// A crossing pinned to P = 1 is not reported: every damped coherence
// vanishes there.
constexpr double kEndpointGuard = 1e-6;
// |value(0) - threshold| below this counts as touching the threshold at P = 0.
constexpr double kOriginTouch = 1e-9;

}  // namespace

double threshold_for(Measure m) {
  switch (m) {
    case Measure::S: return 4.0;
    case Measure::E: return 0.0;
    case Measure::C: break;
  }
  throw ParameterError("boundary search is defined for S and E only");
}

std::string_view bracket_method_name(BracketMethod m) {
  switch (m) {
    case BracketMethod::Bisection: return "bisection";
    case BracketMethod::ScanThenBisection: return "scan+bisection";
    case BracketMethod::Origin: return "origin";
    case BracketMethod::None: return "none";
  }
  return "?";
}

BoundaryPoint find_crossing(const ScenarioEvaluator& evaluator, Measure measure, double beta,
                            const BoundaryOptions& options) {
  const double threshold = threshold_for(measure);
  auto value = [&](double p) { return evaluator.value(measure, p); };
  auto above = [&](double p) { return value(p) > threshold; };

  BoundaryPoint pt;
  pt.beta = beta;

  // Checked before the strict comparison so rounding on either side of the
  // threshold at P = 0 gives the same answer.
  const double v0 = value(0.0);
  if (std::abs(v0 - threshold) < kOriginTouch &&
      value(std::min(options.scan_step, 1.0)) < threshold) {
    pt.p_star = 0.0;
    pt.value_at_p_star = v0;
    pt.method = BracketMethod::Origin;
    return pt;
  }
  if (!(v0 > threshold)) return pt;

  // Bracket [lo, hi] with above(lo) and !above(hi).
  double lo = 0.0;
  double hi = 0.0;
  bool found = false;

  const int k = std::max(options.coarse_samples, 2);
  std::vector<bool> coarse(static_cast<std::size_t>(k) + 1);
  int transitions = 0;
  for (int i = 0; i <= k; ++i) {
    coarse[static_cast<std::size_t>(i)] = above(static_cast<double>(i) / k);
    if (i > 0 && coarse[static_cast<std::size_t>(i)] != coarse[static_cast<std::size_t>(i - 1)]) {
      ++transitions;
    }
  }
  if (transitions == 1) {
    for (int i = 1; i <= k; ++i) {
      if (!coarse[static_cast<std::size_t>(i)]) {
        lo = static_cast<double>(i - 1) / k;
        hi = static_cast<double>(i) / k;
        found = true;
        break;
      }
    }
    pt.method = BracketMethod::Bisection;
  } else {
    const auto n = static_cast<long>(std::ceil(1.0 / options.scan_step));
    for (long i = 1; i <= n; ++i) {
      const double p = std::min(1.0, static_cast<double>(i) / static_cast<double>(n));
      if (!above(p)) {
        lo = static_cast<double>(i - 1) / static_cast<double>(n);
        hi = p;
        found = true;
        break;
      }
    }
    pt.method = BracketMethod::ScanThenBisection;
  }
  if (!found) {
    pt.method = BracketMethod::None;
    return pt;
  }

  while (hi - lo > options.p_tol) {
    const double mid = 0.5 * (lo + hi);
    (above(mid) ? lo : hi) = mid;
  }
  const double p_star = 0.5 * (lo + hi);
  if (p_star > 1.0 - kEndpointGuard) {
    pt.method = BracketMethod::None;
    return pt;
  }
  pt.p_star = p_star;
  pt.value_at_p_star = value(p_star);
  return pt;
}

BoundaryResult find_boundary(const Scenario& scenario, Measure measure, double alpha,
                             int beta_samples, const BoundaryOptions& options, unsigned workers) {
  if (beta_samples < 1) throw ParameterError("beta_samples must be at least 1");
  BoundaryResult res;
  res.scenario = scenario;
  res.measure = measure;
  res.alpha = GhzParams(alpha).alpha();
  res.threshold = threshold_for(measure);
  res.options = options;
  res.curve.resize(static_cast<std::size_t>(beta_samples));

  detail::parallel_for(res.curve.size(), workers, [&](std::size_t i) {
    double beta = 0.0;
    if (beta_samples > 1) {
      beta = i + 1 == res.curve.size()
                 ? kBetaMax
                 : kBetaMax * static_cast<double>(i) / static_cast<double>(beta_samples - 1);
    }
    const ScenarioEvaluator eval(scenario, alpha, beta);
    res.curve[i] = find_crossing(eval, measure, beta, options);
  });
  return res;
}

std::string BoundaryResult::to_csv() const {
  std::string out = "beta,p_star,value,method\n";
  for (const auto& pt : curve) {
    out += format_double(pt.beta) + ",";
    if (pt.p_star) {
      out += format_double(*pt.p_star) + "," + format_double(pt.value_at_p_star) + ",";
    } else {
      out += "none,,";
    }
    out += std::string(bracket_method_name(pt.method)) + "\n";
  }
  return out;
}

nlohmann::ordered_json BoundaryResult::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["scenario"] = std::string(scenario.case_name()) + "/" + std::string(scenario.name());
  j["measure"] = std::string(measure_name(measure));
  j["alpha"] = alpha;
  j["threshold"] = threshold;
  j["method"] = {{"p_tol", options.p_tol},
                 {"coarse_samples", options.coarse_samples},
                 {"scan_step", options.scan_step},
                 {"bracket", "[0, 1]"}};
  ordered_json pts = ordered_json::array();
  for (const auto& pt : curve) {
    ordered_json o{{"beta", pt.beta}};
    if (pt.p_star) {
      o["p_star"] = *pt.p_star;
      o["value"] = pt.value_at_p_star;
    } else {
      o["p_star"] = nullptr;
      o["note"] = "no crossing in [0,1)";
    }
    o["method"] = std::string(bracket_method_name(pt.method));
    pts.push_back(std::move(o));
  }
  j["curve"] = std::move(pts);
  return j;
}

}  // namespace unruhsim
