#include "unruhsim/engine.hpp"

#include <algorithm>
#include <cmath>

#include "unruhsim/closedform.hpp"

namespace unruhsim {

std::string_view engine_name(Engine e) {
  return e == Engine::Numeric ? "numeric" : "closedform";
}

DensityOperator scenario_state(const GhzParams& ghz, const UnruhParams& unruh,
                               const Scenario& scenario, const DampingParams& damping) {
  return apply_damping(scenario_reduced_state(ghz, unruh, scenario), scenario.damped(), damping);
}

NumericEvaluation evaluate_state(const DensityOperator& damped) {
  const XProjection proj = project_xstate(damped);
  NumericEvaluation out;
  out.values.s = gtn(proj.x);
  out.values.e_gte = gte(proj.x);
  out.values.c = coherence_l1(damped);
  out.off_x_max = proj.off_x_max;
  double fmax = 0.0;
  for (const Complex& f : proj.x.f) fmax = std::max(fmax, std::abs(f));
  out.f_branch = 8 * std::sqrt(2.0) * fmax;
  out.n_branch = 4 * std::abs(svetlichny_n(proj.x));
  return out;
}

ScenarioEvaluator::ScenarioEvaluator(const Scenario& scenario, double alpha, double beta)
    : scenario_(scenario),
      reduced_(scenario_reduced_state(GhzParams(alpha), UnruhParams(beta), scenario)) {}

DensityOperator ScenarioEvaluator::damped(double p) const {
  return apply_damping(reduced_, scenario_.damped(), DampingParams(p));
}

NumericEvaluation ScenarioEvaluator::at(double p) const { return evaluate_state(damped(p)); }

MeasureTriple numeric_measures(const Scenario& scenario, double alpha, double beta, double p) {
  return ScenarioEvaluator(scenario, alpha, beta).at(p).values;
}

double evaluate(Engine engine, const Scenario& scenario, Measure measure, double alpha,
                double beta, double p) {
  if (engine == Engine::ClosedForm) return cf_eval(scenario, measure, alpha, beta, p);
  return numeric_measures(scenario, alpha, beta, p).get(measure);
}

}  // namespace unruhsim
