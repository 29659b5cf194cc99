#pragma once

#include <string_view>

#include "unruhsim/channels.hpp"
#include "unruhsim/measures.hpp"
#include "unruhsim/unruh.hpp"

namespace unruhsim {

enum class Engine { Numeric, ClosedForm };

std::string_view engine_name(Engine e);

// Reduced scenario state with the kept B/C modes damped.
DensityOperator scenario_state(const GhzParams& ghz, const UnruhParams& unruh,
                               const Scenario& scenario, const DampingParams& damping);

struct NumericEvaluation {
  MeasureTriple values;
  // Largest entry outside the X pattern; S and E are taken on the X-part.
  double off_x_max = 0.0;
  // The two arguments of the S maximum: 8 sqrt2 max|f_i| and 4|N|.
  double f_branch = 0.0;
  double n_branch = 0.0;
};

NumericEvaluation evaluate_state(const DensityOperator& damped);

// First-principles pipeline for one scenario at fixed (alpha, beta). The
// undamped reduced state is built once and reused for every p.
class ScenarioEvaluator {
 public:
  ScenarioEvaluator(const Scenario& scenario, double alpha, double beta);

  const Scenario& scenario() const { return scenario_; }
  const DensityOperator& reduced() const { return reduced_; }

  DensityOperator damped(double p) const;
  NumericEvaluation at(double p) const;
  double value(Measure m, double p) const { return at(p).values.get(m); }

 private:
  Scenario scenario_;
  DensityOperator reduced_;
};

MeasureTriple numeric_measures(const Scenario& scenario, double alpha, double beta, double p);

double evaluate(Engine engine, const Scenario& scenario, Measure measure, double alpha,
                double beta, double p);

}  // namespace unruhsim
