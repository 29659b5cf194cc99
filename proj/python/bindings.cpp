#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "unruhsim/audit.hpp"
#include "unruhsim/boundary.hpp"
#include "unruhsim/closedform.hpp"
#include "unruhsim/engine.hpp"
#include "unruhsim/io.hpp"

namespace py = pybind11;
using namespace unruhsim;

namespace {

Scenario scenario_arg(const std::string& name) { return Scenario::parse(name); }

Measure measure_arg(const std::string& name) { return parse_measure(name); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "GHZ states under Unruh mode mixing and amplitude damping";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<LabelError>(m, "LabelError", PyExc_KeyError);
  py::register_exception<StructureError>(m, "StructureError", PyExc_ValueError);
  py::register_exception<CoverageError>(m, "CoverageError", PyExc_LookupError);

  m.attr("BETA_MAX") = kBetaMax;
  m.attr("DEFAULT_ALPHA") = kDefaultAlpha;

  m.def("scenarios", [] {
    std::vector<std::string> out;
    for (const Scenario& s : Scenario::all()) {
      out.push_back(std::string(s.case_name()) + "/" + std::string(s.name()));
    }
    return out;
  });

  m.def(
      "state",
      [](const std::string& scenario, double alpha, double beta, double p) {
        return ScenarioEvaluator(scenario_arg(scenario), alpha, beta).damped(p).matrix();
      },
      py::arg("scenario"), py::arg("alpha"), py::arg("beta"), py::arg("p"),
      "Damped three-mode density matrix (8x8, big-endian basis).");

  m.def(
      "measures",
      [](const std::string& scenario, double alpha, double beta, double p) {
        const MeasureTriple v = numeric_measures(scenario_arg(scenario), alpha, beta, p);
        return py::dict(py::arg("S") = v.s, py::arg("E") = v.e_gte, py::arg("C") = v.c);
      },
      py::arg("scenario"), py::arg("alpha"), py::arg("beta"), py::arg("p"));

  m.def(
      "closed_form",
      [](const std::string& scenario, const std::string& measure, double alpha, double beta,
         double p) { return cf_eval(scenario_arg(scenario), measure_arg(measure), alpha, beta, p); },
      py::arg("scenario"), py::arg("measure"), py::arg("alpha"), py::arg("beta"), py::arg("p"));

  m.def("gtn", [](const Matrix& rho) {
    return evaluate_state(DensityOperator(ModeRegister{Mode::A, Mode::B, Mode::C}, rho)).values.s;
  });
  m.def("gte", [](const Matrix& rho) {
    return evaluate_state(DensityOperator(ModeRegister{Mode::A, Mode::B, Mode::C}, rho))
        .values.e_gte;
  });
  m.def("coherence_l1", [](const Matrix& rho) { return coherence_l1(rho); });

  m.def(
      "sweep",
      [](const std::vector<std::string>& scenarios, const std::vector<std::string>& measures,
         const std::string& engine, double alpha, int beta_steps, int p_steps, unsigned workers,
         const std::string& format) {
        SweepConfig c;
        c.alpha = alpha;
        c.beta.steps = beta_steps;
        c.p.steps = p_steps;
        c.scenarios.clear();
        for (const auto& s : scenarios) c.scenarios.push_back(scenario_arg(s));
        c.measures.clear();
        for (const auto& x : measures) c.measures.push_back(measure_arg(x));
        c.engine = parse_engine_selection(engine);
        c.workers = workers;
        std::vector<ScenarioResult> rows;
        {
          py::gil_scoped_release release;
          rows = run_sweep(c);
        }
        return format_results(rows, parse_output_format(format));
      },
      py::arg("scenarios") = std::vector<std::string>{"ABC_I"},
      py::arg("measures") = std::vector<std::string>{"S", "E", "C"},
      py::arg("engine") = "numeric", py::arg("alpha") = kDefaultAlpha, py::arg("beta_steps") = 101,
      py::arg("p_steps") = 101, py::arg("workers") = 1, py::arg("format") = "csv",
      "Sweep as CSV or JSON text, same bytes as the CLI.");

  m.def(
      "boundary",
      [](const std::string& scenario, const std::string& measure, double alpha, int beta_samples) {
        const BoundaryResult r =
            find_boundary(scenario_arg(scenario), measure_arg(measure), alpha, beta_samples);
        std::vector<std::pair<double, std::optional<double>>> out;
        for (const auto& pt : r.curve) out.emplace_back(pt.beta, pt.p_star);
        return out;
      },
      py::arg("scenario"), py::arg("measure") = "S", py::arg("alpha") = kDefaultAlpha,
      py::arg("beta_samples") = 17, "List of (beta, p_star or None).");

  m.def(
      "sum_rules",
      [](double alpha, double beta, double p) {
        py::list out;
        for (const auto& r : cf_sum_rules(alpha, beta, p).rules) {
          out.append(py::dict(py::arg("name") = std::string(r.name), py::arg("lhs") = r.lhs,
                              py::arg("rhs") = r.rhs, py::arg("residual") = r.residual,
                              py::arg("asserted") = r.asserted));
        }
        return out;
      },
      py::arg("alpha"), py::arg("beta"), py::arg("p"));
}
