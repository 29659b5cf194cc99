#include "unruhsim/figure.hpp"

#include <string>

#include "parallel.hpp"
#include "unruhsim/io.hpp"

namespace unruhsim {

FigureSpec figure_spec(int id) {
  using R = Regions;
  switch (id) {
    case 1: return {1, Scenario(R::ABC_I), {Measure::S}};
    case 2: return {2, Scenario(R::ABC_I), {Measure::E, Measure::C}};
    case 3: return {3, Scenario(R::ABC_II), {Measure::S, Measure::E}};
    case 4: return {4, Scenario(R::AB_I_C_I), {Measure::S, Measure::E}};
    case 5: return {5, Scenario(R::AB_I_C_II), {Measure::S, Measure::E}};
    case 6: return {6, Scenario(R::AB_II_C_II), {Measure::S, Measure::E}};
    case 7: return {7, Scenario(R::AB_I_B_II), {Measure::S, Measure::E}};
    default: break;
  }
  throw ParameterError("figure id must be 1..7, got " + std::to_string(id));
}

Surface compute_surface(const Scenario& scenario, Measure measure, double alpha, int resolution,
                        unsigned workers) {
  if (resolution < 16) throw ParameterError("figure resolution must be at least 16");
  const GridRange beta_grid{0.0, kBetaMax, resolution};
  const GridRange p_grid{0.0, 1.0, resolution};
  Surface s;
  s.resolution = resolution;
  const auto n = static_cast<std::size_t>(resolution);
  s.beta.resize(n);
  s.p.resize(n);
  for (int i = 0; i < resolution; ++i) {
    s.beta[static_cast<std::size_t>(i)] = beta_grid.at(i);
    s.p[static_cast<std::size_t>(i)] = p_grid.at(i);
  }
  s.values.resize(n * n);
  detail::parallel_for(n, workers, [&](std::size_t bi) {
    const ScenarioEvaluator eval(scenario, alpha, s.beta[bi]);
    for (std::size_t pi = 0; pi < n; ++pi) s.values[bi * n + pi] = eval.value(measure, s.p[pi]);
  });
  return s;
}

std::string surface_to_csv(const Surface& surface) {
  std::string out = "beta,p,value\n";
  const auto n = static_cast<std::size_t>(surface.resolution);
  for (std::size_t bi = 0; bi < n; ++bi) {
    for (std::size_t pi = 0; pi < n; ++pi) {
      out += format_double(surface.beta[bi]) + "," + format_double(surface.p[pi]) + "," +
             format_double(surface.values[bi * n + pi]) + "\n";
    }
  }
  return out;
}

std::vector<std::filesystem::path> emit_figure_data(int figure_id, double alpha, int resolution,
                                                    const std::filesystem::path& out,
                                                    unsigned workers) {
  const FigureSpec spec = figure_spec(figure_id);
  std::vector<std::filesystem::path> written;
  for (Measure m : spec.panels) {
    std::filesystem::path target = out;
    if (spec.panels.size() > 1) {
      target.replace_filename(out.stem().string() + "_" + std::string(measure_name(m)) +
                              out.extension().string());
    }
    const Surface s = compute_surface(spec.scenario, m, alpha, resolution, workers);
    write_file_atomic(target, surface_to_csv(s));
    written.push_back(target);
  }
  return written;
}

}  // namespace unruhsim
