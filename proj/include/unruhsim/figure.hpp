#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "unruhsim/engine.hpp"

namespace unruhsim {

struct FigureSpec {
  int id;
  Scenario scenario;
  std::vector<Measure> panels;
};

// Figures 1-7; ParameterError otherwise.
FigureSpec figure_spec(int id);

// Numeric surface on a resolution x resolution grid over
// [0, pi/4] x [0, 1], row-major in beta.
struct Surface {
  int resolution = 0;
  std::vector<double> beta;
  std::vector<double> p;
  std::vector<double> values;

  double at(int beta_index, int p_index) const {
    return values[static_cast<std::size_t>(beta_index * resolution + p_index)];
  }
};

Surface compute_surface(const Scenario& scenario, Measure measure, double alpha, int resolution,
                        unsigned workers = 1);

// "beta,p,value" with a header row.
std::string surface_to_csv(const Surface& surface);

// One CSV per panel. A single-panel figure goes to `out`; multi-panel
// figures get the measure name appended to the stem (fig2_E.csv, fig2_C.csv).
std::vector<std::filesystem::path> emit_figure_data(int figure_id, double alpha, int resolution,
                                                    const std::filesystem::path& out,
                                                    unsigned workers = 1);

}  // namespace unruhsim
