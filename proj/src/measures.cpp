#include "unruhsim/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace unruhsim {

namespace {

bool on_x_pattern(Eigen::Index r, Eigen::Index c) { return r == c || r + c == 7; }

void require_three_modes(const DensityOperator& rho) {
  if (rho.reg().size() != 3) {
    throw StructureError("X-state extraction needs a three-mode operator, got " +
                         rho.reg().to_string());
  }
}

XState read_x(const Matrix& m) {
  XState x;
  for (Eigen::Index i = 0; i < 4; ++i) {
    x.d[i] = m(i, i).real();
    x.e[i] = m(7 - i, 7 - i).real();
    x.f[i] = m(i, 7 - i);
  }
  return x;
}

}  // namespace

XProjection project_xstate(const DensityOperator& rho) {
  require_three_modes(rho);
  const Matrix& m = rho.matrix();
  XProjection out;
  out.x = read_x(m);
  for (Eigen::Index r = 0; r < 8; ++r) {
    for (Eigen::Index c = 0; c < 8; ++c) {
      if (on_x_pattern(r, c)) continue;
      const double mag = std::abs(m(r, c));
      if (mag > out.off_x_max) {
        out.off_x_max = mag;
        out.worst_row = r;
        out.worst_col = c;
      }
    }
  }
  return out;
}

XState extract_xstate(const DensityOperator& rho, double tol) {
  XProjection proj = project_xstate(rho);
  if (proj.off_x_max > tol) {
    throw StructureError("operator is not an X-state: |rho(" + std::to_string(proj.worst_row) +
                         "," + std::to_string(proj.worst_col) +
                         ")| = " + std::to_string(proj.off_x_max) + " exceeds " +
                         std::to_string(tol));
  }
  return proj.x;
}

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::S: return "S";
    case Measure::E: return "E";
    case Measure::C: return "C";
  }
  return "?";
}

Measure parse_measure(std::string_view name) {
  if (name == "S") return Measure::S;
  if (name == "E") return Measure::E;
  if (name == "C") return Measure::C;
  throw ParameterError("unknown measure '" + std::string(name) + "' (expected S, E or C)");
}

double svetlichny_n(const XState& x) {
  const auto& d = x.d;
  const auto& e = x.e;
  return d[0] - d[1] - d[2] + d[3] - e[3] + e[2] + e[1] - e[0];
}

double gtn(const XState& x) {
  double fmax = 0.0;
  for (const Complex& f : x.f) fmax = std::max(fmax, std::abs(f));
  return std::max(8.0 * std::sqrt(2.0) * fmax, 4.0 * std::abs(svetlichny_n(x)));
}

double gte(const XState& x) {
  std::array<double, 4> root{};
  for (std::size_t j = 0; j < 4; ++j) {
    // clamp tiny negative round-off on diagonal entries
    root[j] = std::sqrt(std::max(0.0, x.d[j] * x.e[j]));
  }
  double best = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double m = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      if (j != i) m += root[j];
    }
    best = std::max(best, std::abs(x.f[i]) - m);
  }
  return 2.0 * best;
}

double coherence_l1(const Matrix& rho) {
  double sum = 0.0;
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      if (r != c) sum += std::abs(rho(r, c));
    }
  }
  return sum;
}

double coherence_l1(const DensityOperator& rho) { return coherence_l1(rho.matrix()); }

double MeasureTriple::get(Measure m) const {
  switch (m) {
    case Measure::S: return s;
    case Measure::E: return e_gte;
    case Measure::C: return c;
  }
  return 0.0;
}

}  // namespace unruhsim
