#pragma once

#include <array>
#include <string_view>

#include "unruhsim/qcore.hpp"

namespace unruhsim {

// Three-qubit X-matrix: d_i on diagonal entry i-1, e_i on entry 8-i, f_i at
// (i-1, 8-i). So d_1 pairs with e_1 at |000>,|111> and d_4 with e_4 at
// |011>,|100>.
struct XState {
  std::array<double, 4> d{};
  std::array<double, 4> e{};
  std::array<Complex, 4> f{};
};

// Throws StructureError if any entry off the diagonal/antidiagonal exceeds
// `tol` in magnitude; the message names the worst entry.
XState extract_xstate(const DensityOperator& rho, double tol = 1e-12);

// X-part of an arbitrary three-qubit operator. The X-part is what the local
// twirl over {III, ZZI, ZIZ, IZZ} leaves behind; `off_x_max` is the largest
// magnitude it discarded.
struct XProjection {
  XState x;
  double off_x_max = 0.0;
  Eigen::Index worst_row = -1;
  Eigen::Index worst_col = -1;
};

XProjection project_xstate(const DensityOperator& rho);

enum class Measure { S, E, C };

std::string_view measure_name(Measure m);
Measure parse_measure(std::string_view name);

// N = d1 - d2 - d3 + d4 - e4 + e3 + e2 - e1.
double svetlichny_n(const XState& x);

// Svetlichny value max(8 sqrt2 max|f_i|, 4|N|). GTN iff > 4.
double gtn(const XState& x);

// Genuine tripartite entanglement 2 max(0, max_i |f_i| - m_i),
// m_i = sum_{j != i} sqrt(d_j e_j).
double gte(const XState& x);

// Sum of |rho_ij| over i != j.
double coherence_l1(const Matrix& rho);
double coherence_l1(const DensityOperator& rho);

struct MeasureTriple {
  double s = 0.0;
  double e_gte = 0.0;
  double c = 0.0;

  double get(Measure m) const;
};

}  // namespace unruhsim
