#pragma once

#include <span>

#include "unruhsim/qcore.hpp"

namespace unruhsim {

// Decay probability P = 1 - exp(-Gamma t), in [0, 1].
class DampingParams {
 public:
  explicit DampingParams(double p);
  double p() const { return p_; }

 private:
  double p_;
};

struct KrausPair {
  Matrix m0;  // diag(1, sqrt(1 - p))
  Matrix m1;  // sqrt(p) |0><1|
};

KrausPair amplitude_damping_kraus(const DampingParams& params);

// sum over Kraus index tuples of K rho K^dagger, with K = M_i on each target
// and identity elsewhere. Every target sees the same p.
DensityOperator apply_damping(const DensityOperator& rho, std::span<const Mode> targets,
                              const DampingParams& params);

}  // namespace unruhsim
