#include "unruhsim/channels.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace unruhsim {

DampingParams::DampingParams(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("damping probability must lie in [0, 1], got " + std::to_string(p));
  }
}

KrausPair amplitude_damping_kraus(const DampingParams& params) {
  const double p = params.p();
  KrausPair k{Matrix::Zero(2, 2), Matrix::Zero(2, 2)};
  k.m0(0, 0) = 1.0;
  k.m0(1, 1) = std::sqrt(1.0 - p);
  k.m1(0, 1) = std::sqrt(p);
  return k;
}

DensityOperator apply_damping(const DensityOperator& rho, std::span<const Mode> targets,
                              const DampingParams& params) {
  if (targets.empty()) throw ParameterError("apply_damping: no target modes");
  const ModeRegister& reg = rho.reg();
  std::vector<bool> is_target(reg.size(), false);
  for (Mode m : targets) {
    const std::size_t pos = reg.position(m);  // LabelError when absent
    if (is_target[pos]) {
      throw ParameterError("apply_damping: duplicate target " + std::string(mode_name(m)));
    }
    is_target[pos] = true;
  }

  const KrausPair kraus = amplitude_damping_kraus(params);
  const Matrix id2 = Matrix::Identity(2, 2);
  const std::size_t n_targets = targets.size();
  const auto dim = static_cast<Eigen::Index>(reg.dim());

  Matrix out = Matrix::Zero(dim, dim);
  // Kraus tuple bits are read in register order of the targets.
  for (std::size_t tuple = 0; tuple < (std::size_t{1} << n_targets); ++tuple) {
    Matrix k = Matrix::Identity(1, 1);
    std::size_t t = 0;
    for (std::size_t pos = 0; pos < reg.size(); ++pos) {
      if (is_target[pos]) {
        const bool second = (tuple >> (n_targets - 1 - t)) & 1U;
        k = tensor_product(k, second ? kraus.m1 : kraus.m0);
        ++t;
      } else {
        k = tensor_product(k, id2);
      }
    }
    out.noalias() += k * rho.matrix() * k.adjoint();
  }
  return DensityOperator(reg, std::move(out));
}

}  // namespace unruhsim
