#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "unruhsim/qcore.hpp"

namespace unruhsim {

// Amplitude of |000> in alpha|000> + sqrt(1 - alpha^2)|111>, in [0, 1].
class GhzParams {
 public:
  explicit GhzParams(double alpha);
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

// Acceleration angle, in [0, pi/4]. beta = 0 is inertial.
class UnruhParams {
 public:
  explicit UnruhParams(double beta);
  double beta() const { return beta_; }

 private:
  double beta_;
};

inline constexpr double kBetaMax = 0.78539816339744830962;  // pi/4

enum class ScenarioKind { CaseI, CaseII };

// Kept-mode combination after the Rindler expansion.
enum class Regions {
  ABC_I,
  ABC_II,
  AB_I_C_I,
  AB_I_C_II,
  AB_II_C_I,
  AB_II_C_II,
  AB_I_B_II,
  AC_I_C_II,
};

class Scenario {
 public:
  // The kind is implied by the regions for every valid combination.
  explicit Scenario(Regions regions);
  // Throws ParameterError when the regions do not belong to `kind`.
  Scenario(ScenarioKind kind, Regions regions);

  // Accepts the region name ("AB_I_C_I") optionally prefixed by the case
  // ("CaseII/AB_I_C_I").
  static Scenario parse(std::string_view name);
  static std::span<const Scenario> all();

  ScenarioKind kind() const { return kind_; }
  Regions regions() const { return regions_; }
  std::string_view name() const;
  std::string_view case_name() const;

  // Three kept modes, in register order.
  std::array<Mode, 3> kept() const;
  // Modes that couple to the damping channel (everything kept except A).
  std::span<const Mode> damped() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;

 private:
  ScenarioKind kind_;
  Regions regions_;
};

PureState build_ghz(const GhzParams& params);

// Replaces `target` (B or C) by its Rindler pair in place:
//   |0> -> cos(beta)|0>_I|0>_II + sin(beta)|1>_I|1>_II,   |1> -> |1>_I|0>_II.
PureState unruh_expand(const PureState& state, Mode target, const UnruhParams& params);

// Undamped three-mode state for the scenario: expand C (and B for CaseII),
// then trace down to the kept regions.
DensityOperator scenario_reduced_state(const GhzParams& ghz, const UnruhParams& unruh,
                                       const Scenario& scenario);

}  // namespace unruhsim
