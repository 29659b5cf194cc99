#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle_values.hpp"
#include "test_support.hpp"
#include "unruhsim/errors.hpp"
#include "unruhsim/unruh.hpp"

using namespace unruhsim;

TEST(Params, Ranges) {
  EXPECT_THROW(GhzParams(-0.1), ParameterError);
  EXPECT_THROW(GhzParams(1.1), ParameterError);
  EXPECT_THROW(UnruhParams(1.0), ParameterError);
  EXPECT_NO_THROW(UnruhParams{kBetaMax});
  EXPECT_THROW(GhzParams(std::nan("")), ParameterError);
}

TEST(Ghz, Amplitudes) {
  const PureState g = build_ghz(GhzParams(0.6));
  EXPECT_EQ(g.reg(), (ModeRegister{Mode::A, Mode::B, Mode::C}));
  EXPECT_NEAR(g.amplitude("000").real(), 0.6, 1e-15);
  EXPECT_NEAR(g.amplitude("111").real(), 0.8, 1e-15);
  EXPECT_NEAR(g.amplitudes().norm(), 1.0, 1e-15);
}

TEST(Expand, SplitsModeInPlace) {
  const double beta = 0.4;
  const PureState g = build_ghz(GhzParams(0.6));
  const PureState x = unruh_expand(g, Mode::B, UnruhParams(beta));
  EXPECT_EQ(x.reg(), (ModeRegister{Mode::A, Mode::B_I, Mode::B_II, Mode::C}));
  EXPECT_NEAR(x.amplitude("0000").real(), 0.6 * std::cos(beta), 1e-15);
  EXPECT_NEAR(x.amplitude("0110").real(), 0.6 * std::sin(beta), 1e-15);
  EXPECT_NEAR(x.amplitude("1101").real(), 0.8, 1e-15);
  EXPECT_NEAR(x.amplitudes().norm(), 1.0, 1e-14);
}

TEST(Expand, Errors) {
  const PureState g = build_ghz(GhzParams(0.6));
  EXPECT_THROW(unruh_expand(g, Mode::A, UnruhParams(0.1)), LabelError);
  const PureState x = unruh_expand(g, Mode::C, UnruhParams(0.1));
  EXPECT_THROW(unruh_expand(x, Mode::C, UnruhParams(0.1)), LabelError);
}

TEST(Scenario, ParseAndNames) {
  EXPECT_EQ(Scenario::parse("CaseII/AB_I_C_I"), Scenario(Regions::AB_I_C_I));
  EXPECT_EQ(Scenario::parse("ABC_II").kind(), ScenarioKind::CaseI);
  EXPECT_THROW(Scenario::parse("CaseI/AB_I_C_I"), ParameterError);
  EXPECT_THROW(Scenario::parse("nope"), ParameterError);
  EXPECT_EQ(Scenario::all().size(), 8u);
  for (const Scenario& s : Scenario::all()) {
    EXPECT_EQ(Scenario::parse(std::string(s.case_name()) + "/" + std::string(s.name())), s);
    EXPECT_EQ(s.damped().size(), s.kind() == ScenarioKind::CaseI ? 1u : 2u);
    EXPECT_EQ(s.kept()[0], Mode::A);
  }
}

TEST(ReducedState, PhysicalForEveryScenario) {
  for (const Scenario& s : Scenario::all()) {
    const DensityOperator r = scenario_reduced_state(GhzParams(0.6), UnruhParams(0.5), s);
    EXPECT_EQ(r.dim(), 8u);
    EXPECT_TRUE(validate_density(r).ok()) << s.name();
  }
}

TEST(ReducedState, InertialLimitIsGhz) {
  const DensityOperator r =
      scenario_reduced_state(GhzParams(oracle::kInvSqrt2), UnruhParams(0.0), Scenario(Regions::ABC_I));
  EXPECT_NEAR(r(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(r(7, 7).real(), 0.5, 1e-15);
  EXPECT_NEAR(r(0, 7).real(), 0.5, 1e-15);
}

// The I/II wedges of the same particle carry a non-X coherence at (0, 3).
TEST(ReducedState, SameParticleWedgesAreNotX) {
  const double a = 0.6, beta = 0.5;
  const DensityOperator r =
      scenario_reduced_state(GhzParams(a), UnruhParams(beta), Scenario(Regions::AB_I_B_II));
  EXPECT_NEAR(std::abs(r(0, 3)), a * a * std::sin(beta) * std::cos(beta), 1e-15);
}
