#include "unruhsim/unruh.hpp"

#include <cmath>
#include <vector>

namespace unruhsim {

namespace {

struct ScenarioRow {
  Regions regions;
  ScenarioKind kind;
  std::string_view name;
  std::array<Mode, 3> kept;
  std::array<Mode, 2> damped;
  std::size_t n_damped;
};

constexpr std::array<ScenarioRow, 8> kScenarios{{
    {Regions::ABC_I, ScenarioKind::CaseI, "ABC_I", {Mode::A, Mode::B, Mode::C_I}, {Mode::C_I, Mode::C_I}, 1},
    {Regions::ABC_II, ScenarioKind::CaseI, "ABC_II", {Mode::A, Mode::B, Mode::C_II}, {Mode::C_II, Mode::C_II}, 1},
    {Regions::AB_I_C_I, ScenarioKind::CaseII, "AB_I_C_I", {Mode::A, Mode::B_I, Mode::C_I}, {Mode::B_I, Mode::C_I}, 2},
    {Regions::AB_I_C_II, ScenarioKind::CaseII, "AB_I_C_II", {Mode::A, Mode::B_I, Mode::C_II}, {Mode::B_I, Mode::C_II}, 2},
    {Regions::AB_II_C_I, ScenarioKind::CaseII, "AB_II_C_I", {Mode::A, Mode::B_II, Mode::C_I}, {Mode::B_II, Mode::C_I}, 2},
    {Regions::AB_II_C_II, ScenarioKind::CaseII, "AB_II_C_II", {Mode::A, Mode::B_II, Mode::C_II}, {Mode::B_II, Mode::C_II}, 2},
    {Regions::AB_I_B_II, ScenarioKind::CaseII, "AB_I_B_II", {Mode::A, Mode::B_I, Mode::B_II}, {Mode::B_I, Mode::B_II}, 2},
    {Regions::AC_I_C_II, ScenarioKind::CaseII, "AC_I_C_II", {Mode::A, Mode::C_I, Mode::C_II}, {Mode::C_I, Mode::C_II}, 2},
}};

const ScenarioRow& row(Regions r) { return kScenarios[static_cast<std::size_t>(r)]; }

const std::array<Scenario, 8> kAll{
    Scenario(Regions::ABC_I),     Scenario(Regions::ABC_II),     Scenario(Regions::AB_I_C_I),
    Scenario(Regions::AB_I_C_II), Scenario(Regions::AB_II_C_I),  Scenario(Regions::AB_II_C_II),
    Scenario(Regions::AB_I_B_II), Scenario(Regions::AC_I_C_II),
};

std::pair<Mode, Mode> rindler_pair(Mode m) {
  switch (m) {
    case Mode::B: return {Mode::B_I, Mode::B_II};
    case Mode::C: return {Mode::C_I, Mode::C_II};
    default: break;
  }
  throw LabelError("mode " + std::string(mode_name(m)) +
                   " cannot be expanded (only unsplit B or C)");
}

}  // namespace

GhzParams::GhzParams(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ParameterError("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

UnruhParams::UnruhParams(double beta) : beta_(beta) {
  if (!(beta >= 0.0 && beta <= kBetaMax)) {
    throw ParameterError("beta must lie in [0, pi/4], got " + std::to_string(beta));
  }
}

Scenario::Scenario(Regions regions) : kind_(row(regions).kind), regions_(regions) {}

Scenario::Scenario(ScenarioKind kind, Regions regions) : kind_(kind), regions_(regions) {
  if (row(regions).kind != kind) {
    throw ParameterError("regions " + std::string(row(regions).name) + " do not belong to " +
                         (kind == ScenarioKind::CaseI ? "CaseI" : "CaseII"));
  }
}

Scenario Scenario::parse(std::string_view name) {
  std::string_view regions = name;
  std::optional<ScenarioKind> kind;
  if (const auto slash = name.find('/'); slash != std::string_view::npos) {
    const std::string_view prefix = name.substr(0, slash);
    regions = name.substr(slash + 1);
    if (prefix == "CaseI") {
      kind = ScenarioKind::CaseI;
    } else if (prefix == "CaseII") {
      kind = ScenarioKind::CaseII;
    } else {
      throw ParameterError("unknown scenario case '" + std::string(prefix) + "'");
    }
  }
  for (const auto& r : kScenarios) {
    if (r.name == regions) return kind ? Scenario(*kind, r.regions) : Scenario(r.regions);
  }
  throw ParameterError("unknown scenario '" + std::string(name) + "'");
}

std::span<const Scenario> Scenario::all() { return kAll; }

std::string_view Scenario::name() const { return row(regions_).name; }

std::string_view Scenario::case_name() const {
  return kind_ == ScenarioKind::CaseI ? "CaseI" : "CaseII";
}

std::array<Mode, 3> Scenario::kept() const { return row(regions_).kept; }

std::span<const Mode> Scenario::damped() const {
  const auto& r = row(regions_);
  return {r.damped.data(), r.n_damped};
}

PureState build_ghz(const GhzParams& params) {
  const double a = params.alpha();
  Vector amps = Vector::Zero(8);
  amps(0) = a;
  amps(7) = std::sqrt(1.0 - a * a);
  return PureState(ModeRegister{Mode::A, Mode::B, Mode::C}, std::move(amps));
}

PureState unruh_expand(const PureState& state, Mode target, const UnruhParams& params) {
  const ModeRegister& in_reg = state.reg();
  if (!in_reg.contains(target)) {
    throw LabelError("unruh_expand: mode " + std::string(mode_name(target)) +
                     " is not in register " + in_reg.to_string());
  }
  const auto [mode_i, mode_ii] = rindler_pair(target);
  if (in_reg.contains(mode_i) || in_reg.contains(mode_ii)) {
    throw LabelError("unruh_expand: mode " + std::string(mode_name(target)) + " is already split");
  }

  const std::size_t pos = in_reg.position(target);
  std::vector<Mode> modes = in_reg.modes();
  modes[pos] = mode_i;
  modes.insert(modes.begin() + static_cast<std::ptrdiff_t>(pos) + 1, mode_ii);
  ModeRegister out_reg(std::move(modes));

  // Old index: high bits | t | low bits, with `low_bits` bits below t.
  // New index: high bits | t_I t_II | low bits.
  const std::size_t low_bits = in_reg.size() - 1 - pos;
  const std::size_t low_mask = (std::size_t{1} << low_bits) - 1;
  const double c = std::cos(params.beta());
  const double s = std::sin(params.beta());

  const Vector& in = state.amplitudes();
  Vector out = Vector::Zero(static_cast<Eigen::Index>(out_reg.dim()));
  for (Eigen::Index k = 0; k < in.size(); ++k) {
    const Complex amp = in(k);
    if (amp == Complex{}) continue;
    const auto idx = static_cast<std::size_t>(k);
    const std::size_t high = idx >> (low_bits + 1);
    const std::size_t low = idx & low_mask;
    const bool excited = (idx >> low_bits) & 1U;
    auto place = [&](unsigned pair_bits) {
      return static_cast<Eigen::Index>((((high << 2) | pair_bits) << low_bits) | low);
    };
    if (excited) {
      out(place(0b10)) += amp;
    } else {
      out(place(0b00)) += c * amp;
      out(place(0b11)) += s * amp;
    }
  }
  return PureState(std::move(out_reg), std::move(out));
}

DensityOperator scenario_reduced_state(const GhzParams& ghz, const UnruhParams& unruh,
                                       const Scenario& scenario) {
  PureState psi = build_ghz(ghz);
  if (scenario.kind() == ScenarioKind::CaseII) psi = unruh_expand(psi, Mode::B, unruh);
  psi = unruh_expand(psi, Mode::C, unruh);
  const auto keep = scenario.kept();
  return partial_trace(psi, keep);
}

}  // namespace unruhsim
