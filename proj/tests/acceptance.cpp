// Acceptance criteria 1-9, one PASS/FAIL line each. Criteria listed in
// kExpectedRed fail for reasons outside the engine (printed entries that are
// not trace preserving, a strict bound that is attained on the grid edge);
// they print FAIL with the measured numbers and do not fail the binary.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "test_support.hpp"
#include "unruhsim/audit.hpp"
#include "unruhsim/boundary.hpp"
#include "unruhsim/channels.hpp"
#include "unruhsim/engine.hpp"
#include "unruhsim/io.hpp"

using namespace unruhsim;
namespace fs = std::filesystem;
using testing_support::max_abs;
using testing_support::random_density;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kPi6 = 0.52359877559829887308;

const std::set<std::string> kExpectedRed{"2b", "6"};

int unexpected = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
  const bool expected_red = kExpectedRed.count(id) != 0;
  std::printf("criterion %-3s %s  %s%s\n", id.c_str(), pass ? "PASS" : "FAIL", detail.c_str(),
              !pass && expected_red ? "  [expected red]" : "");
  if (!pass && !expected_red) ++unexpected;
}

std::string g(double v) { return format_double(v); }

void criterion1() {
  const MeasureTriple v = numeric_measures(Scenario(Regions::ABC_I), kInvSqrt2, 0.0, 0.0);
  const bool ok = std::abs(v.s - 4 * std::sqrt(2.0)) < 1e-12 && std::abs(v.e_gte - 1) < 1e-12 &&
                  std::abs(v.c - 1) < 1e-12;
  report("1", ok, "S=" + g(v.s) + " E=" + g(v.e_gte) + " C=" + g(v.c));
}

void criterion2() {
  const double a = kInvSqrt2, b = kPi6, P = 0.3;
  const double c = std::cos(b), s = std::sin(b), q2 = 1 - a * a;

  // ABC_I: undamped d1 = a^2 c^2, d2 = a^2 s^2, e1 = 1 - a^2, f1 = a q c.
  {
    const DensityOperator r = ScenarioEvaluator(Scenario(Regions::ABC_I), a, b).damped(P);
    const double d1 = a * a * c * c, d2 = a * a * s * s, e1 = q2, f1 = a * std::sqrt(q2) * c;
    const double printed[][3] = {{0, 0, d1 + P * d2}, {1, 1, (1 - P) * d2}, {6, 6, P * e1},
                                 {7, 7, (1 - P) * e1}, {0, 7, std::sqrt(1 - P) * f1}};
    double worst = 0;
    for (const auto& e : printed) {
      worst = std::max(worst, std::abs(r(int(e[0]), int(e[1])).real() - e[2]));
    }
    Matrix expected = Matrix::Zero(8, 8);
    for (const auto& e : printed) expected(int(e[0]), int(e[1])) = e[2];
    expected(7, 0) = expected(0, 7);
    worst = std::max(worst, max_abs(r.matrix() - expected));
    report("2a", worst < 1e-12, "ABC_I max entry deviation " + g(worst));
  }

  // AB_I_C_I: d1 = a^2 c^4, d2 = d3 = a^2 c^2 s^2, d4 = a^2 s^4, e1 = 1 - a^2,
  // f1 = a q c^2.
  {
    const DensityOperator r = ScenarioEvaluator(Scenario(Regions::AB_I_C_I), a, b).damped(P);
    const double d1 = a * a * c * c * c * c, d2 = a * a * c * c * s * s, d3 = d2;
    const double d4 = a * a * s * s * s * s, e1 = q2, f1 = a * std::sqrt(q2) * c * c;
    struct Entry {
      const char* name;
      int row, col;
      double printed;
    };
    const Entry entries[] = {
        {"d1'", 0, 0, d1 - P * (d2 + d3) + P * P * d4},
        {"d2'", 1, 1, (1 - P) * d2 + P * (1 - P) * d4},
        {"d3'", 2, 2, (1 - P) * d3 - P * (1 - P) * d4},
        {"d4'", 3, 3, (1 - P) * (1 - P) * d4},
        {"e4'", 4, 4, P * e1},
        {"e3'", 5, 5, P * (1 - P) * e1},
        {"e2'", 6, 6, 0.0},
        {"e1'", 7, 7, (1 - P) * (1 - P) * e1},
        {"f1'", 0, 7, (1 - P) * f1},
    };
    std::string bad;
    double worst = 0, printed_trace = 0;
    for (const auto& e : entries) {
      const double dev = std::abs(r(e.row, e.col).real() - e.printed);
      if (e.row == e.col) printed_trace += e.printed;
      worst = std::max(worst, dev);
      if (dev > 1e-12) {
        bad += std::string(" ") + e.name + "(numeric " + g(r(e.row, e.col).real()) + " printed " +
               g(e.printed) + ")";
      }
    }
    report("2b", worst < 1e-12,
           "AB_I_C_I max entry deviation " + g(worst) + "; printed trace " + g(printed_trace) +
               (bad.empty() ? "" : ";" + bad));
  }
}

void criterion3() {
  const ScenarioEvaluator inertial(Scenario(Regions::ABC_I), kInvSqrt2, 0.0);
  const BoundaryPoint bp = find_crossing(inertial, Measure::S, 0.0);
  double scan = -1;
  for (long i = 0; i <= 100000; ++i) {
    const double p = i * 1e-5;
    if (!(inertial.value(Measure::S, p) > 4.0)) {
      scan = p;
      break;
    }
  }
  const double p_star = bp.p_star.value_or(-1);
  const double s_edge =
      ScenarioEvaluator(Scenario(Regions::ABC_I), kInvSqrt2, kBetaMax).value(Measure::S, 0.0);
  const bool ok = std::abs(p_star - 0.5) < 1e-6 && std::abs(scan - p_star) <= 1e-5 &&
                  std::abs(s_edge - 4.0) < 1e-9;
  report("3", ok, "P*(beta=0)=" + g(p_star) + " scan(1e-5)=" + g(scan) + " S(beta=pi/4,P=0)=" +
                      g(s_edge));
}

void criterion4() {
  const GridRange beta{0.0, kBetaMax, 101};
  const GridRange p{0.0, 1.0, 101};
  double worst = 0;
  for (int i = 0; i < 101; ++i) {
    const ScenarioEvaluator ev(Scenario(Regions::ABC_II), kInvSqrt2, beta.at(i));
    for (int j = 0; j < 101; ++j) {
      const MeasureTriple v = ev.at(p.at(j)).values;
      worst = std::max(worst, std::abs(v.e_gte - v.c));
    }
  }
  report("4", worst < 1e-10, "max |E - C| on ABC_II = " + g(worst));
}

void criterion5() {
  WeightedRuleProfile prof;
  const auto rules = survey_sum_rules(1000, SweepConfig{}.seed, 1, &prof);
  bool ok = true;
  std::string detail;
  for (const auto& r : rules) {
    detail += r.name + "=" + g(r.max_residual) + " ";
    if (r.asserted && !(r.max_residual < 1e-10)) ok = false;
  }
  // The weighted rule must be reported with its alpha dependence.
  const bool profile_ok = prof.points.size() == 11 && prof.max_model_deviation < 1e-12 &&
                          prof.points.front().residual == 0.0 &&
                          prof.points.back().residual == 0.0 && prof.points[5].residual < 0.0;
  detail += "weighted defect model deviation " + g(prof.max_model_deviation);
  report("5", ok && profile_ok, detail);
}

void criterion6() {
  const GridRange beta{0.0, kBetaMax, 101};
  const GridRange p{0.0, 1.0, 101};
  double best = -1, at_b = 0, at_p = 0;
  for (int i = 0; i < 101; ++i) {
    const ScenarioEvaluator ev(Scenario(Regions::ABC_II), kInvSqrt2, beta.at(i));
    for (int j = 0; j < 101; ++j) {
      const double s = ev.value(Measure::S, p.at(j));
      if (s > best) {
        best = s;
        at_b = beta.at(i);
        at_p = p.at(j);
      }
    }
  }
  report("6", best < 4.0,
         "max S(ABC_II) = " + g(best) + " at beta=" + g(at_b) + " P=" + g(at_p) +
             " (attained on the grid edge)");
}

void criterion7() {
  std::mt19937_64 rng(20230815);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double completeness = 0, trace = 0, min_eig = 1, commute = 0;
  const ModeRegister reg{Mode::A, Mode::B, Mode::C, Mode::C_II};
  const std::vector<Mode> all{Mode::B, Mode::C, Mode::C_II};
  const std::vector<Mode> kept_targets{Mode::B, Mode::C};
  const std::vector<Mode> keep{Mode::A, Mode::B, Mode::C};
  for (int i = 0; i < 200; ++i) {
    const DampingParams d(u(rng));
    const KrausPair k = amplitude_damping_kraus(d);
    completeness = std::max(completeness, max_abs(k.m0.adjoint() * k.m0 + k.m1.adjoint() * k.m1 -
                                                  Matrix::Identity(2, 2)));
    const DensityOperator rho(reg, random_density(16, rng));
    const DensityOperator out = apply_damping(rho, all, d);
    const ValidationReport v = validate_density(out);
    trace = std::max(trace, v.trace_deviation);
    min_eig = std::min(min_eig, v.min_eigenvalue);
    commute = std::max(commute, max_abs(partial_trace(out, keep).matrix() -
                                        apply_damping(partial_trace(rho, keep), kept_targets, d).matrix()));
  }
  const bool ok = completeness < 1e-14 && trace < 1e-13 && min_eig >= -1e-10 && commute < 1e-13;
  report("7", ok, "completeness " + g(completeness) + " trace " + g(trace) + " min_eig " +
                      g(min_eig) + " commutation " + g(commute));
}

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::string& args, const fs::path& out) {
  const std::string cmd = std::string(UNRUHSIM_CLI_PATH) + " " + args + " > " + out.string();
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

void criterion8() {
  const fs::path dir = fs::temp_directory_path() / "unruhsim_acceptance";
  fs::create_directories(dir);
  const std::string args = "audit --scenario all --beta-steps 41 --p-steps 41";
  const CliRun a = run_cli(args, dir / "a.txt");
  const CliRun b = run_cli(args, dir / "b.txt");
  fs::remove_all(dir);

  // The flagged AB_I_C_I S line carries both engine values.
  const auto at = a.out.find("  CaseII/AB_I_C_I S at beta=");
  const std::string line = at == std::string::npos ? "" : a.out.substr(at, a.out.find('\n', at) - at);
  // The S-branch table isolates the f-branch: numeric 8 sqrt2 max|f| vs printed.
  double f_dev = 0.0;
  if (const auto sec = a.out.find("S branches"); sec != std::string::npos) {
    const auto row = a.out.find("\nCaseII/AB_I_C_I ", sec);
    if (row != std::string::npos) {
      std::istringstream in(a.out.substr(row + 1, a.out.find('\n', row + 1) - row - 1));
      std::string name;
      in >> name >> f_dev;
    }
  }
  const bool ok = a.code == 4 && b.code == 4 && a.out == b.out && !a.out.empty() &&
                  line.find("numeric=") != std::string::npos &&
                  line.find("closedform=") != std::string::npos && f_dev > 1e-8;
  report("8", ok, "exit " + std::to_string(a.code) + "/" + std::to_string(b.code) +
                      (a.out == b.out ? ", identical reports" : ", reports differ") +
                      "; AB_I_C_I f-branch deviation " + g(f_dev) + ";" +
                      line.substr(std::min<std::size_t>(line.size(), 1)));
}

void criterion9() {
  SweepConfig c;
  c.engine = EngineSelection::Both;
  const auto t0 = std::chrono::steady_clock::now();
  const std::string one = results_to_csv(run_sweep(c));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.workers = 4;
  const std::string four = results_to_csv(run_sweep(c));
  const bool ok = secs < 5.0 && one == four;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", secs);
  report("9", ok, std::string("101x101x3x2 single worker ") + buf + " s; 4 workers " +
                      (one == four ? "byte-identical" : "DIFFERENT"));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  return unexpected == 0 ? 0 : 1;
}
