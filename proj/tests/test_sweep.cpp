#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oracle_values.hpp"
#include "unruhsim/errors.hpp"
#include "unruhsim/figure.hpp"
#include "unruhsim/io.hpp"
#include "unruhsim/sweep.hpp"

using namespace unruhsim;
namespace fs = std::filesystem;

namespace {

SweepConfig small_config() {
  SweepConfig c;
  c.beta.steps = 5;
  c.p.steps = 4;
  c.scenarios = {Scenario(Regions::ABC_I), Scenario(Regions::AB_I_C_II)};
  c.engine = EngineSelection::Both;
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir(const char* name) {
  const fs::path d = fs::temp_directory_path() / ("unruhsim_" + std::string(name));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST(Grid, ExactEndpoints) {
  const GridRange g{0.0, kBetaMax, 101};
  EXPECT_EQ(g.at(0), 0.0);
  EXPECT_EQ(g.at(100), kBetaMax);
  EXPECT_DOUBLE_EQ(g.at(50), kBetaMax / 2);
}

TEST(Config, Validation) {
  SweepConfig c;
  EXPECT_NO_THROW(c.validate());
  c.alpha = 1.5;
  EXPECT_THROW(c.validate(), ConfigError);
  c = SweepConfig{};
  c.p.steps = 1;
  EXPECT_THROW(c.validate(), ConfigError);
  c = SweepConfig{};
  c.beta.hi = 1.0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = SweepConfig{};
  c.workers = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  EXPECT_THROW(parse_engine_selection("fast"), ConfigError);
  EXPECT_THROW(parse_output_format("xml"), ConfigError);
}

TEST(Sweep, RowOrderAndCount) {
  const SweepConfig c = small_config();
  const auto rows = run_sweep(c);
  ASSERT_EQ(rows.size(), 2u * 5 * 4 * 3 * 2);
  EXPECT_EQ(rows[0].engine, Engine::Numeric);
  EXPECT_EQ(rows[1].engine, Engine::ClosedForm);
  EXPECT_EQ(rows[0].measure, Measure::S);
  EXPECT_EQ(rows[2].measure, Measure::E);
  EXPECT_EQ(rows[6].p, c.p.at(1));
  EXPECT_EQ(rows[24].beta, c.beta.at(1));
  EXPECT_EQ(rows.back().scenario, Scenario(Regions::AB_I_C_II));
}

TEST(Sweep, WorkerCountDoesNotChangeOutput) {
  SweepConfig c = small_config();
  const std::string one = results_to_csv(run_sweep(c));
  c.workers = 4;
  EXPECT_EQ(results_to_csv(run_sweep(c)), one);
  c.workers = 7;
  EXPECT_EQ(results_to_csv(run_sweep(c)), one);
}

TEST(Io, CsvSchema) {
  SweepConfig c = small_config();
  c.scenarios = {Scenario(Regions::AB_I_C_I)};
  c.measures = {Measure::C};
  c.engine = EngineSelection::Numeric;
  const std::string csv = results_to_csv(run_sweep(c));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "scenario,measure,engine,alpha,beta,p,value");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("CaseII/AB_I_C_I,C,numeric,0.70710678118654757,0,0,", 0), 0u) << line;
}

TEST(Io, SeventeenDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(0.0), "0");
  const double v = 2.0 / 3.0;
  EXPECT_EQ(std::stod(format_double(v)), v);
}

TEST(Io, JsonMirrorsCsv) {
  SweepConfig c = small_config();
  const auto rows = run_sweep(c);
  const auto j = nlohmann::json::parse(results_to_json(rows));
  ASSERT_EQ(j.size(), rows.size());
  EXPECT_EQ(j[1]["engine"], "closedform");
  EXPECT_EQ(j[0]["scenario"], "CaseI/ABC_I");
  EXPECT_EQ(j[5]["value"].get<double>(), rows[5].value);
}

TEST(Io, AtomicWriteAndErrors) {
  const fs::path d = temp_dir("io");
  write_file_atomic(d / "a.txt", "hello");
  EXPECT_EQ(slurp(d / "a.txt"), "hello");
  write_file_atomic(d / "a.txt", "bye");
  EXPECT_EQ(slurp(d / "a.txt"), "bye");
  EXPECT_EQ(std::distance(fs::directory_iterator(d), fs::directory_iterator{}), 1);
  EXPECT_THROW(write_file_atomic(d / "missing" / "a.txt", "x"), IoError);
  fs::remove_all(d);
}

TEST(Sweep, ToFileRequiresPath) {
  SweepConfig c = small_config();
  EXPECT_THROW(run_sweep_to_file(c), ConfigError);
  const fs::path d = temp_dir("sweep");
  c.output_path = (d / "out.json").string();
  c.format = OutputFormat::Json;
  const auto rows = run_sweep_to_file(c);
  EXPECT_EQ(slurp(d / "out.json"), results_to_json(rows));
  fs::remove_all(d);
}

TEST(Figure, Specs) {
  EXPECT_EQ(figure_spec(2).panels.size(), 2u);
  EXPECT_EQ(figure_spec(3).scenario, Scenario(Regions::ABC_II));
  EXPECT_EQ(figure_spec(7).scenario, Scenario(Regions::AB_I_B_II));
  EXPECT_THROW(figure_spec(0), ParameterError);
  EXPECT_THROW(figure_spec(8), ParameterError);
}

TEST(Figure, SurfaceRowMajorInBeta) {
  const Surface s = compute_surface(Scenario(Regions::ABC_I), Measure::C, oracle::kInvSqrt2, 16);
  ASSERT_EQ(s.values.size(), 256u);
  EXPECT_NEAR(s.at(0, 0), 1.0, 1e-12);
  EXPECT_NEAR(s.at(0, 15), 0.0, 1e-12);
  std::istringstream in(surface_to_csv(s));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "beta,p,value");
  std::getline(in, line);
  std::getline(in, line);
  EXPECT_EQ(line.rfind("0,0.066666666666666666,", 0), 0u) << line;
  EXPECT_THROW(compute_surface(Scenario(Regions::ABC_I), Measure::C, 0.5, 8), ParameterError);
}

TEST(Figure, MultiPanelFiles) {
  const fs::path d = temp_dir("fig");
  const auto files = emit_figure_data(2, oracle::kInvSqrt2, 16, d / "fig2.csv");
  ASSERT_EQ(files.size(), 2u);
  EXPECT_EQ(files[0].filename(), "fig2_E.csv");
  EXPECT_EQ(files[1].filename(), "fig2_C.csv");
  EXPECT_TRUE(fs::exists(files[1]));
  const auto one = emit_figure_data(1, oracle::kInvSqrt2, 16, d / "fig1.csv");
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].filename(), "fig1.csv");
  fs::remove_all(d);
}
