#include "unruhsim/io.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>

#include <json.hpp>

#include <unistd.h>

namespace unruhsim {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string qualified_name(const Scenario& s) {
  return std::string(s.case_name()) + "/" + std::string(s.name());
}

}  // namespace

std::string results_to_csv(std::span<const ScenarioResult> rows) {
  std::string out = "scenario,measure,engine,alpha,beta,p,value\n";
  out.reserve(out.size() + rows.size() * 96);
  for (const auto& r : rows) {
    out += qualified_name(r.scenario);
    out += ',';
    out += measure_name(r.measure);
    out += ',';
    out += engine_name(r.engine);
    for (double v : {r.alpha, r.beta, r.p, r.value}) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

std::string results_to_json(std::span<const ScenarioResult> rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"scenario", qualified_name(r.scenario)},
                   {"measure", std::string(measure_name(r.measure))},
                   {"engine", std::string(engine_name(r.engine))},
                   {"alpha", r.alpha},
                   {"beta", r.beta},
                   {"p", r.p},
                   {"value", r.value}});
  }
  return arr.dump(2) + "\n";
}

std::string format_results(std::span<const ScenarioResult> rows, OutputFormat format) {
  return format == OutputFormat::Json ? results_to_json(rows) : results_to_csv(rows);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + tmp.string() + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoError("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("cannot move output into " + path.string() + ": " + ec.message());
  }
}

}  // namespace unruhsim
