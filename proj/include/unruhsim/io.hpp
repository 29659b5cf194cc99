#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "unruhsim/sweep.hpp"

namespace unruhsim {

// 17 significant digits; round-trips every double.
std::string format_double(double v);

std::string results_to_csv(std::span<const ScenarioResult> rows);
std::string results_to_json(std::span<const ScenarioResult> rows);
std::string format_results(std::span<const ScenarioResult> rows, OutputFormat format);

// Writes to a sibling temporary and renames it into place. Throws IoError.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace unruhsim
