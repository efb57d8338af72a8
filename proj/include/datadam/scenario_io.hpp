#pragma once

#include <filesystem>
#include <string>

#include "datadam/engine.hpp"
#include "datadam/scenario.hpp"

namespace datadam {

/// Loads and validates a version-1 scenario document. Unknown fields are
/// rejected; noise_std, seed and initial_storage default to 0 when omitted.
/// Throws ParseError (malformed JSON, with position), ValidationError (named
/// field) or UnknownFieldError.
Scenario load_scenario(const std::filesystem::path& path);

/// Writes a scenario document that load_scenario reproduces field for field.
/// Writes are atomic (temp file, then rename).
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

/// CSV for a completed run: header
/// t,inflow,outflow_commanded,outflow_actual,storage,spill,step_cost
/// then one row per step, 6 decimal places, '\n' line endings. Byte-stable
/// across runs for identical results.
std::string trajectory_csv_string(const RunResult& result);
void write_trajectory_csv(const RunResult& result, const std::filesystem::path& path);

/// Comparison report as JSON with stable key order and full-precision numbers.
std::string report_json_string(const ComparisonReport& report);
void write_report_json(const ComparisonReport& report, const std::filesystem::path& path);

} // namespace datadam
