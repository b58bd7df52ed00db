#pragma once

// Command evaluation into replayable reports, and the replay itself.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfmod/instance.hpp"

namespace hopfmod {

using Json = nlohmann::ordered_json;

/// Commands that evaluate an instance file.
const std::vector<std::string>& report_commands();

struct RunOptions {
  std::string command;
  std::string file;  // echoed in the report
  std::optional<std::string> module;
  std::optional<std::string> algebra;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
};

enum class Outcome { ok = 0, negative = 1, unknown = 2 };

struct RunResult {
  Json report;
  int exit_code = 0;
};

/// Parses and validates instance_text, then evaluates the command. Parse failures and unknown
/// object names produce an error report with exit code 2; nothing is thrown for bad input.
RunResult run_command(const RunOptions& opts, const std::string& instance_text);

/// Human-readable rendering with the same content as the JSON report.
std::string render_text(const Json& report);

struct ReplayLine {
  std::string item;
  bool pass = false;
  std::string detail;
};

/// Rebuilds the instance embedded in a report and replays every witness it carries.
std::vector<ReplayLine> verify_report(const Json& report);

Json matrix_json(const Matrix& m);
/// Throws std::invalid_argument on malformed input.
Matrix matrix_from_json(const Json& j, Field f);

}  // namespace hopfmod
