#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace ivgen {

enum class CheckStatus { pass, fail, skip };
std::string_view to_string(CheckStatus s);

struct ClaimReport {
  std::string id;
  CheckStatus status = CheckStatus::skip;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  nlohmann::ordered_json witness;  // set on FAIL
  std::string reason;              // set on SKIP, optional otherwise
  double elapsed_ms = 0;
};

struct Report {
  std::string command;
  std::vector<ClaimReport> claims;

  std::size_t count(CheckStatus s) const;
  /// 0 when nothing failed, 1 otherwise.
  int exit_code() const;
  nlohmann::ordered_json to_json(bool include_timing = true) const;
  std::string to_text() const;
};

inline constexpr std::string_view kReportSchema = "ivgen.report/1";

/// Runs one subcommand. `args` is a JSON object of named options (see the CLI
/// help for the keys). Throws Error on usage or data problems.
Report run_command(std::string_view command, const nlohmann::json& args);
std::vector<std::string> command_names();

struct ClaimTask {
  std::string id;
  std::function<ClaimReport()> run;
};
/// Runs tasks on up to `jobs` threads; results keep the task order. Elapsed
/// time is filled in, and CapExceeded turns into SKIP.
std::vector<ClaimReport> run_tasks(std::vector<ClaimTask> tasks, unsigned jobs);

}  // namespace ivgen
