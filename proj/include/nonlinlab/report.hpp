#ifndef NONLINLAB_REPORT_HPP
#define NONLINLAB_REPORT_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace nonlinlab {

/// Per-statement verdict row. Statements tied to open conjectures may only
/// report "open-evidence"; pass/fail is reserved for proved statements.
struct StatementResult {
  std::string id;       // e.g. "thm-1.5", "conj-2.1"
  std::string verdict;  // pass | fail | open-evidence
  std::map<std::string, double> metrics;
  std::vector<std::string> artifacts;
  std::string notes;
  double wall_time_s = 0.0;  // serialized under the volatile timestamp field

  static StatementResult proved(std::string id, bool pass);
  static StatementResult conjecture(std::string id);
};

struct ExperimentReport {
  std::string schema_version = "1";
  std::string subcommand;
  std::uint64_t seed = 0;
  nlohmann::json parameters;  // config echo
  std::vector<StatementResult> statements;

  bool any_fail() const;
  /// Deterministic payload plus one volatile "timestamp" field carrying the
  /// run time and wall-clock data; strip that single field to compare runs.
  nlohmann::json to_json(const std::string& run_at, double wall_s) const;
};

bool is_conjecture_statement(const std::string& id);

/// Write-temp-then-rename so readers never observe a partial file.
void write_json_atomic(const nlohmann::json& j, const std::filesystem::path& path);

}  // namespace nonlinlab

#endif
