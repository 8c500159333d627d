#include "nonlinlab/report.hpp"

#include <fstream>
#include <stdexcept>

namespace nonlinlab {

bool is_conjecture_statement(const std::string& id) {
  return id.rfind("conj-", 0) == 0;
}

StatementResult StatementResult::proved(std::string id, bool pass) {
  if (is_conjecture_statement(id))
    throw std::logic_error("conjecture statements cannot carry pass/fail verdicts");
  StatementResult s;
  s.id = std::move(id);
  s.verdict = pass ? "pass" : "fail";
  return s;
}

StatementResult StatementResult::conjecture(std::string id) {
  StatementResult s;
  s.id = std::move(id);
  s.verdict = "open-evidence";
  return s;
}

bool ExperimentReport::any_fail() const {
  for (const auto& s : statements)
    if (s.verdict == "fail") return true;
  return false;
}

nlohmann::json ExperimentReport::to_json(const std::string& run_at, double wall_s) const {
  nlohmann::json j;
  j["schema_version"] = schema_version;
  j["subcommand"] = subcommand;
  j["seed"] = seed;
  j["parameters"] = parameters;
  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json stmt_wall = nlohmann::json::object();
  for (const auto& s : statements) {
    nlohmann::json row;
    row["id"] = s.id;
    row["verdict"] = s.verdict;
    row["metrics"] = s.metrics;
    row["artifacts"] = s.artifacts;
    row["notes"] = s.notes;
    rows.push_back(row);
    stmt_wall[s.id] = s.wall_time_s;
  }
  j["statements"] = rows;
  j["timestamp"] = {{"run_at", run_at}, {"wall_time_s", wall_s}, {"statement_wall_s", stmt_wall}};
  return j;
}

void write_json_atomic(const nlohmann::json& j, const std::filesystem::path& path) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << j.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace nonlinlab
