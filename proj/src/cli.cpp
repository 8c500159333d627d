#include <chrono>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nonlinlab/experiments.hpp"

namespace nonlinlab {

namespace {

std::string iso_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int run_and_write(const std::string& subcommand, const ExperimentContext& ctx) {
  std::filesystem::create_directories(ctx.out_dir);
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentReport rep;
  bool runtime_failure = false;
  std::string failure_what;
  try {
    rep = run_subcommand(subcommand, ctx);
  } catch (const ConfigError& e) {
    std::cerr << "config error";
    if (e.line_number > 0) std::cerr << " (line " << e.line_number << ")";
    if (!e.field.empty()) std::cerr << " [" << e.field << "]";
    std::cerr << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    runtime_failure = true;
    failure_what = e.what();
    rep.subcommand = subcommand;
    rep.seed = ctx.seed;
    StatementResult err = StatementResult::proved("runtime-error", false);
    err.notes = failure_what;
    rep.statements.push_back(std::move(err));
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto path = ctx.out_dir / ("report_" + subcommand + ".json");
  write_json_atomic(rep.to_json(iso_now(), wall), path);
  std::cout << "report: " << path.string() << "\n";
  for (const auto& s : rep.statements)
    std::cout << "  " << s.id << ": " << s.verdict << "\n";
  if (runtime_failure) {
    std::cerr << "runtime failure: " << failure_what << "\n";
    return 3;
  }
  return rep.any_fail() ? 1 : 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"nonlinlab: numerical experiments for a family of nonlinear-analysis statements"};
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string out_dir = "nonlinlab_out";
  std::uint64_t seed = 42;
  int threads = 1;
  bool print_config = false;
  app.add_option("--config", config_path, "configuration file (sectioned key = value)");
  app.add_option("--out", out_dir, "output directory for reports and CSV artifacts");
  app.add_option("--seed", seed, "seed for every randomized protocol");
  app.add_option("--threads", threads, "worker threads for parameter sweeps");
  app.add_flag("--print-config", print_config, "print the default configuration and exit");

  const std::vector<std::string> names{"hull-check", "monge",   "radial",       "annulus",
                                       "gamma",      "minimax", "connectivity", "all"};
  for (const auto& n : names)
    app.add_subcommand(n, "run the " + n + " experiment family")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (print_config) {
    std::cout << Config::defaults().print();
    return 0;
  }

  std::string chosen;
  for (const auto& n : names)
    if (app.get_subcommand(n)->parsed()) chosen = n;
  if (chosen.empty()) {
    std::cerr << "no subcommand given; try --help\n";
    return 2;
  }

  ExperimentContext ctx;
  ctx.out_dir = out_dir;
  ctx.seed = seed;
  ctx.threads = threads;
  if (!config_path.empty()) {
    try {
      ctx.cfg = Config::load(config_path);
    } catch (const ConfigError& e) {
      std::cerr << "config error";
      if (e.line_number > 0) std::cerr << " (line " << e.line_number << ")";
      if (!e.field.empty()) std::cerr << " [" << e.field << "]";
      std::cerr << ": " << e.what() << "\n";
      return 2;
    }
  }
  return run_and_write(chosen, ctx);
}

}  // namespace nonlinlab
