#ifndef NONLINLAB_EXPERIMENTS_HPP
#define NONLINLAB_EXPERIMENTS_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

#include "nonlinlab/config.hpp"
#include "nonlinlab/hull_property.hpp"
#include "nonlinlab/report.hpp"

namespace nonlinlab {

struct ExperimentContext {
  Config cfg = Config::defaults();
  std::filesystem::path out_dir = "nonlinlab_out";
  std::uint64_t seed = 42;
  int threads = 1;
};

/// Uniform open-interval samples of the half-circle arc theta in (0, pi)
/// with the sample nearest pi/2 snapped onto it, so the discrete maximum of
/// the vertical functional is realized exactly at the apex.
std::vector<TaggedPoint2> arc_interior_samples(int n, double scale = 1.0);

ExperimentReport run_hull_check(const ExperimentContext& ctx);
ExperimentReport run_monge(const ExperimentContext& ctx);
ExperimentReport run_radial(const ExperimentContext& ctx);
ExperimentReport run_annulus(const ExperimentContext& ctx);
ExperimentReport run_gamma(const ExperimentContext& ctx);
ExperimentReport run_minimax(const ExperimentContext& ctx);
ExperimentReport run_connectivity(const ExperimentContext& ctx);
ExperimentReport run_all(const ExperimentContext& ctx);

ExperimentReport run_subcommand(const std::string& name, const ExperimentContext& ctx);

/// Full command-line front end; returns the process exit code:
/// 0 all verdicts pass/open, 1 some proved statement failed,
/// 2 configuration error, 3 runtime failure (partial report written).
int cli_main(int argc, char** argv);

}  // namespace nonlinlab

#endif
