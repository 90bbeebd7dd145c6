#pragma once

#include "swarmlab/harness/config.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace swarmlab::harness {

// Seeds a population and runs the experiment; shared by the commands, the
// acceptance suite, and anything that wants results without files.
RunResult execute_swarm(const SwarmExperiment& ex, std::uint64_t seed);
roads::FleetResult execute_route(const RouteExperiment& ex, std::uint64_t seed);

// Writes timeseries.csv and summary.json.
void cmd_swarm_run(const ExperimentConfig& cfg, std::uint64_t seed,
                   const std::filesystem::path& out_dir);

// Writes events.csv and summary.json.
void cmd_route_run(const ExperimentConfig& cfg, std::uint64_t seed,
                   const std::filesystem::path& out_dir);

struct SweepSpec {
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 1;
};

// Known sweep parameter names (swarm configs only).
std::vector<std::string> sweep_param_names();
void apply_sweep_param(SwarmExperiment& ex, const std::string& name, double value);

// Grid of runs over one numeric parameter x seeds; writes sweep.csv (sorted
// by value then seed) and summary.json. Cells may execute in parallel.
void cmd_sweep(const ExperimentConfig& cfg, const SweepSpec& sweep,
               const std::vector<std::uint64_t>& seeds, const std::filesystem::path& out_dir,
               int jobs = 0);

// Paired control/treatment runs per seed; writes compare.csv and summary.json
// with per-seed deltas and their medians.
void cmd_compare(const ExperimentConfig& control, const ExperimentConfig& treatment,
                 const std::vector<std::uint64_t>& seeds, const std::filesystem::path& out_dir,
                 int jobs = 0);

}  // namespace swarmlab::harness
