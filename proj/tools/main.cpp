#include "swarmlab/harness/commands.hpp"
#include "swarmlab/harness/config.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using swarmlab::harness::ConfigError;
using swarmlab::harness::ExperimentConfig;

// Accepts "7", "1,2,5" or "1..20" (inclusive range).
std::vector<std::uint64_t> parse_seeds(const std::string& expr) {
  std::vector<std::uint64_t> seeds;
  const auto range_pos = expr.find("..");
  if (range_pos != std::string::npos) {
    const std::uint64_t from = std::stoull(expr.substr(0, range_pos));
    const std::uint64_t to = std::stoull(expr.substr(range_pos + 2));
    if (to < from) throw ConfigError("--seeds: range end before start");
    if (to - from > 1000000) throw ConfigError("--seeds: range too large");
    for (std::uint64_t s = from; s <= to; ++s) seeds.push_back(s);
    return seeds;
  }
  std::size_t pos = 0;
  while (pos < expr.size()) {
    const auto comma = expr.find(',', pos);
    const std::string tok = expr.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!tok.empty()) seeds.push_back(std::stoull(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (seeds.empty()) throw ConfigError("--seeds: no seeds given");
  return seeds;
}

std::uint64_t pick_seed(const ExperimentConfig& cfg, const std::uint64_t* flag_seed) {
  if (flag_seed) return *flag_seed;
  return cfg.seeds.front();
}

std::string pick_out(const ExperimentConfig& cfg, const std::string& flag_out,
                     const char* command) {
  if (!flag_out.empty()) return flag_out;
  if (!cfg.out_dir.empty()) return cfg.out_dir;
  throw ConfigError(std::string(command) + ": no output directory (--out or config \"out\")");
}

std::vector<std::uint64_t> pick_seeds(const ExperimentConfig& cfg, const std::string& seeds_expr) {
  if (!seeds_expr.empty()) return parse_seeds(seeds_expr);
  return cfg.seeds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"swarmlab: belief-space swarm and fleet-routing experiment harness"};
  app.require_subcommand(1);

  std::string config_path, treatment_path, out_dir, seeds_expr, param;
  std::uint64_t seed = 0;
  double from = 0.0, to = 0.0;
  int steps = 1;
  int jobs = 0;

  auto* swarm_run = app.add_subcommand("swarm-run", "Run one seeded swarm experiment");
  swarm_run->add_option("--config", config_path, "Experiment config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  auto* sr_seed = swarm_run->add_option("--seed", seed, "PRNG seed (default: first config seed)");
  swarm_run->add_option("--out", out_dir, "Output directory");

  auto* route_run = app.add_subcommand("route-run", "Run one seeded fleet scenario");
  route_run->add_option("--config", config_path, "Experiment config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  auto* rr_seed = route_run->add_option("--seed", seed, "PRNG seed (default: first config seed)");
  route_run->add_option("--out", out_dir, "Output directory");

  auto* sweep = app.add_subcommand("sweep", "Grid of runs over one numeric parameter");
  sweep->add_option("--config", config_path, "Experiment config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  sweep->add_option("--param", param, "Parameter name to sweep")->required();
  sweep->add_option("--from", from, "First grid value")->required();
  sweep->add_option("--to", to, "Last grid value")->required();
  sweep->add_option("--steps", steps, "Number of grid points")->required();
  sweep->add_option("--seeds", seeds_expr, "Seeds, e.g. 1..10 or 1,2,3 (default: config seeds)");
  sweep->add_option("--out", out_dir, "Output directory");
  sweep->add_option("--jobs", jobs, "Parallel cells (0 = hardware concurrency)");

  auto* compare = app.add_subcommand("compare", "Paired control/treatment runs per seed");
  compare->add_option("--config", config_path, "Control config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  compare->add_option("--treatment", treatment_path, "Treatment config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  compare->add_option("--seeds", seeds_expr, "Seeds, e.g. 1..20 (default: control config seeds)");
  compare->add_option("--out", out_dir, "Output directory");
  compare->add_option("--jobs", jobs, "Parallel cells (0 = hardware concurrency)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (swarm_run->parsed()) {
      const auto cfg = ExperimentConfig::load_file(config_path);
      const std::uint64_t s = pick_seed(cfg, sr_seed->count() ? &seed : nullptr);
      swarmlab::harness::cmd_swarm_run(cfg, s, pick_out(cfg, out_dir, "swarm-run"));
    } else if (route_run->parsed()) {
      const auto cfg = ExperimentConfig::load_file(config_path);
      const std::uint64_t s = pick_seed(cfg, rr_seed->count() ? &seed : nullptr);
      swarmlab::harness::cmd_route_run(cfg, s, pick_out(cfg, out_dir, "route-run"));
    } else if (sweep->parsed()) {
      const auto cfg = ExperimentConfig::load_file(config_path);
      swarmlab::harness::SweepSpec spec{param, from, to, steps};
      swarmlab::harness::cmd_sweep(cfg, spec, pick_seeds(cfg, seeds_expr),
                                   pick_out(cfg, out_dir, "sweep"), jobs);
    } else if (compare->parsed()) {
      const auto control = ExperimentConfig::load_file(config_path);
      const auto treatment = ExperimentConfig::load_file(treatment_path);
      swarmlab::harness::cmd_compare(control, treatment, pick_seeds(control, seeds_expr),
                                     pick_out(control, out_dir, "compare"), jobs);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
