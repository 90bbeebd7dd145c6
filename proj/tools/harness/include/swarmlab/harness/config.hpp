#pragma once

#include "swarmlab/fleet_sim.hpp"
#include "swarmlab/runner.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace swarmlab::harness {

// Configuration and parsing problems, reported with the offending field path.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ExperimentKind { Swarm, Route };

struct SwarmExperiment {
  int n = 100;
  DynamicsParams params{};
  Topology topology{};
  long steps = 400;
  PhaseThresholds thresholds{};
  std::optional<InjectionSpec> injection;
  std::optional<ScheduledDensification> densification;
  PeelOptions peel{};
};

struct RouteExperiment {
  roads::FleetScenario scenario{};
  std::string network_file;  // as written in the config
};

// One experiment description: a swarm or route scenario plus seeds.
// Parsing is fail-closed: unknown keys are rejected by name, defaults are
// filled in and echoed back by to_json() so outputs carry the full resolved
// configuration.
struct ExperimentConfig {
  int schema_version = 1;
  ExperimentKind kind = ExperimentKind::Swarm;
  SwarmExperiment swarm{};
  RouteExperiment route{};
  std::vector<std::uint64_t> seeds{1};
  std::string out_dir;  // optional; the CLI --out flag overrides it

  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j,
                                    const std::filesystem::path& base_dir);
  static ExperimentConfig load_file(const std::filesystem::path& path);
};

}  // namespace swarmlab::harness
