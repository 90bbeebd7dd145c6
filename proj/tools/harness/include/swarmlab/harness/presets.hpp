#pragma once

#include "swarmlab/harness/config.hpp"

namespace swarmlab::harness::presets {

// Canonical swarm regimes. The stampede preset drives a complete, stiffly
// coupled population toward an attractor goal; the flocking preset sits on a
// sparse random graph near the phase boundary; the nomadic preset has a zero
// social influence horizon.
SwarmExperiment stampede();
SwarmExperiment stampede_feed_injection();  // stampede + feed injection at t = 200
SwarmExperiment flocking();
SwarmExperiment flocking_densified();  // flocking + like-minded densification at t = 100
SwarmExperiment nomadic();

// Base config for the social-influence-horizon sweep experiment.
SwarmExperiment sih_sweep_base();

ExperimentConfig stampede_config();
ExperimentConfig stampede_feed_injection_config();
ExperimentConfig flocking_config();
ExperimentConfig flocking_densified_config();
ExperimentConfig nomadic_config();
ExperimentConfig sih_sweep_config();

// Route scenarios. The corridor forces every vehicle over one burning edge;
// the fork offers a longer fire-free detour.
roads::RoadNetwork corridor_network();
roads::RoadNetwork fork_network();
roads::FleetScenario corridor_scenario();
roads::FleetScenario fork_scenario(double model_b_fraction, double p_block, int wreck_threshold);

}  // namespace swarmlab::harness::presets
