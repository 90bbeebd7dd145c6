#include "swarmlab/harness/presets.hpp"

#include <cmath>

namespace swarmlab::harness::presets {

namespace {

ExperimentConfig wrap(SwarmExperiment ex) {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::Swarm;
  cfg.swarm = std::move(ex);
  return cfg;
}

}  // namespace

SwarmExperiment stampede() {
  SwarmExperiment ex;
  ex.n = 50;
  ex.params.k = 3;
  ex.params.sih_radius = 100.0;  // covers the whole initial box
  ex.params.stiffness = 1.0;
  ex.params.kernel_beta = 0.5;
  ex.params.noise_eta = 0.0;
  ex.params.dt = 0.1;
  ex.params.v_max = 5.0;
  EnvAttractor goal;
  goal.goal = Vec::Zero(3);
  goal.gain = 0.3;
  ex.params.env = goal;
  ex.topology = Topology::complete();
  ex.steps = 400;
  ex.peel.capture_t = 200;
  return ex;
}

SwarmExperiment stampede_feed_injection() {
  SwarmExperiment ex = stampede();
  InjectionSpec spec;
  spec.m = 10;
  spec.strategy = InjectionStrategy::Feed;
  spec.t_inject = 200;
  spec.placement_spread = 1.0;
  spec.velocity_mode = VelocityMode::Antipodal;
  ex.injection = spec;
  return ex;
}

SwarmExperiment flocking() {
  SwarmExperiment ex;
  ex.n = 100;
  ex.params.k = 3;
  ex.params.sih_radius = 6.0;
  ex.params.stiffness = 1.0;
  ex.params.kernel_beta = 0.5;
  ex.params.noise_eta = 0.05;
  ex.params.dt = 0.1;
  ex.params.v_max = 5.0;
  ex.topology = Topology::random_density(0.25);
  ex.steps = 400;
  ex.thresholds.density_hi = 0.2;
  return ex;
}

SwarmExperiment flocking_densified() {
  SwarmExperiment ex = flocking();
  ScheduledDensification dense;
  dense.t_apply = 100;
  dense.spec.similarity_tau = 30.0;
  dense.spec.added_edges = 600;
  dense.spec.push_gain = 0.0;
  ex.densification = dense;
  return ex;
}

SwarmExperiment nomadic() {
  SwarmExperiment ex;
  ex.n = 100;
  ex.params.k = 3;
  ex.params.sih_radius = 0.0;
  ex.params.stiffness = 1.0;
  ex.params.kernel_beta = 0.5;
  ex.params.noise_eta = 0.05;
  ex.params.dt = 0.1;
  ex.params.v_max = 5.0;
  ex.topology = Topology::complete();
  ex.steps = 300;
  return ex;
}

SwarmExperiment sih_sweep_base() {
  SwarmExperiment ex;
  ex.n = 100;
  ex.params.k = 3;
  ex.params.sih_radius = 0.0;  // swept
  ex.params.stiffness = 1.0;
  ex.params.kernel_beta = 0.5;
  ex.params.noise_eta = 0.05;
  ex.params.dt = 0.1;
  ex.params.v_max = 5.0;
  ex.topology = Topology::random_density(0.3);
  ex.steps = 400;
  ex.thresholds.density_hi = 0.25;  // a p = 0.3 graph caps the reachable density
  return ex;
}

ExperimentConfig stampede_config() { return wrap(stampede()); }
ExperimentConfig stampede_feed_injection_config() { return wrap(stampede_feed_injection()); }
ExperimentConfig flocking_config() { return wrap(flocking()); }
ExperimentConfig flocking_densified_config() { return wrap(flocking_densified()); }
ExperimentConfig nomadic_config() { return wrap(nomadic()); }
ExperimentConfig sih_sweep_config() { return wrap(sih_sweep_base()); }

roads::RoadNetwork corridor_network() {
  roads::RoadNetwork net;
  net.add_node(0.0, 0.0);  // source
  net.add_node(1.0, 0.0);
  net.add_node(2.0, 0.0);  // destination
  net.add_edge(0, 1, 1.0);  // the fire edge
  net.add_edge(1, 2, 1.0);
  return net;
}

roads::RoadNetwork fork_network() {
  // Bent road so a straight fire line can burn the middle edge alone: every
  // other edge midpoint sits at y >= 0.5 while the fire edge midpoint is at
  // y = 0. The detour is strictly longer than the direct route.
  roads::RoadNetwork net;
  net.add_node(-1.0, 1.0);  // 0 source
  net.add_node(0.0, 0.0);   // 1 fork
  net.add_node(1.0, 0.0);   // 2
  net.add_node(2.0, 1.0);   // 3 destination
  net.add_node(0.0, 2.0);   // 4 detour
  net.add_node(2.0, 2.0);   // 5 detour
  const double sqrt2 = std::sqrt(2.0);
  net.add_edge(0, 1, sqrt2);  // lead-in
  net.add_edge(1, 2, 1.0);    // the fire edge
  net.add_edge(2, 3, sqrt2);
  net.add_edge(1, 4, 2.0);  // fire-free detour
  net.add_edge(4, 5, 2.0);
  net.add_edge(5, 3, 1.0);
  return net;
}

roads::FleetScenario corridor_scenario() {
  roads::FleetScenario sc;
  sc.network = corridor_network();
  // Static front just past the first edge midpoint: edge 0 burns from t = 0.
  sc.hazard = {0.55, 0.0, 1.0, 0.0, 0.0, 0.0};
  sc.source = 0;
  sc.destination = 2;
  sc.spawn_rate = 3.5;
  sc.model_b_fraction = 0.0;
  sc.p_block = 0.5;
  sc.wreck_threshold = 20;
  sc.vehicle_speed = 1.0;
  sc.dt = 0.1;
  sc.horizon = 20.0;
  return sc;
}

roads::FleetScenario fork_scenario(double model_b_fraction, double p_block, int wreck_threshold) {
  roads::FleetScenario sc;
  sc.network = fork_network();
  // Fire sweeps upward from below y = 0.25: only the fire edge midpoint
  // (0.5, 0) is burned, and at 0.001 mi/min nothing else ignites within the
  // horizon. Vehicles take ~85 s down the lead-in before reaching the fire.
  sc.hazard = {0.0, 0.25, 0.0, 1.0, 0.001, 0.0};
  sc.source = 0;
  sc.destination = 3;
  sc.spawn_rate = 3.5;
  sc.model_b_fraction = model_b_fraction;
  sc.p_block = p_block;
  sc.wreck_threshold = wreck_threshold;
  sc.vehicle_speed = 1.0;
  sc.dt = 0.1;
  sc.horizon = 150.0;
  return sc;
}

}  // namespace swarmlab::harness::presets
