#pragma once

#include "swarmlab/interventions.hpp"
#include "swarmlab/metrics.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace swarmlab {

struct PeelOptions {
  double theta_peel_deg = 60.0;
  int t_peel = 20;
  // Step at which the herd direction is captured and tracking starts. When
  // unset, defaults to the injection step if an injection is scheduled.
  std::optional<long> capture_t;
};

struct ScheduledDensification {
  long t_apply = 0;
  DensificationSpec spec;
};

struct RunOptions {
  PhaseThresholds thresholds{};
  std::optional<InjectionSpec> injection;
  std::optional<ScheduledDensification> densification;
  PeelOptions peel{};
  // External per-step recorder, invoked once after every step.
  std::function<void(const SwarmState&)> sink;
};

struct RunSummary {
  long steps = 0;
  Phase final_phase = Phase::Nomadic;
  double min_phi = 0.0;
  double max_phi = 0.0;
  double final_phi = 0.0;
  double mean_phi_last_window = 0.0;
  double final_participation_ratio = 1.0;
  double final_velocity_diameter = 0.0;
  double final_mean_degree_fraction = 0.0;
  int final_peeled = 0;
  std::optional<long> first_stampede_t;
  int n_regular = 0;
  int n_injected = 0;
};

struct RunResult {
  std::vector<PhaseReport> series;
  RunSummary summary;
  // Per-agent peel state at the end of the run; empty when no tracker ran.
  std::vector<PeelTracker::AgentFlag> peel_flags;
};

// Advances the state `steps` times, applying any scheduled interventions at
// their step, recording one PhaseReport per step and invoking the sink.
RunResult run(SwarmState& s, long steps, const RunOptions& opts = {});

// One PhaseReport for the current state (used by run; exposed for tests).
PhaseReport measure(const SwarmState& s, PhaseClassifier& classifier, const PeelTracker* tracker);

}  // namespace swarmlab
