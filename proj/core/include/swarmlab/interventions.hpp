#pragma once

#include "swarmlab/dynamics.hpp"

namespace swarmlab {

enum class InjectionStrategy { Feed, Spatial };
enum class VelocityMode { Antipodal, RandomUnit };

struct InjectionSpec {
  int m = 0;
  InjectionStrategy strategy = InjectionStrategy::Feed;
  long t_inject = 0;
  double placement_spread = 1.0;
  VelocityMode velocity_mode = VelocityMode::Antipodal;

  void validate() const;
};

struct DensificationSpec {
  double similarity_tau = 0.0;
  int added_edges = 0;
  double push_gain = 0.0;

  void validate() const;
};

// Appends m Injected agents at state.t (must equal spec.t_inject). Feed agents
// are placed in a ball around the herd centroid and become globally visible
// through the feed set; Spatial agents are placed around the centroid
// reflected through the box center and are wired to everyone so that only the
// SIH governs visibility. Injected agents never update their own velocities.
// Rejects a second injection at the same step. m = 0 is the identity.
void inject_diversity(SwarmState& s, const InjectionSpec& spec);

struct DensificationOutcome {
  int requested = 0;
  int added = 0;
  bool shortfall() const { return added < requested; }
};

// Connects the closest unconnected pairs within similarity_tau (ties broken
// by id pair), then nudges each Regular agent touched by a new edge along its
// current velocity direction by push_gain.
DensificationOutcome densify_likeminded(SwarmState& s, const DensificationSpec& spec);

// Removes all Injected agents and clears the feed set. No-op when nothing
// was injected.
void remove_injection(SwarmState& s);

}  // namespace swarmlab
