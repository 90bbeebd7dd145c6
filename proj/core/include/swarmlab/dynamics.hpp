#pragma once

#include "swarmlab/graph.hpp"
#include "swarmlab/types.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace swarmlab {

// Full population state. Copyable; a copy replays identically because the
// PRNG engine is part of the value.
struct SwarmState {
  std::vector<AgentState> agents;
  InfluenceGraph graph;
  DynamicsParams params;
  long t = 0;
  std::mt19937_64 rng;
  std::set<int> feed_set;  // agent ids globally visible to everyone
  std::optional<long> last_injection_step;

  int agent_count() const { return static_cast<int>(agents.size()); }
  int regular_count() const;
  int injected_count() const { return agent_count() - regular_count(); }

  // Mean position / mean velocity over Regular agents.
  Vec regular_centroid() const;
  Vec mean_regular_velocity() const;
};

// Seeds a fresh population. Draw order is fixed per agent in id order
// (k position uniforms, k velocity uniforms, one rigidity uniform), then one
// uniform per unordered pair in lexicographic order for RandomDensity graphs.
// Identical (n, params, topology, seed) yields a bit-identical state.
SwarmState init_population(int n, const DynamicsParams& params, const Topology& topology,
                           std::uint64_t seed);

// Graph neighbors within the social influence horizon, plus feed members
// (visible regardless of edges and distance). Sorted by id.
std::vector<int> effective_neighbors(const SwarmState& s, int i);

// psi(r) = (1 + r^2)^(-beta). psi(0) = 1, monotone non-increasing in r.
double communication_kernel(double r, double beta);

// Kernel-weighted velocity alignment over the effective neighbors. Attention
// weight is rigidity toward Regular neighbors and (1 - rigidity) toward
// Injected or feed neighbors.
Vec social_force(const SwarmState& s, int i);

// Environment pull at position x (zero for EnvNone and inside a reflecting
// box; box reflection itself happens in step()).
Vec env_force(const DynamicsParams& params, const Vec& x);

// One synchronous explicit-Euler update: all social forces are evaluated on
// the pre-step state, noise is drawn per Regular agent in id order, speeds
// clamp to v_max, then positions advance and reflect at box walls. Injected
// agents keep their velocity (fixed beacons) but still advance and reflect.
void step(SwarmState& s);

// Norm-clamps v to max_speed.
void clamp_speed(Vec& v, double max_speed);

}  // namespace swarmlab
