#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <variant>

namespace swarmlab {

using Vec = Eigen::VectorXd;

enum class AgentKind { Regular, Injected };

// One agent in belief space. `rigidity` splits attention between in-group
// neighbors (weight rigidity) and injected/feed neighbors (weight 1 - rigidity).
struct AgentState {
  int id = 0;
  Vec x;  // belief position
  Vec v;  // belief velocity
  double rigidity = 0.5;
  AgentKind kind = AgentKind::Regular;
};

struct EnvNone {};

// Constant-magnitude pull toward a goal point; force is zero at the goal itself.
struct EnvAttractor {
  Vec goal;
  double gain = 1.0;
};

// Axis-aligned box [-half_width, half_width]^k; crossing coordinates are
// reflected about the boundary and the velocity component negated.
struct EnvReflectingBox {
  double half_width = 10.0;
};

using Environment = std::variant<EnvNone, EnvAttractor, EnvReflectingBox>;

struct DynamicsParams {
  int k = 3;                 // belief dimension
  double sih_radius = 10.0;  // social influence horizon
  double stiffness = 1.0;    // coupling gain applied to the whole social term
  double kernel_beta = 0.5;  // communication decay exponent
  double noise_eta = 0.0;
  double dt = 0.1;
  double v_max = 5.0;
  Environment env = EnvNone{};

  // Throws std::invalid_argument on any out-of-range field.
  void validate() const;

  // Half-width L of the initial position cube: the box half-width when the
  // environment is a reflecting box, 10 otherwise.
  double init_half_width() const;
};

enum class TopologyKind { Complete, RandomDensity, SimilarityThreshold };

// Descriptor for the initial influence graph.
struct Topology {
  TopologyKind kind = TopologyKind::Complete;
  double density = 1.0;  // edge probability for RandomDensity
  double tau = 0.0;      // distance cutoff for SimilarityThreshold

  static Topology complete() { return {TopologyKind::Complete, 1.0, 0.0}; }
  static Topology random_density(double p) { return {TopologyKind::RandomDensity, p, 0.0}; }
  static Topology similarity_threshold(double t) { return {TopologyKind::SimilarityThreshold, 1.0, t}; }
};

}  // namespace swarmlab
