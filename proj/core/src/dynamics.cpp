#include "swarmlab/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace swarmlab {

void DynamicsParams::validate() const {
  if (k < 1) throw std::invalid_argument("params: belief dimension k must be >= 1");
  if (!(dt > 0.0)) throw std::invalid_argument("params: dt must be > 0");
  if (!(v_max > 0.0)) throw std::invalid_argument("params: v_max must be > 0");
  if (sih_radius < 0.0) throw std::invalid_argument("params: sih_radius must be >= 0");
  if (stiffness < 0.0) throw std::invalid_argument("params: stiffness must be >= 0");
  if (kernel_beta < 0.0) throw std::invalid_argument("params: kernel_beta must be >= 0");
  if (noise_eta < 0.0) throw std::invalid_argument("params: noise_eta must be >= 0");
  if (const auto* box = std::get_if<EnvReflectingBox>(&env)) {
    if (!(box->half_width > 0.0)) throw std::invalid_argument("params: box half_width must be > 0");
  } else if (const auto* at = std::get_if<EnvAttractor>(&env)) {
    if (at->gain < 0.0) throw std::invalid_argument("params: attractor gain must be >= 0");
    if (at->goal.size() != k) throw std::invalid_argument("params: attractor goal dimension != k");
  }
}

double DynamicsParams::init_half_width() const {
  if (const auto* box = std::get_if<EnvReflectingBox>(&env)) return box->half_width;
  return 10.0;
}

int SwarmState::regular_count() const {
  int m = 0;
  for (const auto& a : agents)
    if (a.kind == AgentKind::Regular) ++m;
  return m;
}

Vec SwarmState::regular_centroid() const {
  Vec c = Vec::Zero(params.k);
  int m = 0;
  for (const auto& a : agents) {
    if (a.kind != AgentKind::Regular) continue;
    c += a.x;
    ++m;
  }
  if (m == 0) throw std::logic_error("regular_centroid: no Regular agents");
  return c / m;
}

Vec SwarmState::mean_regular_velocity() const {
  Vec v = Vec::Zero(params.k);
  int m = 0;
  for (const auto& a : agents) {
    if (a.kind != AgentKind::Regular) continue;
    v += a.v;
    ++m;
  }
  if (m == 0) throw std::logic_error("mean_regular_velocity: no Regular agents");
  return v / m;
}

void clamp_speed(Vec& v, double max_speed) {
  const double n = v.norm();
  if (n > max_speed) v *= max_speed / n;
}

SwarmState init_population(int n, const DynamicsParams& params, const Topology& topology,
                           std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("init_population: n must be >= 1");
  params.validate();
  switch (topology.kind) {
    case TopologyKind::Complete:
      break;
    case TopologyKind::RandomDensity:
      if (topology.density < 0.0 || topology.density > 1.0)
        throw std::invalid_argument("init_population: edge probability must be in [0, 1]");
      break;
    case TopologyKind::SimilarityThreshold:
      if (topology.tau < 0.0)
        throw std::invalid_argument("init_population: similarity threshold must be >= 0");
      break;
  }

  SwarmState s;
  s.params = params;
  s.rng.seed(seed);
  s.t = 0;

  const double L = params.init_half_width();
  std::uniform_real_distribution<double> pos_dist(-L, L);
  std::uniform_real_distribution<double> vel_dist(-1.0, 1.0);
  std::uniform_real_distribution<double> rig_dist(0.0, 1.0);

  s.agents.resize(n);
  for (int i = 0; i < n; ++i) {
    AgentState& a = s.agents[i];
    a.id = i;
    a.kind = AgentKind::Regular;
    a.x = Vec(params.k);
    a.v = Vec(params.k);
    for (int c = 0; c < params.k; ++c) a.x[c] = pos_dist(s.rng);
    for (int c = 0; c < params.k; ++c) a.v[c] = vel_dist(s.rng);
    clamp_speed(a.v, params.v_max);
    a.rigidity = rig_dist(s.rng);
  }

  s.graph = InfluenceGraph(n, topology.kind);
  switch (topology.kind) {
    case TopologyKind::Complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s.graph.set_weight(i, j, 1.0);
      break;
    case TopologyKind::RandomDensity: {
      std::uniform_real_distribution<double> u(0.0, 1.0);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (u(s.rng) < topology.density) s.graph.set_weight(i, j, 1.0);
      break;
    }
    case TopologyKind::SimilarityThreshold:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if ((s.agents[i].x - s.agents[j].x).norm() <= topology.tau) s.graph.set_weight(i, j, 1.0);
      break;
  }
  return s;
}

std::vector<int> effective_neighbors(const SwarmState& s, int i) {
  const int n = s.agent_count();
  if (i < 0 || i >= n) throw std::out_of_range("effective_neighbors: invalid agent id " + std::to_string(i));
  std::vector<int> out;
  const Vec& xi = s.agents[i].x;
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    if (s.feed_set.count(j)) {
      out.push_back(j);
      continue;
    }
    if (s.graph.weight(i, j) > 0.0 && (s.agents[j].x - xi).norm() <= s.params.sih_radius)
      out.push_back(j);
  }
  return out;
}

double communication_kernel(double r, double beta) {
  if (r < 0.0) throw std::invalid_argument("communication_kernel: r must be >= 0");
  if (beta < 0.0) throw std::invalid_argument("communication_kernel: beta must be >= 0");
  return std::pow(1.0 + r * r, -beta);
}

Vec social_force(const SwarmState& s, int i) {
  const AgentState& ai = s.agents.at(i);
  Vec f = Vec::Zero(s.params.k);
  for (int j : effective_neighbors(s, i)) {
    const AgentState& aj = s.agents[j];
    const bool outgroup = aj.kind == AgentKind::Injected || s.feed_set.count(j) > 0;
    const double attention = outgroup ? 1.0 - ai.rigidity : ai.rigidity;
    const double psi = communication_kernel((aj.x - ai.x).norm(), s.params.kernel_beta);
    f += attention * psi * (aj.v - ai.v);
  }
  return s.params.stiffness * f;
}

Vec env_force(const DynamicsParams& params, const Vec& x) {
  if (const auto* at = std::get_if<EnvAttractor>(&params.env)) {
    const Vec d = at->goal - x;
    const double n = d.norm();
    if (n == 0.0) return Vec::Zero(params.k);
    return (at->gain / n) * d;
  }
  return Vec::Zero(params.k);
}

void step(SwarmState& s) {
  const int n = s.agent_count();
  const DynamicsParams& p = s.params;
  std::vector<Vec> next_v(n);
  std::normal_distribution<double> normal(0.0, 1.0);

  for (int i = 0; i < n; ++i) {
    const AgentState& a = s.agents[i];
    if (a.kind == AgentKind::Injected) {
      next_v[i] = a.v;
      continue;
    }
    Vec accel = social_force(s, i) + env_force(p, a.x);
    for (int c = 0; c < p.k; ++c) accel[c] += p.noise_eta * normal(s.rng);
    next_v[i] = a.v + p.dt * accel;
    clamp_speed(next_v[i], p.v_max);
  }

  const auto* box = std::get_if<EnvReflectingBox>(&p.env);
  for (int i = 0; i < n; ++i) {
    AgentState& a = s.agents[i];
    a.v = next_v[i];
    a.x += p.dt * a.v;
    if (box) {
      const double L = box->half_width;
      for (int c = 0; c < p.k; ++c) {
        while (a.x[c] > L || a.x[c] < -L) {
          a.x[c] = a.x[c] > L ? 2.0 * L - a.x[c] : -2.0 * L - a.x[c];
          a.v[c] = -a.v[c];
        }
      }
    }
  }
  ++s.t;
}

}  // namespace swarmlab
