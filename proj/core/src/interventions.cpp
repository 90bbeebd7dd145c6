#include "swarmlab/interventions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace swarmlab {

void InjectionSpec::validate() const {
  if (m < 0) throw std::invalid_argument("injection: m must be >= 0");
  if (t_inject < 0) throw std::invalid_argument("injection: t_inject must be >= 0");
  if (!(placement_spread > 0.0)) throw std::invalid_argument("injection: placement_spread must be > 0");
}

void DensificationSpec::validate() const {
  if (similarity_tau < 0.0) throw std::invalid_argument("densification: similarity_tau must be >= 0");
  if (added_edges < 0) throw std::invalid_argument("densification: added_edges must be >= 0");
  if (push_gain < 0.0) throw std::invalid_argument("densification: push_gain must be >= 0");
}

namespace {

// Uniform point in the k-ball of given radius around center.
Vec sample_ball(std::mt19937_64& rng, const Vec& center, double radius, int k) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec g(k);
  for (int c = 0; c < k; ++c) g[c] = normal(rng);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double u = u01(rng);
  double n = g.norm();
  if (n == 0.0) {
    g.setZero();
    g[0] = 1.0;
    n = 1.0;
  }
  return center + (radius * std::pow(u, 1.0 / k) / n) * g;
}

Vec sample_unit(std::mt19937_64& rng, int k) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec g(k);
  for (int c = 0; c < k; ++c) g[c] = normal(rng);
  const double n = g.norm();
  if (n == 0.0) {
    g.setZero();
    g[0] = 1.0;
    return g;
  }
  return g / n;
}

}  // namespace

void inject_diversity(SwarmState& s, const InjectionSpec& spec) {
  spec.validate();
  if (s.t != spec.t_inject)
    throw std::invalid_argument("inject_diversity: state is not at the injection step");
  if (s.last_injection_step && *s.last_injection_step == s.t)
    throw std::invalid_argument("inject_diversity: already injected at this step");
  if (spec.m == 0) return;

  const int k = s.params.k;
  const Vec centroid = s.regular_centroid();
  const Vec center = spec.strategy == InjectionStrategy::Spatial ? Vec(-centroid) : centroid;

  Vec antipodal;
  if (spec.velocity_mode == VelocityMode::Antipodal) {
    const Vec mean_v = s.mean_regular_velocity();
    const double n = mean_v.norm();
    if (n <= 1e-12)
      throw std::invalid_argument("inject_diversity: herd direction undefined (zero mean velocity)");
    antipodal = -mean_v / n;
  }

  const int old_n = s.agent_count();
  const int new_n = old_n + spec.m;
  s.graph.resize(new_n);
  for (int idx = 0; idx < spec.m; ++idx) {
    AgentState a;
    a.id = old_n + idx;
    a.kind = AgentKind::Injected;
    a.rigidity = 0.0;
    a.x = sample_ball(s.rng, center, spec.placement_spread, k);
    a.v = spec.velocity_mode == VelocityMode::Antipodal ? antipodal : sample_unit(s.rng, k);
    s.agents.push_back(std::move(a));
    if (spec.strategy == InjectionStrategy::Feed) {
      s.feed_set.insert(old_n + idx);
    } else {
      for (int j = 0; j < old_n + idx; ++j) s.graph.set_weight(old_n + idx, j, 1.0);
    }
  }
  s.last_injection_step = s.t;
}

DensificationOutcome densify_likeminded(SwarmState& s, const DensificationSpec& spec) {
  spec.validate();
  DensificationOutcome out{spec.added_edges, 0};
  if (spec.added_edges == 0 && spec.push_gain == 0.0) return out;

  const int n = s.agent_count();
  struct Candidate {
    double dist;
    int i, j;
  };
  std::vector<Candidate> eligible;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (s.graph.weight(i, j) > 0.0) continue;
      const double d = (s.agents[i].x - s.agents[j].x).norm();
      if (d <= spec.similarity_tau) eligible.push_back({d, i, j});
    }
  std::sort(eligible.begin(), eligible.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.dist, a.i, a.j) < std::tie(b.dist, b.i, b.j);
  });

  const int to_add = std::min<int>(spec.added_edges, static_cast<int>(eligible.size()));
  std::set<int> touched;
  for (int e = 0; e < to_add; ++e) {
    s.graph.set_weight(eligible[e].i, eligible[e].j, 1.0);
    touched.insert(eligible[e].i);
    touched.insert(eligible[e].j);
  }
  out.added = to_add;

  if (spec.push_gain > 0.0) {
    for (int id : touched) {
      AgentState& a = s.agents[id];
      if (a.kind != AgentKind::Regular) continue;
      const double speed = a.v.norm();
      if (speed <= 1e-12) continue;
      a.v += (spec.push_gain / speed) * a.v;
      clamp_speed(a.v, s.params.v_max);
    }
  }
  return out;
}

void remove_injection(SwarmState& s) {
  const int n = s.agent_count();
  int first_injected = n;
  for (int i = 0; i < n; ++i) {
    if (s.agents[i].kind == AgentKind::Injected) {
      first_injected = i;
      break;
    }
  }
  // Injected agents are always an appended tail.
  for (int i = first_injected; i < n; ++i) {
    if (s.agents[i].kind != AgentKind::Injected)
      throw std::logic_error("remove_injection: injected agents are not a contiguous tail");
  }
  s.agents.resize(first_injected);
  s.graph.resize(first_injected);
  s.feed_set.clear();
}

}  // namespace swarmlab
