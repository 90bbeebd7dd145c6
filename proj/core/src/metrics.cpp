#include "swarmlab/metrics.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swarmlab {

namespace {
constexpr double kSpeedFloor = 1e-12;
constexpr double kVarianceFloor = 1e-12;
}  // namespace

const char* to_string(Phase p) {
  switch (p) {
    case Phase::Nomadic: return "Nomadic";
    case Phase::Flocking: return "Flocking";
    case Phase::Stampede: return "Stampede";
  }
  return "Nomadic";
}

Phase phase_from_string(const std::string& s) {
  if (s == "Nomadic") return Phase::Nomadic;
  if (s == "Flocking") return Phase::Flocking;
  if (s == "Stampede") return Phase::Stampede;
  throw std::invalid_argument("unknown phase name: " + s);
}

void PhaseThresholds::validate() const {
  if (!(0.0 <= phi_lo && phi_lo < phi_hi && phi_hi <= 1.0))
    throw std::invalid_argument("thresholds: need 0 <= phi_lo < phi_hi <= 1");
  if (density_hi < 0.0 || density_hi > 1.0)
    throw std::invalid_argument("thresholds: density_hi must be in [0, 1]");
  if (window < 1) throw std::invalid_argument("thresholds: window must be >= 1");
}

double polarization(const SwarmState& s, bool* degenerate) {
  Vec sum = Vec::Zero(s.params.k);
  int m = 0;
  for (const auto& a : s.agents) {
    if (a.kind != AgentKind::Regular) continue;
    const double speed = a.v.norm();
    if (speed <= kSpeedFloor) continue;
    sum += a.v / speed;
    ++m;
  }
  if (m == 0) {
    if (degenerate) *degenerate = true;
    return 0.0;
  }
  if (degenerate) *degenerate = false;
  return sum.norm() / m;
}

double velocity_diameter(const SwarmState& s) {
  double best = 0.0;
  const int n = s.agent_count();
  for (int i = 0; i < n; ++i) {
    if (s.agents[i].kind != AgentKind::Regular) continue;
    for (int j = i + 1; j < n; ++j) {
      if (s.agents[j].kind != AgentKind::Regular) continue;
      best = std::max(best, (s.agents[i].v - s.agents[j].v).norm());
    }
  }
  return best;
}

double participation_ratio(const SwarmState& s) {
  std::vector<const Vec*> pts;
  for (const auto& a : s.agents)
    if (a.kind == AgentKind::Regular) pts.push_back(&a.x);
  const int m = static_cast<int>(pts.size());
  if (m < 2) throw std::invalid_argument("participation_ratio: needs at least two Regular agents");

  const int k = s.params.k;
  Vec mean = Vec::Zero(k);
  for (const Vec* p : pts) mean += *p;
  mean /= m;

  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(k, k);
  for (const Vec* p : pts) {
    const Vec d = *p - mean;
    cov += d * d.transpose();
  }
  cov /= m;

  if (cov.trace() < kVarianceFloor) return 1.0;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < k; ++i) {
    const double lambda = std::max(0.0, solver.eigenvalues()[i]);
    sum += lambda;
    sum_sq += lambda * lambda;
  }
  if (sum_sq == 0.0) return 1.0;
  return sum * sum / sum_sq;
}

double mean_degree_fraction(const SwarmState& s) {
  const int n = s.agent_count();
  if (n <= 1) return 0.0;
  double total = 0.0;
  int m = 0;
  for (int i = 0; i < n; ++i) {
    if (s.agents[i].kind != AgentKind::Regular) continue;
    total += static_cast<double>(effective_neighbors(s, i).size());
    ++m;
  }
  if (m == 0) return 0.0;
  return total / m / (n - 1);
}

Phase classify_phase(double phi, double density, const PhaseThresholds& th) {
  th.validate();
  if (phi >= th.phi_hi && density >= th.density_hi) return Phase::Stampede;
  if (phi <= th.phi_lo) return Phase::Nomadic;
  return Phase::Flocking;
}

PhaseClassifier::PhaseClassifier(PhaseThresholds th) : thresholds_(th) { th.validate(); }

Phase PhaseClassifier::observe(double phi, double density) {
  window_.push_back(phi);
  window_sum_ += phi;
  if (static_cast<int>(window_.size()) > thresholds_.window) {
    window_sum_ -= window_.front();
    window_.pop_front();
  }
  return classify_phase(windowed_phi(), density, thresholds_);
}

double PhaseClassifier::windowed_phi() const {
  if (window_.empty()) return 0.0;
  return window_sum_ / static_cast<double>(window_.size());
}

PeelTracker::PeelTracker(const SwarmState& s, double theta_peel_deg, int t_peel)
    : t_peel_(t_peel) {
  if (t_peel < 1) throw std::invalid_argument("PeelTracker: t_peel must be >= 1");
  Vec mean = s.mean_regular_velocity();
  const double n = mean.norm();
  if (n <= kSpeedFloor)
    throw std::invalid_argument("PeelTracker: herd direction undefined (zero mean velocity)");
  herd_direction_ = mean / n;
  cos_threshold_ = std::cos(theta_peel_deg * std::numbers::pi / 180.0);
  for (const auto& a : s.agents)
    if (a.kind == AgentKind::Regular) consecutive_[a.id] = 0;
}

void PeelTracker::update(const SwarmState& s) {
  for (const auto& a : s.agents) {
    auto it = consecutive_.find(a.id);
    if (it == consecutive_.end() || a.kind != AgentKind::Regular) continue;
    const double speed = a.v.norm();
    // A stopped agent is not moving with the herd; count it as deviating.
    const bool deviates = speed <= kSpeedFloor || a.v.dot(herd_direction_) / speed < cos_threshold_;
    it->second = deviates ? it->second + 1 : 0;
  }
}

int PeelTracker::peeled_count() const {
  int count = 0;
  for (const auto& [id, run] : consecutive_)
    if (run >= t_peel_) ++count;
  return count;
}

std::vector<PeelTracker::AgentFlag> PeelTracker::flags(const SwarmState& s) const {
  std::vector<AgentFlag> out;
  out.reserve(consecutive_.size());
  for (const auto& [id, run] : consecutive_) {
    AgentFlag f;
    f.id = id;
    f.peeled = run >= t_peel_;
    f.rigidity = s.agents.at(id).rigidity;
    out.push_back(f);
  }
  return out;
}

}  // namespace swarmlab
