#pragma once

#include "swarmlab/dynamics.hpp"

#include <deque>
#include <map>
#include <string>
#include <vector>

namespace swarmlab {

enum class Phase { Nomadic, Flocking, Stampede };

const char* to_string(Phase p);
Phase phase_from_string(const std::string& s);

struct PhaseThresholds {
  double phi_hi = 0.9;
  double phi_lo = 0.3;
  double density_hi = 0.5;
  int window = 10;

  void validate() const;  // requires 0 <= phi_lo < phi_hi <= 1, window >= 1
};

struct PhaseReport {
  long t = 0;
  double phi = 0.0;
  bool phi_degenerate = false;
  double velocity_diameter = 0.0;
  double participation_ratio = 1.0;
  double mean_degree_fraction = 0.0;
  Phase phase = Phase::Nomadic;
  int peeled_count = 0;
};

// Vicsek order parameter over Regular agents with speed > 1e-12.
// Returns 0 (and sets *degenerate) when no such agent exists.
double polarization(const SwarmState& s, bool* degenerate = nullptr);

// Max pairwise velocity distance over Regular agents; 0 for fewer than two.
double velocity_diameter(const SwarmState& s);

// Effective dimensionality (sum lambda)^2 / sum lambda^2 of the positional
// covariance of Regular agents. Returns 1 when total variance < 1e-12.
// Throws for fewer than two Regular agents.
double participation_ratio(const SwarmState& s);

// Mean |effective_neighbors| over Regular agents, divided by (n - 1).
double mean_degree_fraction(const SwarmState& s);

// Pure classification rule. `phi` is expected to be the trailing-window mean.
Phase classify_phase(double phi, double mean_degree_fraction, const PhaseThresholds& th);

// Applies classify_phase to a trailing-window mean of phi to suppress flicker.
class PhaseClassifier {
 public:
  explicit PhaseClassifier(PhaseThresholds th = {});

  Phase observe(double phi, double mean_degree_fraction);
  double windowed_phi() const;
  bool window_full() const { return static_cast<int>(window_.size()) >= thresholds_.window; }
  const PhaseThresholds& thresholds() const { return thresholds_; }

 private:
  PhaseThresholds thresholds_;
  std::deque<double> window_;
  double window_sum_ = 0.0;
};

// Tracks which Regular agents have deviated from the herd direction (captured
// at construction) by more than theta_peel for t_peel consecutive steps.
class PeelTracker {
 public:
  // Captures the mean Regular velocity direction; throws if it is zero.
  PeelTracker(const SwarmState& s, double theta_peel_deg = 60.0, int t_peel = 20);

  void update(const SwarmState& s);

  // Agents currently past the consecutive-step threshold.
  int peeled_count() const;

  struct AgentFlag {
    int id = 0;
    bool peeled = false;
    double rigidity = 0.0;
  };
  std::vector<AgentFlag> flags(const SwarmState& s) const;

  const Vec& herd_direction() const { return herd_direction_; }

 private:
  Vec herd_direction_;
  double cos_threshold_ = 0.5;
  int t_peel_ = 20;
  std::map<int, int> consecutive_;  // id -> consecutive deviating steps
};

}  // namespace swarmlab
