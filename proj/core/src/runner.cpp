#include "swarmlab/runner.hpp"

#include <algorithm>

namespace swarmlab {

PhaseReport measure(const SwarmState& s, PhaseClassifier& classifier, const PeelTracker* tracker) {
  PhaseReport r;
  r.t = s.t;
  r.phi = polarization(s, &r.phi_degenerate);
  r.velocity_diameter = velocity_diameter(s);
  r.participation_ratio = s.regular_count() >= 2 ? participation_ratio(s) : 1.0;
  r.mean_degree_fraction = mean_degree_fraction(s);
  r.phase = classifier.observe(r.phi, r.mean_degree_fraction);
  r.peeled_count = tracker ? tracker->peeled_count() : 0;
  return r;
}

RunResult run(SwarmState& s, long steps, const RunOptions& opts) {
  if (steps < 0) throw std::invalid_argument("run: steps must be >= 0");
  opts.thresholds.validate();
  if (opts.injection) opts.injection->validate();
  if (opts.densification) opts.densification->spec.validate();

  std::optional<long> capture_t = opts.peel.capture_t;
  if (!capture_t && opts.injection) capture_t = opts.injection->t_inject;

  RunResult result;
  result.series.reserve(steps);
  PhaseClassifier classifier(opts.thresholds);
  std::optional<PeelTracker> tracker;

  for (long i = 0; i < steps; ++i) {
    if (capture_t && s.t == *capture_t && !tracker)
      tracker.emplace(s, opts.peel.theta_peel_deg, opts.peel.t_peel);
    if (opts.injection && s.t == opts.injection->t_inject) inject_diversity(s, *opts.injection);
    if (opts.densification && s.t == opts.densification->t_apply)
      densify_likeminded(s, opts.densification->spec);

    step(s);
    if (tracker) tracker->update(s);
    result.series.push_back(measure(s, classifier, tracker ? &*tracker : nullptr));
    if (opts.sink) opts.sink(s);
  }

  if (tracker) result.peel_flags = tracker->flags(s);

  RunSummary& sum = result.summary;
  sum.steps = steps;
  sum.n_regular = s.regular_count();
  sum.n_injected = s.injected_count();
  if (!result.series.empty()) {
    const PhaseReport& last = result.series.back();
    sum.final_phase = last.phase;
    sum.final_phi = last.phi;
    sum.final_participation_ratio = last.participation_ratio;
    sum.final_velocity_diameter = last.velocity_diameter;
    sum.final_mean_degree_fraction = last.mean_degree_fraction;
    sum.final_peeled = last.peeled_count;
    sum.min_phi = sum.max_phi = result.series.front().phi;
    for (const auto& rec : result.series) {
      sum.min_phi = std::min(sum.min_phi, rec.phi);
      sum.max_phi = std::max(sum.max_phi, rec.phi);
      if (!sum.first_stampede_t && rec.phase == Phase::Stampede) sum.first_stampede_t = rec.t;
    }
    const int w = std::min<long>(opts.thresholds.window, result.series.size());
    double acc = 0.0;
    for (long i = steps - w; i < steps; ++i) acc += result.series[i].phi;
    sum.mean_phi_last_window = acc / w;
  }
  return result;
}

}  // namespace swarmlab
