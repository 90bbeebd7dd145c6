#include "swarmlab/metrics.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <Eigen/Geometry>

#include <cmath>

using namespace swarmlab;

namespace {

SwarmState make_state(int n, int k, std::uint64_t seed = 1,
                      Topology topo = Topology::complete()) {
  DynamicsParams p;
  p.k = k;
  p.sih_radius = 100.0;
  return init_population(n, p, topo, seed);
}

int phase_rank(Phase p) {
  switch (p) {
    case Phase::Nomadic: return 0;
    case Phase::Flocking: return 1;
    case Phase::Stampede: return 2;
  }
  return 0;
}

}  // namespace

TEST_CASE("polarization: alignment anchors") {
  auto s = make_state(6, 3);
  Vec v(3);
  v << 0.3, -0.2, 0.9;
  for (auto& a : s.agents) a.v = v;
  CHECK(polarization(s) == doctest::Approx(1.0).epsilon(1e-12));

  auto pair = make_state(2, 3);
  pair.agents[0].v = v;
  pair.agents[1].v = -v;
  CHECK(polarization(pair) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("polarization: matches direct summation and excludes injected") {
  auto s = make_state(5, 3, 42);
  std::vector<std::vector<double>> vel;
  for (const auto& a : s.agents) vel.push_back({a.v[0], a.v[1], a.v[2]});
  CHECK(polarization(s) == doctest::Approx(oracles::polarization_direct(vel)).epsilon(1e-13));

  // An injected agent with a huge opposing velocity must not move the number.
  const double before = polarization(s);
  AgentState beacon;
  beacon.id = 5;
  beacon.kind = AgentKind::Injected;
  beacon.x = Vec::Zero(3);
  beacon.v = Vec(3);
  beacon.v << -100.0, 0.0, 0.0;
  s.agents.push_back(beacon);
  s.graph.resize(6);
  CHECK(polarization(s) == before);
}

TEST_CASE("polarization: all-zero velocities are degenerate") {
  auto s = make_state(4, 3);
  for (auto& a : s.agents) a.v.setZero();
  bool degenerate = false;
  CHECK(polarization(s, &degenerate) == 0.0);
  CHECK(degenerate);

  // Sub-threshold speeds are excluded from the sum.
  s.agents[0].v << 1e-13, 0.0, 0.0;
  CHECK(polarization(s, &degenerate) == 0.0);
  CHECK(degenerate);
}

TEST_CASE("polarization: invariant under rotation and per-agent speed rescaling") {
  auto s = make_state(15, 3, 7);
  const double base = polarization(s);

  Eigen::Vector3d axis(0.3, -1.0, 0.7);
  const Eigen::Matrix3d rot = Eigen::AngleAxisd(1.1, axis.normalized()).toRotationMatrix();
  auto rotated = s;
  for (auto& a : rotated.agents) a.v = rot * a.v;
  CHECK(polarization(rotated) == doctest::Approx(base).epsilon(1e-12));

  auto scaled = s;
  scaled.agents[4].v *= 37.5;  // positive rescale of one agent
  CHECK(polarization(scaled) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("velocity_diameter: anchors and exhaustive scan") {
  auto one = make_state(1, 3);
  CHECK(velocity_diameter(one) == 0.0);

  auto s = make_state(4, 2, 3);
  for (auto& a : s.agents) a.v << 1.0, 2.0;
  CHECK(velocity_diameter(s) == 0.0);

  s.agents[0].v << 0.0, 0.0;
  s.agents[1].v << 3.0, 0.0;
  s.agents[2].v << 0.0, -4.0;
  s.agents[3].v << 1.0, 1.0;
  double best = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      best = std::max(best, (s.agents[i].v - s.agents[j].v).norm());
  CHECK(velocity_diameter(s) == doctest::Approx(best).epsilon(1e-15));
}

TEST_CASE("velocity_diameter: adding an agent never decreases it") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto s = make_state(3, 3, 5);
  double prev = velocity_diameter(s);
  for (int extra = 0; extra < 20; ++extra) {
    AgentState a;
    a.id = s.agent_count();
    a.kind = AgentKind::Regular;
    a.x = Vec::Zero(3);
    a.v = Vec(3);
    for (int c = 0; c < 3; ++c) a.v[c] = normal(rng);
    s.agents.push_back(a);
    s.graph.resize(s.agent_count());
    const double cur = velocity_diameter(s);
    CHECK(cur >= prev - 1e-15);
    prev = cur;
  }
}

TEST_CASE("participation_ratio: collinear cloud is one-dimensional") {
  auto s = make_state(10, 3, 9);
  Vec dir(3);
  dir << 1.0, 2.0, -0.5;
  for (int i = 0; i < 10; ++i) s.agents[i].x = (i * 0.7) * dir;
  CHECK(participation_ratio(s) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("participation_ratio: square corners are two-dimensional") {
  auto s = make_state(4, 2, 9);
  s.agents[0].x << 1.0, 1.0;
  s.agents[1].x << 1.0, -1.0;
  s.agents[2].x << -1.0, 1.0;
  s.agents[3].x << -1.0, -1.0;
  CHECK(participation_ratio(s) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("participation_ratio: matches the hand-rolled eigensolver") {
  auto s = make_state(20, 3, 123);
  std::vector<std::vector<double>> pts;
  for (const auto& a : s.agents) pts.push_back({a.x[0], a.x[1], a.x[2]});
  CHECK(participation_ratio(s) ==
        doctest::Approx(oracles::participation_ratio_naive(pts)).epsilon(1e-9));
}

TEST_CASE("participation_ratio: degenerate and error cases") {
  auto s = make_state(5, 3);
  for (auto& a : s.agents) a.x.setZero();  // variance below the floor
  CHECK(participation_ratio(s) == 1.0);

  auto one = make_state(1, 3);
  CHECK_THROWS_AS(participation_ratio(one), std::invalid_argument);
}

TEST_CASE("participation_ratio: invariant under rotation and uniform scaling") {
  auto s = make_state(25, 3, 31);
  const double base = participation_ratio(s);

  Eigen::Vector3d axis(1.0, 0.2, -0.4);
  const Eigen::Matrix3d rot = Eigen::AngleAxisd(0.8, axis.normalized()).toRotationMatrix();
  auto rotated = s;
  for (auto& a : rotated.agents) a.x = rot * a.x;
  CHECK(participation_ratio(rotated) == doctest::Approx(base).epsilon(1e-10));

  auto scaled = s;
  for (auto& a : scaled.agents) a.x *= 12.75;
  CHECK(participation_ratio(scaled) == doctest::Approx(base).epsilon(1e-10));
}

TEST_CASE("mean_degree_fraction: complete graph with a wide horizon is 1") {
  auto s = make_state(12, 3, 2);
  CHECK(mean_degree_fraction(s) == doctest::Approx(1.0).epsilon(1e-15));
  s.params.sih_radius = 0.0;
  CHECK(mean_degree_fraction(s) == 0.0);
}

TEST_CASE("classify_phase: definitional anchors") {
  PhaseThresholds th;
  CHECK(classify_phase(1.0, 1.0, th) == Phase::Stampede);
  CHECK(classify_phase(0.0, 0.0, th) == Phase::Nomadic);
  CHECK(classify_phase(0.6, 0.2, th) == Phase::Flocking);
  // High alignment without density is not a stampede.
  CHECK(classify_phase(0.95, 0.2, th) == Phase::Flocking);
}

TEST_CASE("classify_phase: monotone in phi at fixed density") {
  PhaseThresholds th;
  for (double density : {0.0, 0.3, 0.5, 0.9}) {
    int prev = 0;
    for (double phi = 0.0; phi <= 1.0 + 1e-9; phi += 0.01) {
      const int rank = phase_rank(classify_phase(std::min(phi, 1.0), density, th));
      CHECK(rank >= prev);
      prev = rank;
    }
  }
}

TEST_CASE("PhaseThresholds: validation") {
  PhaseThresholds bad;
  bad.phi_lo = 0.95;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = PhaseThresholds{};
  bad.window = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("PhaseClassifier: trailing window suppresses flicker") {
  PhaseThresholds th;
  th.window = 10;
  PhaseClassifier c(th);
  // Warm up at high alignment.
  Phase last = Phase::Nomadic;
  for (int i = 0; i < 10; ++i) last = c.observe(1.0, 1.0);
  CHECK(last == Phase::Stampede);
  CHECK(c.window_full());
  // One noisy dip does not leave Stampede: windowed mean stays >= 0.9.
  last = c.observe(0.2, 1.0);
  CHECK(c.windowed_phi() == doctest::Approx(0.92));
  CHECK(last == Phase::Stampede);
}

TEST_CASE("PeelTracker: parallel herd never peels, anti-parallel does") {
  auto s = make_state(10, 3, 77);
  Vec dir(3);
  dir << 1.0, 0.0, 0.0;
  for (auto& a : s.agents) a.v = dir;
  PeelTracker tracker(s, 60.0, 20);
  for (int t = 0; t < 50; ++t) tracker.update(s);
  CHECK(tracker.peeled_count() == 0);

  s.agents[3].v = -dir;  // one defector
  for (int t = 0; t < 19; ++t) tracker.update(s);
  CHECK(tracker.peeled_count() == 0);  // needs t_peel consecutive steps
  tracker.update(s);
  CHECK(tracker.peeled_count() == 1);

  const auto flags = tracker.flags(s);
  int flagged = 0;
  for (const auto& f : flags) {
    if (f.peeled) {
      ++flagged;
      CHECK(f.id == 3);
    }
  }
  CHECK(flagged == 1);

  // Rejoining the herd clears the current-peel state.
  s.agents[3].v = dir;
  tracker.update(s);
  CHECK(tracker.peeled_count() == 0);
}

TEST_CASE("PeelTracker: zero herd direction is an error at capture") {
  auto s = make_state(4, 3, 5);
  for (auto& a : s.agents) a.v.setZero();
  CHECK_THROWS_AS(PeelTracker(s, 60.0, 20), std::invalid_argument);
}

TEST_CASE("PeelTracker: scripted history matches the independent counter") {
  const int n = 10, steps = 60, t_peel = 20;
  const double theta = 60.0;
  auto s = make_state(n, 3, 11);
  Vec dir(3);
  dir << 1.0, 0.0, 0.0;
  for (auto& a : s.agents) a.v = dir;
  PeelTracker tracker(s, theta, t_peel);

  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> angle(0.0, 3.14159);
  std::vector<std::vector<std::vector<double>>> history;
  for (int t = 0; t < steps; ++t) {
    std::vector<std::vector<double>> frame;
    for (int a = 0; a < n; ++a) {
      // Agents 0..4 drift in and out; agents 5..9 hold a scripted angle.
      const double th = a < 5 ? angle(rng) : (a - 5) * 0.45;
      s.agents[a].v << std::cos(th), std::sin(th), 0.0;
      frame.push_back({s.agents[a].v[0], s.agents[a].v[1], s.agents[a].v[2]});
    }
    tracker.update(s);
    history.push_back(frame);
  }
  CHECK(tracker.peeled_count() ==
        oracles::peel_count_script(history, {1.0, 0.0, 0.0}, theta, t_peel));
}

TEST_CASE("phase names round-trip") {
  for (Phase p : {Phase::Nomadic, Phase::Flocking, Phase::Stampede})
    CHECK(phase_from_string(to_string(p)) == p);
  CHECK_THROWS_AS(phase_from_string("Gallop"), std::invalid_argument);
}
