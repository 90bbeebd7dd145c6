#include "swarmlab/fleet_sim.hpp"

#include <cmath>
#include <stdexcept>

namespace swarmlab::roads {

const char* to_string(VehicleModel m) { return m == VehicleModel::A ? "A" : "B"; }

const char* to_string(VehicleStatus s) {
  switch (s) {
    case VehicleStatus::EnRoute: return "EnRoute";
    case VehicleStatus::Arrived: return "Arrived";
    case VehicleStatus::Destroyed: return "Destroyed";
    case VehicleStatus::Stalled: return "Stalled";
  }
  return "EnRoute";
}

void FleetScenario::validate() const {
  if (!(spawn_rate > 0.0)) throw std::invalid_argument("scenario: spawn_rate must be > 0");
  if (wreck_threshold < 1) throw std::invalid_argument("scenario: wreck_threshold must be >= 1");
  if (model_b_fraction < 0.0 || model_b_fraction > 1.0)
    throw std::invalid_argument("scenario: model_b_fraction must be in [0, 1]");
  if (p_block < 0.0 || p_block > 1.0)
    throw std::invalid_argument("scenario: p_block must be in [0, 1]");
  if (!(vehicle_speed > 0.0)) throw std::invalid_argument("scenario: vehicle_speed must be > 0");
  if (!(dt > 0.0)) throw std::invalid_argument("scenario: dt must be > 0");
  if (horizon < 0.0) throw std::invalid_argument("scenario: horizon must be >= 0");
  if (source < 0 || source >= network.node_count() || destination < 0 ||
      destination >= network.node_count())
    throw std::invalid_argument("scenario: source/destination out of range");
  if (hazard.speed < 0.0) throw std::invalid_argument("scenario: hazard speed must be >= 0");
  if (hazard.dir_x == 0.0 && hazard.dir_y == 0.0)
    throw std::invalid_argument("scenario: hazard direction must be nonzero");
  if (!network.connected()) throw std::invalid_argument("scenario: network must be connected");
}

namespace {
constexpr double kMileEps = 1e-9;

bool waiting(const Vehicle& v) { return v.leg + 1 >= static_cast<int>(v.route.size()); }
}  // namespace

FleetSim::FleetSim(FleetScenario sc) : sc_(std::move(sc)), net_(sc_.network) {
  sc_.validate();
  rng_.seed(sc_.seed);
}

void FleetSim::log(const std::string& event, int edge_id, int vehicle_id, std::string detail) {
  events_.push_back({t_, event, edge_id, vehicle_id, std::move(detail)});
}

int FleetSim::current_edge_id(const Vehicle& v) const {
  return net_.edge_between(v.route[v.leg], v.route[v.leg + 1]);
}

void FleetSim::resolve_fire_contact(Vehicle& v, int edge_id) {
  bool stalls = false;
  if (v.model == VehicleModel::B) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    stalls = u01(rng_) < sc_.p_block;
  }
  if (stalls) {
    v.status = VehicleStatus::Stalled;
    net_.block(edge_id);
    log("stalled", edge_id, v.id, std::string("model=") + to_string(v.model));
  } else {
    v.status = VehicleStatus::Destroyed;
    net_.add_wreck(edge_id);
    log("destroyed", edge_id, v.id, std::string("model=") + to_string(v.model));
  }
}

void FleetSim::spawn_one() {
  Vehicle v;
  v.id = static_cast<int>(vehicles_.size());
  if (spawn_count_ < static_cast<long>(sc_.scripted_models.size())) {
    v.model = sc_.scripted_models[spawn_count_];
  } else {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    v.model = u01(rng_) < sc_.model_b_fraction ? VehicleModel::B : VehicleModel::A;
  }
  ++spawn_count_;
  log("spawn", -1, v.id, std::string("model=") + to_string(v.model));

  if (sc_.source == sc_.destination) {
    v.status = VehicleStatus::Arrived;
    log("arrived", -1, v.id);
    vehicles_.push_back(std::move(v));
    return;
  }
  auto plan = astar_route(net_, sc_.source, sc_.destination, perceive_model_a);
  if (plan) {
    v.route = std::move(plan->nodes);
  } else {
    v.route = {sc_.source};
    log("no_route", -1, v.id);
  }
  vehicles_.push_back(std::move(v));
}

void FleetSim::spawn_pending() {
  spawn_accum_ += sc_.spawn_rate * sc_.dt;
  while (spawn_accum_ >= 1.0) {
    spawn_accum_ -= 1.0;
    spawn_one();
  }
}

void FleetSim::move_vehicle(Vehicle& v) {
  double budget = sc_.vehicle_speed * sc_.dt / 60.0;
  while (budget > kMileEps && v.status == VehicleStatus::EnRoute) {
    if (waiting(v)) break;
    const int eid = current_edge_id(v);
    const RoadEdge& e = net_.edge(eid);
    if (v.edge_progress == 0.0) {
      // Entry checks happen at the moment the vehicle moves onto the edge.
      if (!perceive_model_a(e)) break;
      if (e.ignited) {
        resolve_fire_contact(v, eid);
        break;
      }
    }
    const double advance = std::min(budget, e.length - v.edge_progress);
    v.edge_progress += advance;
    budget -= advance;
    if (v.edge_progress >= e.length - kMileEps) {
      ++v.leg;
      v.edge_progress = 0.0;
      if (v.route[v.leg] == sc_.destination) {
        v.status = VehicleStatus::Arrived;
        log("arrived", -1, v.id);
        break;
      }
    }
  }
}

void FleetSim::broadcast_scan() {
  for (int eid = 0; eid < net_.edge_count(); ++eid) {
    const RoadEdge& e = net_.edge(eid);
    if (e.wreck_count >= sc_.wreck_threshold && !e.closed_broadcast) {
      net_.close_broadcast(eid);
      log("broadcast_closed", eid, -1, "wrecks=" + std::to_string(e.wreck_count));
      if (!first_broadcast_time_) first_broadcast_time_ = t_;
    }
  }
}

bool FleetSim::remaining_route_passable(const Vehicle& v) const {
  const int start = v.edge_progress > 0.0 ? v.leg + 1 : v.leg;
  for (int l = start; l + 1 < static_cast<int>(v.route.size()); ++l) {
    const int eid = net_.edge_between(v.route[l], v.route[l + 1]);
    if (!perceive_model_a(net_.edge(eid))) return false;
  }
  return true;
}

bool FleetSim::remaining_route_fire_free(const Vehicle& v) const {
  for (int l = v.leg; l + 1 < static_cast<int>(v.route.size()); ++l) {
    const int eid = net_.edge_between(v.route[l], v.route[l + 1]);
    if (net_.edge(eid).ignited) return false;
  }
  return true;
}

int FleetSim::replan_node(const Vehicle& v) const {
  // A vehicle mid-edge is committed to the edge's far end.
  return v.edge_progress > 0.0 ? v.route[v.leg + 1] : v.route[v.leg];
}

void FleetSim::replan_pass() {
  for (auto& v : vehicles_) {
    if (v.status != VehicleStatus::EnRoute) continue;
    const bool was_waiting = waiting(v);
    if (!was_waiting && remaining_route_passable(v)) continue;

    const bool mid_edge = !was_waiting && v.edge_progress > 0.0;
    const int from = was_waiting ? v.route[v.leg] : replan_node(v);
    auto plan = astar_route(net_, from, sc_.destination, perceive_model_a);
    if (plan) {
      std::vector<int> next;
      if (mid_edge) {
        next = {v.route[v.leg], v.route[v.leg + 1]};
        if (!plan->nodes.empty())
          next.insert(next.end(), plan->nodes.begin() + 1, plan->nodes.end());
        v.route = std::move(next);
        v.leg = 0;
      } else {
        v.route = std::move(plan->nodes);
        v.leg = 0;
        v.edge_progress = 0.0;
      }
      log("replan", -1, v.id, "from=" + std::to_string(from));
      if (!time_to_reroute_ && remaining_route_fire_free(v)) time_to_reroute_ = t_;
    } else {
      if (mid_edge) {
        v.route = {v.route[v.leg], v.route[v.leg + 1]};
        v.leg = 0;
      } else {
        v.route = {from};
        v.leg = 0;
        v.edge_progress = 0.0;
      }
      if (!was_waiting) log("no_route", -1, v.id);
    }
  }
}

void FleetSim::tick() {
  t_ += sc_.dt;  // events within the tick carry its end time

  if (t_ >= sc_.hazard.t0) {
    const auto newly = advance_hazard(net_, sc_.hazard, t_);
    for (int eid : newly) log("ignite", eid, -1);
    if (!newly.empty()) {
      for (auto& v : vehicles_) {
        if (v.status != VehicleStatus::EnRoute || waiting(v)) continue;
        if (v.edge_progress <= 0.0) continue;
        const int eid = current_edge_id(v);
        if (net_.edge(eid).ignited) resolve_fire_contact(v, eid);
      }
    }
  }

  spawn_pending();

  for (auto& v : vehicles_)
    if (v.status == VehicleStatus::EnRoute) move_vehicle(v);

  broadcast_scan();
  replan_pass();
}

FleetCounts FleetSim::counts() const {
  FleetCounts c;
  c.spawned = static_cast<long>(vehicles_.size());
  for (const auto& v : vehicles_) {
    switch (v.status) {
      case VehicleStatus::EnRoute: ++c.en_route; break;
      case VehicleStatus::Arrived: ++c.arrived; break;
      case VehicleStatus::Destroyed: ++c.destroyed; break;
      case VehicleStatus::Stalled: ++c.stalled; break;
    }
  }
  return c;
}

FleetResult FleetSim::run() {
  const long ticks = static_cast<long>(sc_.horizon / sc_.dt + 1e-9);
  for (long i = 0; i < ticks; ++i) tick();
  FleetResult res;
  res.counts = counts();
  res.first_broadcast_time = first_broadcast_time_;
  res.time_to_reroute = time_to_reroute_;
  res.events = events_;
  return res;
}

}  // namespace swarmlab::roads
