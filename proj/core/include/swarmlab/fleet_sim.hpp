#pragma once

#include "swarmlab/astar.hpp"
#include "swarmlab/road_network.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace swarmlab::roads {

enum class VehicleModel { A, B };
enum class VehicleStatus { EnRoute, Arrived, Destroyed, Stalled };

const char* to_string(VehicleModel m);
const char* to_string(VehicleStatus s);

struct Vehicle {
  int id = 0;
  VehicleModel model = VehicleModel::A;
  VehicleStatus status = VehicleStatus::EnRoute;
  std::vector<int> route;     // node ids; a single node means waiting there
  int leg = 0;                // current edge is (route[leg], route[leg+1])
  double edge_progress = 0.0; // miles into the current edge
};

struct FleetScenario {
  RoadNetwork network;
  HazardFront hazard;
  int source = 0;
  int destination = 0;
  double spawn_rate = 1.0;       // vehicles per second
  double model_b_fraction = 0.0;
  double p_block = 0.5;          // probability a model B stalls on a fire edge
  int wreck_threshold = 20;      // wrecks before an edge is broadcast closed
  double vehicle_speed = 1.0;    // miles per minute
  double dt = 0.1;               // seconds
  double horizon = 60.0;         // seconds
  std::uint64_t seed = 0;
  // Optional per-spawn-index model override; spawns beyond it draw randomly.
  std::vector<VehicleModel> scripted_models;

  void validate() const;
};

struct FleetEvent {
  double t = 0.0;  // seconds
  std::string event;
  int edge_id = -1;
  int vehicle_id = -1;
  std::string detail;
};

struct FleetCounts {
  long spawned = 0;
  long arrived = 0;
  long destroyed = 0;
  long stalled = 0;
  long en_route = 0;
};

struct FleetResult {
  FleetCounts counts;
  std::optional<double> first_broadcast_time;
  std::optional<double> time_to_reroute;  // first replan onto a fire-free route
  std::vector<FleetEvent> events;
};

// Discrete-time fleet simulator. Per tick: advance the hazard (vehicles on a
// newly ignited edge meet the fire), spawn and plan new vehicles, move
// vehicles (entering an ignited edge destroys model A and destroys or stalls
// model B; a stall blocks the edge immediately), broadcast-close edges at the
// wreck threshold, then replan vehicles whose remaining route became
// impassable. All randomness comes from one seeded PRNG in spawn order.
class FleetSim {
 public:
  explicit FleetSim(FleetScenario sc);

  void tick();
  FleetResult run();  // ticks until the horizon and returns the result

  double time() const { return t_; }
  const RoadNetwork& network() const { return net_; }
  const std::vector<Vehicle>& vehicles() const { return vehicles_; }
  const std::vector<FleetEvent>& events() const { return events_; }
  FleetCounts counts() const;
  std::optional<double> first_broadcast_time() const { return first_broadcast_time_; }
  std::optional<double> time_to_reroute() const { return time_to_reroute_; }

 private:
  void spawn_pending();
  void spawn_one();
  void move_vehicle(Vehicle& v);
  // Entering or being caught on an ignited edge. Returns true if the vehicle
  // survives as a blocker (model B stall).
  void resolve_fire_contact(Vehicle& v, int edge_id);
  void broadcast_scan();
  void replan_pass();
  bool remaining_route_passable(const Vehicle& v) const;
  bool remaining_route_fire_free(const Vehicle& v) const;
  int replan_node(const Vehicle& v) const;
  int current_edge_id(const Vehicle& v) const;
  void log(const std::string& event, int edge_id, int vehicle_id, std::string detail = {});

  FleetScenario sc_;
  RoadNetwork net_;
  double t_ = 0.0;
  double spawn_accum_ = 0.0;
  long spawn_count_ = 0;
  std::vector<Vehicle> vehicles_;
  std::vector<FleetEvent> events_;
  std::mt19937_64 rng_;
  std::optional<double> first_broadcast_time_;
  std::optional<double> time_to_reroute_;
};

}  // namespace swarmlab::roads
