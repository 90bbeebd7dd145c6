#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace swarmlab::roads {

struct RoadNode {
  int id = 0;
  double x = 0.0;  // miles
  double y = 0.0;
};

struct RoadEdge {
  int id = 0;
  int a = 0;
  int b = 0;
  double length = 0.0;  // miles
  bool closed_official = false;
  bool closed_broadcast = false;
  bool ignited = false;
  bool blocked = false;
  int wreck_count = 0;
};

// Undirected planar road graph. Edge flags are monotone within a run: the
// setters below only ever turn them on.
class RoadNetwork {
 public:
  int add_node(double x, double y);
  // Rejects self-loops, duplicate pairs, and non-positive lengths.
  int add_edge(int a, int b, double length);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const RoadNode& node(int id) const;
  const RoadEdge& edge(int id) const;
  const std::vector<int>& incident(int node_id) const;
  int edge_between(int a, int b) const;  // -1 when absent
  int other_end(int edge_id, int node_id) const;
  double distance(int a, int b) const;  // straight-line, miles

  void ignite(int edge_id);
  void close_official(int edge_id);
  void close_broadcast(int edge_id);
  void block(int edge_id);
  void add_wreck(int edge_id);

  bool connected() const;

  // Plain-text format: one record per line, "node <id> <x> <y>" with ids in
  // order from 0, then "edge <a> <b> <length>". '#' starts a comment.
  static RoadNetwork parse(std::istream& in);
  static RoadNetwork load_file(const std::string& path);
  void save(std::ostream& out) const;

 private:
  std::vector<RoadNode> nodes_;
  std::vector<RoadEdge> edges_;
  std::vector<std::vector<int>> incident_;
  std::map<std::pair<int, int>, int> by_pair_;
};

// A straight fire line through `origin` advancing along `dir` at `speed`
// miles per minute from time t0 (seconds). Points behind the displaced line
// (dot(p - origin, dir) <= displacement) are burned.
struct HazardFront {
  double origin_x = 0.0;
  double origin_y = 0.0;
  double dir_x = 1.0;
  double dir_y = 0.0;
  double speed = 0.0;  // miles per minute
  double t0 = 0.0;     // seconds
};

double front_displacement(const HazardFront& h, double t_seconds);  // miles
bool burned(const HazardFront& h, double px, double py, double t_seconds);

// Ignites every edge whose midpoint is burned at time t. Monotone in t.
// Returns the newly ignited edge ids in id order.
std::vector<int> advance_hazard(RoadNetwork& net, const HazardFront& h, double t_seconds);

}  // namespace swarmlab::roads
