#pragma once

#include "swarmlab/road_network.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace swarmlab::roads {

using Perceive = std::function<bool(const RoadEdge&)>;

// Hazard-blind perception: closures and blockages are visible, fire is not.
bool perceive_model_a(const RoadEdge& e);

struct RoutePlan {
  std::vector<int> nodes;  // [src, ..., dst]; empty when src == dst
  double cost = 0.0;
};

// Shortest path by edge length over perceived-passable edges, with the
// straight-line distance heuristic and smallest-node-id tie-breaking.
// Returns nullopt when dst is unreachable.
std::optional<RoutePlan> astar_route(const RoadNetwork& net, int src, int dst,
                                     const Perceive& perceive);

}  // namespace swarmlab::roads
