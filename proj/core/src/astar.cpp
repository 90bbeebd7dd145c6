#include "swarmlab/astar.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace swarmlab::roads {

bool perceive_model_a(const RoadEdge& e) {
  return !(e.closed_official || e.closed_broadcast || e.blocked);
}

std::optional<RoutePlan> astar_route(const RoadNetwork& net, int src, int dst,
                                     const Perceive& perceive) {
  if (src < 0 || src >= net.node_count() || dst < 0 || dst >= net.node_count())
    throw std::invalid_argument("astar_route: node id out of range");
  if (src == dst) return RoutePlan{{}, 0.0};

  constexpr double kInf = std::numeric_limits<double>::infinity();
  const int n = net.node_count();
  std::vector<double> g(n, kInf);
  std::vector<int> parent(n, -1);
  std::vector<char> closed(n, 0);

  // Min-heap on (f, node id): equal f pops the smaller node id first.
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> open;
  g[src] = 0.0;
  open.push({net.distance(src, dst), src});

  while (!open.empty()) {
    const auto [f, u] = open.top();
    open.pop();
    if (closed[u]) continue;
    closed[u] = 1;
    if (u == dst) break;
    for (int eid : net.incident(u)) {
      const RoadEdge& e = net.edge(eid);
      if (!perceive(e)) continue;
      const int v = net.other_end(eid, u);
      if (closed[v]) continue;
      const double ng = g[u] + e.length;
      if (ng < g[v]) {
        g[v] = ng;
        parent[v] = u;
        open.push({ng + net.distance(v, dst), v});
      }
    }
  }

  if (!closed[dst]) return std::nullopt;

  RoutePlan plan;
  plan.cost = g[dst];
  for (int v = dst; v != -1; v = parent[v]) plan.nodes.push_back(v);
  std::reverse(plan.nodes.begin(), plan.nodes.end());
  return plan;
}

}  // namespace swarmlab::roads
