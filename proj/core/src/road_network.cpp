#include "swarmlab/road_network.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace swarmlab::roads {

int RoadNetwork::add_node(double x, double y) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back({id, x, y});
  incident_.emplace_back();
  return id;
}

int RoadNetwork::add_edge(int a, int b, double length) {
  if (a < 0 || a >= node_count() || b < 0 || b >= node_count())
    throw std::invalid_argument("add_edge: node id out of range");
  if (a == b) throw std::invalid_argument("add_edge: self-loop");
  if (!(length > 0.0)) throw std::invalid_argument("add_edge: length must be > 0");
  const auto key = std::minmax(a, b);
  if (by_pair_.count({key.first, key.second}))
    throw std::invalid_argument("add_edge: duplicate edge between " + std::to_string(a) + " and " +
                                std::to_string(b));
  const int id = static_cast<int>(edges_.size());
  RoadEdge e;
  e.id = id;
  e.a = a;
  e.b = b;
  e.length = length;
  edges_.push_back(e);
  incident_[a].push_back(id);
  incident_[b].push_back(id);
  by_pair_[{key.first, key.second}] = id;
  return id;
}

const RoadNode& RoadNetwork::node(int id) const {
  if (id < 0 || id >= node_count()) throw std::out_of_range("node id out of range");
  return nodes_[id];
}

const RoadEdge& RoadNetwork::edge(int id) const {
  if (id < 0 || id >= edge_count()) throw std::out_of_range("edge id out of range");
  return edges_[id];
}

const std::vector<int>& RoadNetwork::incident(int node_id) const {
  if (node_id < 0 || node_id >= node_count()) throw std::out_of_range("node id out of range");
  return incident_[node_id];
}

int RoadNetwork::edge_between(int a, int b) const {
  const auto key = std::minmax(a, b);
  auto it = by_pair_.find({key.first, key.second});
  return it == by_pair_.end() ? -1 : it->second;
}

int RoadNetwork::other_end(int edge_id, int node_id) const {
  const RoadEdge& e = edge(edge_id);
  if (e.a == node_id) return e.b;
  if (e.b == node_id) return e.a;
  throw std::invalid_argument("other_end: node is not an endpoint of edge");
}

double RoadNetwork::distance(int a, int b) const {
  const RoadNode& na = node(a);
  const RoadNode& nb = node(b);
  return std::hypot(na.x - nb.x, na.y - nb.y);
}

void RoadNetwork::ignite(int edge_id) { edges_.at(edge_id).ignited = true; }
void RoadNetwork::close_official(int edge_id) { edges_.at(edge_id).closed_official = true; }
void RoadNetwork::close_broadcast(int edge_id) { edges_.at(edge_id).closed_broadcast = true; }
void RoadNetwork::block(int edge_id) { edges_.at(edge_id).blocked = true; }
void RoadNetwork::add_wreck(int edge_id) { ++edges_.at(edge_id).wreck_count; }

bool RoadNetwork::connected() const {
  const int n = node_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int eid : incident_[u]) {
      const int v = other_end(eid, u);
      if (!seen[v]) {
        seen[v] = 1;
        ++visited;
        stack.push_back(v);
      }
    }
  }
  return visited == n;
}

RoadNetwork RoadNetwork::parse(std::istream& in) {
  RoadNetwork net;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "node") {
      int id;
      double x, y;
      if (!(ls >> id >> x >> y))
        throw std::runtime_error("network line " + std::to_string(line_no) + ": bad node record");
      if (id != net.node_count())
        throw std::runtime_error("network line " + std::to_string(line_no) +
                                 ": node ids must be sequential from 0");
      net.add_node(x, y);
    } else if (kind == "edge") {
      int a, b;
      double length;
      if (!(ls >> a >> b >> length))
        throw std::runtime_error("network line " + std::to_string(line_no) + ": bad edge record");
      try {
        net.add_edge(a, b, length);
      } catch (const std::invalid_argument& ex) {
        throw std::runtime_error("network line " + std::to_string(line_no) + ": " + ex.what());
      }
    } else {
      throw std::runtime_error("network line " + std::to_string(line_no) + ": unknown record '" +
                               kind + "'");
    }
  }
  return net;
}

RoadNetwork RoadNetwork::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open network file: " + path);
  return parse(in);
}

void RoadNetwork::save(std::ostream& out) const {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out.precision(17);  // round-trip doubles
  out << "# road network: " << node_count() << " nodes, " << edge_count() << " edges\n";
  for (const auto& n : nodes_) out << "node " << n.id << " " << n.x << " " << n.y << "\n";
  for (const auto& e : edges_) out << "edge " << e.a << " " << e.b << " " << e.length << "\n";
  out.flags(flags);
  out.precision(precision);
}

double front_displacement(const HazardFront& h, double t_seconds) {
  return h.speed * (t_seconds - h.t0) / 60.0;
}

bool burned(const HazardFront& h, double px, double py, double t_seconds) {
  const double norm = std::hypot(h.dir_x, h.dir_y);
  if (norm == 0.0) throw std::invalid_argument("hazard: zero direction");
  const double proj = ((px - h.origin_x) * h.dir_x + (py - h.origin_y) * h.dir_y) / norm;
  return proj <= front_displacement(h, t_seconds);
}

std::vector<int> advance_hazard(RoadNetwork& net, const HazardFront& h, double t_seconds) {
  if (t_seconds < h.t0) throw std::invalid_argument("advance_hazard: t before hazard start");
  std::vector<int> newly;
  for (int eid = 0; eid < net.edge_count(); ++eid) {
    const RoadEdge& e = net.edge(eid);
    if (e.ignited) continue;
    const RoadNode& a = net.node(e.a);
    const RoadNode& b = net.node(e.b);
    if (burned(h, 0.5 * (a.x + b.x), 0.5 * (a.y + b.y), t_seconds)) {
      net.ignite(eid);
      newly.push_back(eid);
    }
  }
  return newly;
}

}  // namespace swarmlab::roads
