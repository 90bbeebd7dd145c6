#pragma once

#include "swarmlab/types.hpp"

#include <vector>

namespace swarmlab {

// Symmetric weighted adjacency over agent ids 0..n-1. Weights are
// non-negative and the diagonal is always zero.
class InfluenceGraph {
 public:
  InfluenceGraph() = default;
  explicit InfluenceGraph(int n, TopologyKind tag = TopologyKind::Complete);

  int size() const { return n_; }
  double weight(int i, int j) const;
  void set_weight(int i, int j, double w);

  // Grows with zero-filled rows/columns or truncates to the leading block.
  void resize(int n);

  // Number of undirected pairs with positive weight.
  long edge_count() const;

  TopologyKind topology_tag() const { return tag_; }
  void set_topology_tag(TopologyKind tag) { tag_ = tag; }

  bool operator==(const InfluenceGraph&) const = default;

 private:
  void check_pair(int i, int j) const;

  int n_ = 0;
  TopologyKind tag_ = TopologyKind::Complete;
  std::vector<double> w_;  // dense n*n, symmetric
};

}  // namespace swarmlab
