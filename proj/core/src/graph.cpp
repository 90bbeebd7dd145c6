#include "swarmlab/graph.hpp"

#include <stdexcept>
#include <string>

namespace swarmlab {

InfluenceGraph::InfluenceGraph(int n, TopologyKind tag) : n_(n), tag_(tag) {
  if (n < 0) throw std::invalid_argument("InfluenceGraph: negative size");
  w_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

void InfluenceGraph::check_pair(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw std::out_of_range("InfluenceGraph: agent id out of range (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
}

double InfluenceGraph::weight(int i, int j) const {
  check_pair(i, j);
  if (i == j) return 0.0;
  return w_[static_cast<std::size_t>(i) * n_ + j];
}

void InfluenceGraph::set_weight(int i, int j, double w) {
  check_pair(i, j);
  if (i == j) throw std::invalid_argument("InfluenceGraph: self-loops are not allowed");
  if (w < 0.0) throw std::invalid_argument("InfluenceGraph: negative weight");
  w_[static_cast<std::size_t>(i) * n_ + j] = w;
  w_[static_cast<std::size_t>(j) * n_ + i] = w;
}

void InfluenceGraph::resize(int n) {
  if (n < 0) throw std::invalid_argument("InfluenceGraph: negative size");
  std::vector<double> next(static_cast<std::size_t>(n) * n, 0.0);
  const int keep = std::min(n, n_);
  for (int i = 0; i < keep; ++i)
    for (int j = 0; j < keep; ++j)
      next[static_cast<std::size_t>(i) * n + j] = w_[static_cast<std::size_t>(i) * n_ + j];
  w_ = std::move(next);
  n_ = n;
}

long InfluenceGraph::edge_count() const {
  long count = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (w_[static_cast<std::size_t>(i) * n_ + j] > 0.0) ++count;
  return count;
}

}  // namespace swarmlab
