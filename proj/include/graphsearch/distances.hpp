#pragma once

#include <vector>

#include "graphsearch/graph.hpp"

namespace graphsearch {

// Exact all-pairs shortest-path distances, computed once per graph and
// shared immutably afterwards.
class DistanceTable {
 public:
  DistanceTable() = default;
  DistanceTable(int n, std::vector<double> flat) : n_(n), d_(std::move(flat)) {}

  double operator()(int v, int u) const {
    return d_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(u)];
  }

  int size() const { return n_; }

 private:
  int n_ = 0;
  std::vector<double> d_;
};

// Repeated single-source shortest paths (breadth-first for unit weights,
// Dijkstra otherwise).
DistanceTable all_pairs_distances(const Graph& g);

}  // namespace graphsearch
