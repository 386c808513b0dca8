#pragma once

#include <memory>
#include <utility>

#include "graphsearch/cones.hpp"
#include "graphsearch/distances.hpp"
#include "graphsearch/graph.hpp"

namespace graphsearch {

// A graph together with its precomputed distance table and cone cache.
// Immutable after construction apart from lazy cone materialization.
class Instance {
 public:
  explicit Instance(Graph g)
      : graph_(std::move(g)), dist_(all_pairs_distances(graph_)), cones_(graph_, dist_) {}

  // The cone cache points into this object; pin it.
  Instance(const Instance&) = delete;
  Instance& operator=(const Instance&) = delete;

  const Graph& graph() const { return graph_; }
  const DistanceTable& distances() const { return dist_; }
  const ConeCache& cones() const { return cones_; }

  int vertex_count() const { return graph_.vertex_count(); }

 private:
  Graph graph_;
  DistanceTable dist_;
  ConeCache cones_;
};

}  // namespace graphsearch
