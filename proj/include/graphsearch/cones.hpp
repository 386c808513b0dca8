#pragma once

#include <vector>

#include "graphsearch/distances.hpp"
#include "graphsearch/graph.hpp"
#include "graphsearch/vertex_set.hpp"

namespace graphsearch {

// Distance-equality tolerance for non-integer weights. Test corpora use
// integer weights, where the comparison is exact.
inline constexpr double kConeTolerance = 1e-9;

// The directional cone of (v, u): every vertex x whose shortest path from v
// can start with the edge vu, i.e. d(v,x) = w(vu) + d(u,x).
struct Cone {
  int source;
  int gate;
  VertexSet members;
};

Cone cone(const Graph& g, const DistanceTable& dt, int v, int u);

// Lazily materialized cone bitsets, cached per (source, gate-index).
// Filling is not synchronized; warm the cache before sharing across threads.
class ConeCache {
 public:
  ConeCache() = default;
  ConeCache(const Graph& g, const DistanceTable& dt);

  // Cached membership set of cone (v, u); u must be adjacent to v.
  const VertexSet& members(int v, int u) const;

  // Neighbors u of v whose edge starts a shortest path from v to t,
  // in ascending id order. Empty iff t == v.
  std::vector<int> target_edges(int v, int t) const;

  void warm() const;

 private:
  void ensure_vertex(int v) const;

  const Graph* g_ = nullptr;
  const DistanceTable* dt_ = nullptr;
  mutable std::vector<std::vector<VertexSet>> cones_;  // indexed [v][neighbor index]
  mutable std::vector<char> built_;
};

std::vector<int> target_edges(const Graph& g, const DistanceTable& dt, int v, int t);

}  // namespace graphsearch
