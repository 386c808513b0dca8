#include "graphsearch/cones.hpp"

#include <cmath>

#include "graphsearch/errors.hpp"

namespace graphsearch {

namespace {

VertexSet build_cone(const Graph& g, const DistanceTable& dt, int v, int u, double w) {
  const int n = g.vertex_count();
  VertexSet members(n);
  for (int x = 0; x < n; ++x) {
    if (std::fabs(dt(v, x) - (w + dt(u, x))) <= kConeTolerance) members.insert(x);
  }
  return members;
}

}  // namespace

Cone cone(const Graph& g, const DistanceTable& dt, int v, int u) {
  const double w = g.edge_weight(v, u);  // throws NotAdjacent
  return Cone{v, u, build_cone(g, dt, v, u, w)};
}

ConeCache::ConeCache(const Graph& g, const DistanceTable& dt)
    : g_(&g),
      dt_(&dt),
      cones_(static_cast<std::size_t>(g.vertex_count())),
      built_(static_cast<std::size_t>(g.vertex_count()), 0) {}

void ConeCache::ensure_vertex(int v) const {
  if (built_[static_cast<std::size_t>(v)]) return;
  const auto nbrs = g_->neighbors(v);
  auto& slot = cones_[static_cast<std::size_t>(v)];
  slot.reserve(nbrs.size());
  for (const auto& e : nbrs) slot.push_back(build_cone(*g_, *dt_, v, e.to, e.weight));
  built_[static_cast<std::size_t>(v)] = 1;
}

const VertexSet& ConeCache::members(int v, int u) const {
  ensure_vertex(v);
  const auto nbrs = g_->neighbors(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (nbrs[i].to == u) return cones_[static_cast<std::size_t>(v)][i];
  }
  throw NotAdjacent("vertices " + std::to_string(v) + " and " + std::to_string(u) +
                    " are not adjacent");
}

std::vector<int> ConeCache::target_edges(int v, int t) const {
  ensure_vertex(v);
  std::vector<int> out;
  const auto nbrs = g_->neighbors(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (cones_[static_cast<std::size_t>(v)][i].contains(t)) out.push_back(nbrs[i].to);
  }
  return out;
}

void ConeCache::warm() const {
  for (int v = 0; v < g_->vertex_count(); ++v) ensure_vertex(v);
}

std::vector<int> target_edges(const Graph& g, const DistanceTable& dt, int v, int t) {
  std::vector<int> out;
  for (const auto& e : g.neighbors(v)) {
    if (std::fabs(dt(v, t) - (e.weight + dt(e.to, t))) <= kConeTolerance) out.push_back(e.to);
  }
  return out;
}

}  // namespace graphsearch
