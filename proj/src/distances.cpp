#include "graphsearch/distances.hpp"

#include <queue>
#include <vector>

namespace graphsearch {

namespace {

void bfs_from(const Graph& g, int src, double* out) {
  const int n = g.vertex_count();
  for (int i = 0; i < n; ++i) out[i] = -1.0;
  std::vector<int> frontier{src};
  out[src] = 0.0;
  double level = 0.0;
  while (!frontier.empty()) {
    std::vector<int> next;
    level += 1.0;
    for (int v : frontier) {
      for (const auto& e : g.neighbors(v)) {
        if (out[e.to] < 0.0) {
          out[e.to] = level;
          next.push_back(e.to);
        }
      }
    }
    frontier.swap(next);
  }
}

void dijkstra_from(const Graph& g, int src, double* out) {
  const int n = g.vertex_count();
  constexpr double kInf = 1e300;
  for (int i = 0; i < n; ++i) out[i] = kInf;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  out[src] = 0.0;
  pq.emplace(0.0, src);
  while (!pq.empty()) {
    const auto [dist, v] = pq.top();
    pq.pop();
    if (dist > out[v]) continue;
    for (const auto& e : g.neighbors(v)) {
      const double cand = dist + e.weight;
      if (cand < out[e.to]) {
        out[e.to] = cand;
        pq.emplace(cand, e.to);
      }
    }
  }
}

}  // namespace

DistanceTable all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<double> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int src = 0; src < n; ++src) {
    double* row = flat.data() + static_cast<std::size_t>(src) * static_cast<std::size_t>(n);
    if (g.unit_weights())
      bfs_from(g, src, row);
    else
      dijkstra_from(g, src, row);
  }
  return DistanceTable(n, std::move(flat));
}

}  // namespace graphsearch
