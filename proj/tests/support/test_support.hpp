#pragma once

// Test-only brute-force oracles, independent of the library's shortest-path
// machinery: exhaustive simple-path enumeration, Floyd-Warshall distances,
// and an isomorphism-free enumerator of all small graphs.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <unordered_set>
#include <vector>

#include "graphsearch/graph.hpp"
#include "graphsearch/instance.hpp"
#include "graphsearch/vertex_set.hpp"

namespace gstest {

using graphsearch::Graph;
using graphsearch::Instance;
using graphsearch::VertexSet;

inline Graph graph_from(int n, const std::vector<std::tuple<int, int, double>>& edges) {
  return Graph::from_id_edges(n, edges);
}

inline Graph unit_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::tuple<int, int, double>> weighted;
  weighted.reserve(edges.size());
  for (const auto& [u, v] : edges) weighted.emplace_back(u, v, 1.0);
  return Graph::from_id_edges(n, weighted);
}

// Shortest distances and shortest-path first edges found by enumerating
// every simple path (depth-first). Exponential; for small graphs only.
struct PathOracle {
  int n = 0;
  std::vector<std::vector<double>> dist;                 // [source][dest]
  std::vector<std::vector<std::set<int>>> first_edges;   // [source][dest]

  bool in_cone(int v, int u, int x) const {
    if (x == u) return true;
    return first_edges[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)].count(u) > 0;
  }
};

inline PathOracle enumerate_all_paths(const Graph& g) {
  const int n = g.vertex_count();
  PathOracle oracle;
  oracle.n = n;
  oracle.dist.assign(static_cast<std::size_t>(n),
                     std::vector<double>(static_cast<std::size_t>(n), 1e300));
  oracle.first_edges.assign(static_cast<std::size_t>(n),
                            std::vector<std::set<int>>(static_cast<std::size_t>(n)));
  std::vector<char> visited(static_cast<std::size_t>(n), 0);

  struct Walker {
    const Graph& g;
    PathOracle& oracle;
    std::vector<char>& visited;
    int source;
    int first;

    void walk(int v, double length) {
      if (length < oracle.dist[static_cast<std::size_t>(source)][static_cast<std::size_t>(v)] -
                       1e-12) {
        oracle.dist[static_cast<std::size_t>(source)][static_cast<std::size_t>(v)] = length;
        oracle.first_edges[static_cast<std::size_t>(source)][static_cast<std::size_t>(v)] = {
            first};
      } else if (length <= oracle.dist[static_cast<std::size_t>(source)]
                                      [static_cast<std::size_t>(v)] +
                               1e-12) {
        oracle.first_edges[static_cast<std::size_t>(source)][static_cast<std::size_t>(v)]
            .insert(first);
      }
      visited[static_cast<std::size_t>(v)] = 1;
      for (const auto& e : g.neighbors(v))
        if (!visited[static_cast<std::size_t>(e.to)]) walk(e.to, length + e.weight);
      visited[static_cast<std::size_t>(v)] = 0;
    }
  };

  for (int s = 0; s < n; ++s) {
    oracle.dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] = 0.0;
    visited[static_cast<std::size_t>(s)] = 1;
    for (const auto& e : g.neighbors(s)) {
      Walker w{g, oracle, visited, s, e.to};
      w.walk(e.to, e.weight);
    }
    visited[static_cast<std::size_t>(s)] = 0;
  }
  return oracle;
}

inline std::vector<std::vector<double>> floyd_distances(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<double>> d(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), 1e300));
  for (int v = 0; v < n; ++v) {
    d[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0.0;
    for (const auto& e : g.neighbors(v))
      d[static_cast<std::size_t>(v)][static_cast<std::size_t>(e.to)] = e.weight;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            std::min(d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                     d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                         d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
  return d;
}

// --------------------------------------------------------------------------
// Isomorphism-free enumeration of all graphs on up to 8 vertices, by vertex
// augmentation with canonical-form deduplication. Adjacency is stored as
// one byte of row bits per vertex.

using SmallGraph = std::array<std::uint8_t, 8>;

inline bool small_connected(const SmallGraph& adj, int n) {
  int seen = 1;
  std::uint8_t mask = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) continue;
      if (adj[static_cast<std::size_t>(v)] & mask) {
        mask |= static_cast<std::uint8_t>(1u << v);
        ++seen;
        grew = true;
      }
    }
  }
  return seen == n;
}

// Minimum upper-triangle bit string over all degree-respecting orderings.
inline std::uint64_t canonical_key(const SmallGraph& adj, int n) {
  std::array<int, 8> degree{};
  for (int v = 0; v < n; ++v)
    degree[static_cast<std::size_t>(v)] = std::popcount(adj[static_cast<std::size_t>(v)]);

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return degree[static_cast<std::size_t>(a)] != degree[static_cast<std::size_t>(b)]
               ? degree[static_cast<std::size_t>(a)] < degree[static_cast<std::size_t>(b)]
               : a < b;
  });
  // Group boundaries of equal-degree runs.
  std::vector<std::pair<int, int>> groups;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && degree[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] ==
                        degree[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])])
      ++j;
    groups.emplace_back(i, j);
    i = j;
  }

  std::uint64_t best = ~0ULL;
  while (true) {
    std::uint64_t key = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        key = (key << 1) | ((adj[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] >>
                             order[static_cast<std::size_t>(j)]) &
                            1u);
    best = std::min(best, key);
    // Odometer over per-group permutations.
    bool advanced = false;
    for (auto& [a, b] : groups) {
      if (std::next_permutation(order.begin() + a, order.begin() + b)) {
        advanced = true;
        break;
      }
      // wrapped back to sorted; carry to the next group
    }
    if (!advanced) break;
  }
  return best | (static_cast<std::uint64_t>(n) << 56);
}

// All non-isomorphic graphs on exactly n vertices (connected and not).
inline std::vector<SmallGraph> all_graphs(int n) {
  std::vector<SmallGraph> level{SmallGraph{}};
  for (int k = 2; k <= n; ++k) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<SmallGraph> next;
    for (const auto& parent : level) {
      for (std::uint32_t nbrs = 0; nbrs < (1u << (k - 1)); ++nbrs) {
        SmallGraph candidate = parent;
        candidate[static_cast<std::size_t>(k - 1)] = static_cast<std::uint8_t>(nbrs);
        for (int v = 0; v < k - 1; ++v)
          if (nbrs & (1u << v))
            candidate[static_cast<std::size_t>(v)] |= static_cast<std::uint8_t>(1u << (k - 1));
        if (seen.insert(canonical_key(candidate, k)).second) next.push_back(candidate);
      }
    }
    level = std::move(next);
  }
  return level;
}

inline std::vector<Graph> all_connected_graphs(int n) {
  std::vector<Graph> out;
  for (const auto& adj : all_graphs(n)) {
    if (!small_connected(adj, n)) continue;
    std::vector<std::tuple<int, int, double>> edges;
    for (int v = 0; v < n; ++v)
      for (int u = v + 1; u < n; ++u)
        if (adj[static_cast<std::size_t>(v)] & (1u << u)) edges.emplace_back(v, u, 1.0);
    if (edges.empty()) continue;  // n == 1 handled by the caller
    out.push_back(graph_from(n, edges));
  }
  return out;
}

// Every nonempty subset of {0..n-1}; n <= ~16.
template <class F>
void for_each_subset(int n, F&& f) {
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) s.insert(v);
    f(s);
  }
}

}  // namespace gstest
