#include "graphsearch/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "graphsearch/errors.hpp"
#include "graphsearch/rng.hpp"

namespace graphsearch {

namespace {

using IdEdge = std::tuple<int, int, double>;

// Renumber vertex ids densely in first-appearance order of the edge list,
// so that serialize -> parse reproduces the exact same ids.
Graph renumbered(const std::vector<IdEdge>& edges) {
  std::map<int, int> remap;
  std::vector<IdEdge> out;
  out.reserve(edges.size());
  auto id_of = [&](int raw) {
    auto it = remap.find(raw);
    if (it != remap.end()) return it->second;
    const int id = static_cast<int>(remap.size());
    remap.emplace(raw, id);
    return id;
  };
  for (const auto& [u, v, w] : edges) {
    const int a = id_of(u);
    const int b = id_of(v);
    out.emplace_back(a, b, w);
  }
  return Graph::from_id_edges(static_cast<int>(remap.size()), out);
}

std::vector<IdEdge> path_edges(int n) {
  std::vector<IdEdge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1, 1.0);
  return edges;
}

std::vector<IdEdge> cycle_edges(int n) {
  auto edges = path_edges(n);
  edges.emplace_back(n - 1, 0, 1.0);
  return edges;
}

std::vector<IdEdge> clique_edges(int n) {
  std::vector<IdEdge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j, 1.0);
  return edges;
}

// Top vertices v1..vc get ids 0..c-1, bottom u1..uc get ids c..2c-1.
std::vector<IdEdge> grid_diag_edges(int n) {
  const int c = n / 2;
  std::vector<IdEdge> edges;
  for (int i = 0; i + 1 < c; ++i) edges.emplace_back(i, i + 1, 1.0);  // top path
  edges.emplace_back(0, c, 1.0);
  for (int i = 0; i + 1 < c; ++i) edges.emplace_back(c + i, c + i + 1, 1.0);  // bottom path
  for (int i = 1; i < c; ++i) edges.emplace_back(i, c + i, 1.0);  // verticals
  for (int i = 0; i + 1 < c; ++i) {
    edges.emplace_back(i, c + i + 1, 1.0);  // cell diagonals
    edges.emplace_back(i + 1, c + i, 1.0);
  }
  return edges;
}

std::vector<std::string> grid_diag_labels(int n) {
  const int c = n / 2;
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= c; ++i) labels.push_back("v" + std::to_string(i));
  for (int i = 1; i <= c; ++i) labels.push_back("u" + std::to_string(i));
  return labels;
}

// Center id 0; arm i (1-based) position j (1-based) has id (i-1)*s + j.
std::vector<IdEdge> star_paths_edges(int n, int s) {
  std::vector<IdEdge> edges;
  for (int i = 0; i < s; ++i) {
    edges.emplace_back(0, i * s + 1, 1.0);
    for (int j = 1; j < s; ++j) edges.emplace_back(i * s + j, i * s + j + 1, 1.0);
  }
  return edges;
}

std::vector<std::string> star_paths_labels(int n, int s) {
  std::vector<std::string> labels{"v0"};
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= s; ++j)
      labels.push_back("v" + std::to_string(i) + "_" + std::to_string(j));
  return labels;
}

// Uniform labeled tree (random Pruefer sequence), or a degree-capped
// random attachment tree when a cap is requested.
std::vector<IdEdge> random_tree_edges(int n, int max_degree, Rng& rng) {
  std::vector<IdEdge> edges;
  if (n == 1) return edges;
  if (n == 2) {
    edges.emplace_back(0, 1, 1.0);
    return edges;
  }
  if (max_degree > 0) {
    if (max_degree < 2) throw InvalidSize("degree cap below 2 cannot form a tree");
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::vector<int> open;
    for (int v = 1; v < n; ++v) {
      open.clear();
      for (int u = 0; u < v; ++u)
        if (degree[static_cast<std::size_t>(u)] < max_degree) open.push_back(u);
      const int parent = open[static_cast<std::size_t>(rng.next_int(static_cast<int>(open.size())))];
      edges.emplace_back(parent, v, 1.0);
      ++degree[static_cast<std::size_t>(parent)];
      ++degree[static_cast<std::size_t>(v)];
    }
    return edges;
  }
  std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
  for (auto& x : pruefer) x = rng.next_int(n);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : pruefer) ++degree[static_cast<std::size_t>(x)];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  for (int x : pruefer) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, x, 1.0);
    if (--degree[static_cast<std::size_t>(x)] == 1) leaves.insert(x);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  edges.emplace_back(a, b, 1.0);
  return edges;
}

std::vector<IdEdge> random_connected_edges(int n, int extra, int max_degree, Rng& rng) {
  auto edges = random_tree_edges(n, max_degree, rng);
  std::set<std::pair<int, int>> present;
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v, w] : edges) {
    present.emplace(std::min(u, v), std::max(u, v));
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
  int added = 0;
  long attempts = 0;
  const long attempt_cap = 64L * (extra + 1) * (n + 1);
  while (added < extra && attempts < attempt_cap) {
    ++attempts;
    const int u = rng.next_int(n);
    const int v = rng.next_int(n);
    if (u == v) continue;
    if (max_degree > 0 && (degree[static_cast<std::size_t>(u)] >= max_degree ||
                           degree[static_cast<std::size_t>(v)] >= max_degree))
      continue;
    const auto key = std::minmax(u, v);
    if (!present.emplace(key.first, key.second).second) continue;
    edges.emplace_back(u, v, 1.0);
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
    ++added;
  }
  return edges;
}

void randomize_weights(std::vector<IdEdge>& edges, int weight_max, Rng& rng) {
  for (auto& [u, v, w] : edges) w = 1.0 + rng.next_int(weight_max);
}

}  // namespace

Graph generate(const std::string& kind_in, const GenParams& params, std::uint64_t seed) {
  std::string kind = kind_in;
  bool weighted = params.weighted;
  if (const std::string suffix = "-weighted"; kind.size() > suffix.size() &&
      kind.compare(kind.size() - suffix.size(), suffix.size(), suffix) == 0) {
    weighted = true;
    kind.erase(kind.size() - suffix.size());
  }
  const int n = params.n;
  Rng rng(seed);

  std::vector<IdEdge> edges;
  std::vector<std::string> labels;
  bool renumber = false;
  if (kind == "path") {
    if (n < 1) throw InvalidSize("path needs n >= 1");
    if (n == 1) return Graph::single_vertex();
    edges = path_edges(n);
  } else if (kind == "cycle") {
    if (n < 3) throw InvalidSize("cycle needs n >= 3");
    edges = cycle_edges(n);
  } else if (kind == "clique") {
    if (n < 2) throw InvalidSize("clique needs n >= 2");
    edges = clique_edges(n);
  } else if (kind == "grid-diag") {
    if (n < 4 || n % 2 != 0) throw InvalidSize("grid-diag needs even n >= 4");
    edges = grid_diag_edges(n);
    labels = grid_diag_labels(n);
  } else if (kind == "star-paths") {
    const int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (s < 2 || s * s != n) throw InvalidSize("star-paths needs n a perfect square >= 4");
    edges = star_paths_edges(n, s);
    labels = star_paths_labels(n, s);
  } else if (kind == "random-tree") {
    if (n < 1) throw InvalidSize("random-tree needs n >= 1");
    if (n == 1) return Graph::single_vertex();
    edges = random_tree_edges(n, params.max_degree, rng);
    renumber = true;
  } else if (kind == "random-connected") {
    if (n < 1) throw InvalidSize("random-connected needs n >= 1");
    if (n == 1) return Graph::single_vertex();
    const int extra = params.extra_edges < 0 ? (n + 3) / 4 : params.extra_edges;
    edges = random_connected_edges(n, extra, params.max_degree, rng);
    renumber = true;
  } else {
    throw IncompatibleConfig("unknown generator kind: " + kind_in);
  }

  if (weighted) randomize_weights(edges, params.weight_max, rng);
  if (renumber) return renumbered(edges);
  const int vertex_count = labels.empty() ? n : static_cast<int>(labels.size());
  return Graph::from_id_edges(vertex_count, edges, std::move(labels));
}

}  // namespace graphsearch
