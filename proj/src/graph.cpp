#include "graphsearch/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "graphsearch/errors.hpp"

namespace graphsearch {

namespace {

void check_connected(int n, const std::vector<std::tuple<int, int, double>>& edges) {
  if (n == 0) throw InvalidEdge("graph has no vertices");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v, w] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != n) throw DisconnectedGraph("graph is not connected");
}

}  // namespace

void Graph::finalize(int n, std::vector<std::tuple<int, int, double>>& edges,
                     std::vector<std::string> labels) {
  std::map<std::pair<int, int>, int> seen_pairs;
  for (const auto& [u, v, w] : edges) {
    if (u == v) throw InvalidEdge("self-loop on vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidEdge("vertex id out of range");
    if (!(w > 0.0)) throw InvalidEdge("non-positive edge weight");
    auto key = std::minmax(u, v);
    if (!seen_pairs.emplace(std::make_pair(key.first, key.second), 1).second)
      throw DuplicateEdge("duplicate edge " + std::to_string(key.first) + "-" +
                          std::to_string(key.second));
  }
  check_connected(n, edges);

  n_ = n;
  if (labels.empty()) {
    labels.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  }
  labels_ = std::move(labels);

  std::vector<std::vector<Edge>> adj(static_cast<std::size_t>(n));
  unit_weights_ = true;
  for (const auto& [u, v, w] : edges) {
    adj[static_cast<std::size_t>(u)].push_back({v, w});
    adj[static_cast<std::size_t>(v)].push_back({u, w});
    if (w != 1.0) unit_weights_ = false;
    edge_order_.emplace_back(u, v);
  }
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) {
    auto& list = adj[static_cast<std::size_t>(v)];
    std::sort(list.begin(), list.end(), [](const Edge& a, const Edge& b) { return a.to < b.to; });
    offsets_[static_cast<std::size_t>(v) + 1] =
        offsets_[static_cast<std::size_t>(v)] + list.size();
    adj_.insert(adj_.end(), list.begin(), list.end());
    max_degree_ = std::max(max_degree_, static_cast<int>(list.size()));
  }
}

Graph Graph::from_edges(const std::vector<LabeledEdge>& edges) {
  if (edges.empty()) throw InvalidEdge("empty edge list");
  std::map<std::string, int> ids;
  std::vector<std::string> labels;
  auto id_of = [&](const std::string& label) {
    auto it = ids.find(label);
    if (it != ids.end()) return it->second;
    const int id = static_cast<int>(labels.size());
    ids.emplace(label, id);
    labels.push_back(label);
    return id;
  };
  std::vector<std::tuple<int, int, double>> id_edges;
  id_edges.reserve(edges.size());
  for (const auto& e : edges) id_edges.emplace_back(id_of(e.u), id_of(e.v), e.weight);

  Graph g;
  g.finalize(static_cast<int>(labels.size()), id_edges, std::move(labels));
  return g;
}

Graph Graph::from_id_edges(int n, const std::vector<std::tuple<int, int, double>>& edges,
                           std::vector<std::string> labels) {
  Graph g;
  auto copy = edges;
  g.finalize(n, copy, std::move(labels));
  return g;
}

Graph Graph::single_vertex(std::string label) {
  Graph g;
  g.n_ = 1;
  g.offsets_ = {0, 0};
  g.labels_ = {std::move(label)};
  return g;
}

Graph Graph::parse(std::istream& in) {
  std::vector<LabeledEdge> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string u, v;
    if (!(ls >> u)) continue;  // blank or comment-only line
    if (!(ls >> v))
      throw InvalidEdge("line " + std::to_string(line_no) + ": expected two vertex tokens");
    double w = 1.0;
    std::string wtok;
    if (ls >> wtok) {
      try {
        std::size_t pos = 0;
        w = std::stod(wtok, &pos);
        if (pos != wtok.size()) throw std::invalid_argument(wtok);
      } catch (const std::exception&) {
        throw InvalidEdge("line " + std::to_string(line_no) + ": bad weight '" + wtok + "'");
      }
    }
    std::string extra;
    if (ls >> extra)
      throw InvalidEdge("line " + std::to_string(line_no) + ": trailing tokens");
    edges.push_back({std::move(u), std::move(v), w});
  }
  return from_edges(edges);
}

Graph Graph::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file: " + path);
  return parse(in);
}

void Graph::serialize(std::ostream& out) const {
  for (const auto& [u, v] : edge_order_) {
    out << labels_[static_cast<std::size_t>(u)] << ' ' << labels_[static_cast<std::size_t>(v)];
    const double w = edge_weight(u, v);
    if (w != 1.0) out << ' ' << w;
    out << '\n';
  }
}

void Graph::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file: " + path);
  serialize(out);
}

bool Graph::adjacent(int v, int u) const {
  const auto nbrs = neighbors(v);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), u,
                             [](const Edge& e, int x) { return e.to < x; });
  return it != nbrs.end() && it->to == u;
}

double Graph::edge_weight(int v, int u) const {
  const auto nbrs = neighbors(v);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), u,
                             [](const Edge& e, int x) { return e.to < x; });
  if (it == nbrs.end() || it->to != u)
    throw NotAdjacent("vertices " + std::to_string(v) + " and " + std::to_string(u) +
                      " are not adjacent");
  return it->weight;
}

int Graph::vertex_by_label(const std::string& label) const {
  for (int v = 0; v < n_; ++v)
    if (labels_[static_cast<std::size_t>(v)] == label) return v;
  return -1;
}

}  // namespace graphsearch
