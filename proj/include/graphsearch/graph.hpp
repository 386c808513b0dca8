#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphsearch {

// Immutable weighted undirected connected graph over dense vertex ids
// 0..n-1. Construction validates connectivity, positive weights, and the
// absence of self-loops and parallel edges.
class Graph {
 public:
  struct Edge {
    int to;
    double weight;
  };

  // One input edge, endpoints given as external labels.
  struct LabeledEdge {
    std::string u;
    std::string v;
    double weight = 1.0;
  };

  // Builds from an edge list; vertex ids are assigned densely in
  // first-appearance order of the list. Throws InvalidEdge, DuplicateEdge,
  // or DisconnectedGraph.
  static Graph from_edges(const std::vector<LabeledEdge>& edges);

  // Builds directly on pre-assigned dense ids (used by generators).
  // The edge emission order is retained for serialization.
  static Graph from_id_edges(int n, const std::vector<std::tuple<int, int, double>>& edges,
                             std::vector<std::string> labels = {});

  // A single isolated vertex (the one graph with no edges that is connected).
  static Graph single_vertex(std::string label = "0");

  // Edge-list text format: one edge per line, `<u> <v> <w>`, weight omitted
  // means 1, `#` starts a comment.
  static Graph parse(std::istream& in);
  static Graph load_file(const std::string& path);
  void serialize(std::ostream& out) const;
  void save_file(const std::string& path) const;

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edge_order_.size()); }

  std::span<const Edge> neighbors(int v) const {
    return {adj_.data() + offsets_[static_cast<std::size_t>(v)],
            adj_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
  }

  int degree(int v) const {
    return static_cast<int>(offsets_[static_cast<std::size_t>(v) + 1] -
                            offsets_[static_cast<std::size_t>(v)]);
  }

  int max_degree() const { return max_degree_; }
  bool unit_weights() const { return unit_weights_; }

  bool adjacent(int v, int u) const;
  // Weight of edge vu; throws NotAdjacent when absent.
  double edge_weight(int v, int u) const;

  const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  // Id for a label, or -1.
  int vertex_by_label(const std::string& label) const;

  const std::vector<std::pair<int, int>>& edge_order() const { return edge_order_; }

 private:
  Graph() = default;
  void finalize(int n, std::vector<std::tuple<int, int, double>>& edges,
                std::vector<std::string> labels);

  int n_ = 0;
  std::vector<std::size_t> offsets_;  // CSR offsets, size n+1
  std::vector<Edge> adj_;             // neighbors sorted by id within each vertex
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> edge_order_;  // construction order, u < v not required
  int max_degree_ = 0;
  bool unit_weights_ = true;
};

}  // namespace graphsearch
