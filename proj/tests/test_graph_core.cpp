#include <doctest.h>

#include <sstream>

#include "graphsearch/cones.hpp"
#include "graphsearch/distances.hpp"
#include "graphsearch/errors.hpp"
#include "graphsearch/generators.hpp"
#include "graphsearch/graph.hpp"
#include "graphsearch/instance.hpp"
#include "support/test_support.hpp"

using namespace graphsearch;

TEST_CASE("build_graph renumbers labels densely and validates the edge list") {
  const Graph g = Graph::from_edges({{"a", "b", 1.0}, {"b", "c", 1.0}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.label(0) == "a");
  CHECK(g.label(2) == "c");
  const auto dt = all_pairs_distances(g);
  CHECK(dt(0, 2) == doctest::Approx(2.0));

  CHECK_THROWS_AS(Graph::from_edges({{"a", "b", 1.0}, {"a", "b", 2.0}}), DuplicateEdge);
  CHECK_THROWS_AS(Graph::from_edges({{"a", "b", 1.0}, {"c", "d", 1.0}}), DisconnectedGraph);
  CHECK_THROWS_AS(Graph::from_edges({{"a", "a", 1.0}}), InvalidEdge);
  CHECK_THROWS_AS(Graph::from_edges({{"a", "b", 0.0}}), InvalidEdge);
  CHECK_THROWS_AS(Graph::from_edges({{"a", "b", -2.0}}), InvalidEdge);
  CHECK_THROWS_AS(Graph::from_edges({}), InvalidEdge);
}

TEST_CASE("all-pairs distances: weighted triangle takes the two-hop route") {
  const Graph g = gstest::graph_from(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 3.0}});
  const auto dt = all_pairs_distances(g);
  CHECK(dt(0, 2) == doctest::Approx(2.0));
  CHECK(dt(2, 0) == doctest::Approx(2.0));
}

TEST_CASE("all-pairs distances: unweighted 4-cycle antipodes sit at distance 2") {
  const Graph g = generate("cycle", GenParams{4}, 0);
  const auto dt = all_pairs_distances(g);
  CHECK(dt(0, 2) == doctest::Approx(2.0));
  CHECK(dt(1, 3) == doctest::Approx(2.0));
}

TEST_CASE("all-pairs distances agree with Floyd-Warshall and satisfy metric laws") {
  for (std::uint64_t seed : {1ULL, 2ULL}) {
    for (const char* kind : {"random-connected", "random-connected-weighted"}) {
      const Graph g = generate(kind, GenParams{50}, seed);
      const auto dt = all_pairs_distances(g);
      const auto oracle = gstest::floyd_distances(g);
      for (int v = 0; v < 50; ++v) {
        CHECK(dt(v, v) == 0.0);
        for (int u = 0; u < 50; ++u) {
          CHECK(dt(v, u) == doctest::Approx(oracle[v][u]));
          CHECK(dt(v, u) == dt(u, v));
        }
      }
      // Triangle inequality over a sample of triples.
      Rng rng(7);
      for (int k = 0; k < 500; ++k) {
        const int a = rng.next_int(50), b = rng.next_int(50), c = rng.next_int(50);
        CHECK(dt(a, c) <= dt(a, b) + dt(b, c) + 1e-9);
      }
      for (int v = 0; v < 50; ++v)
        for (const auto& e : g.neighbors(v)) CHECK(dt(v, e.to) <= e.weight + 1e-12);
    }
  }
}

TEST_CASE("cones on a three-vertex path") {
  const Graph g = generate("path", GenParams{3}, 0);
  const Instance inst(generate("path", GenParams{3}, 0));
  const auto c12 = cone(inst.graph(), inst.distances(), 1, 2);
  CHECK(c12.members.size() == 1);
  CHECK(c12.members.contains(2));
  const auto c01 = cone(inst.graph(), inst.distances(), 0, 1);
  CHECK(c01.members.size() == 2);
  CHECK(c01.members.contains(1));
  CHECK(c01.members.contains(2));
  CHECK_THROWS_AS(cone(inst.graph(), inst.distances(), 0, 2), NotAdjacent);
}

TEST_CASE("cone on the 4-cycle excludes the antipode of the gate") {
  const Instance inst(generate("cycle", GenParams{4}, 0));
  const auto& members = inst.cones().members(0, 1);
  CHECK(members.size() == 2);
  CHECK(members.contains(1));
  CHECK(members.contains(2));
  CHECK_FALSE(members.contains(3));  // 1 != 1 + 2
}

TEST_CASE("target edges: path, self, and cycle antipode") {
  const Instance path(generate("path", GenParams{3}, 0));
  CHECK(path.cones().target_edges(0, 2) == std::vector<int>{1});
  CHECK(path.cones().target_edges(1, 1).empty());

  const Instance cyc(generate("cycle", GenParams{4}, 0));
  CHECK(cyc.cones().target_edges(0, 2) == std::vector<int>{1, 3});
}

TEST_CASE("cone invariants on assorted graphs") {
  std::vector<Graph> corpus;
  corpus.push_back(generate("path", GenParams{9}, 0));
  corpus.push_back(generate("cycle", GenParams{8}, 0));
  corpus.push_back(generate("clique", GenParams{6}, 0));
  corpus.push_back(generate("grid-diag", GenParams{12}, 0));
  corpus.push_back(generate("star-paths", GenParams{9}, 0));
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    corpus.push_back(generate("random-connected", GenParams{24}, seed));
    corpus.push_back(generate("random-tree-weighted", GenParams{18}, seed));
  }
  for (const auto& g : corpus) {
    const Instance inst(g);
    const int n = inst.vertex_count();
    for (int v = 0; v < n; ++v) {
      VertexSet uni(n);
      for (const auto& e : inst.graph().neighbors(v)) {
        const auto& members = inst.cones().members(v, e.to);
        CHECK(members.contains(e.to));
        CHECK_FALSE(members.contains(v));
        uni.unite_with(members);
      }
      CHECK(uni.size() == n - 1);  // every other vertex reachable through some first edge
      for (int t = 0; t < n; ++t) {
        if (t == v) continue;
        CHECK_FALSE(inst.cones().target_edges(v, t).empty());
      }
    }
  }
}

TEST_CASE("cones match exhaustive simple-path enumeration on small graphs") {
  std::vector<Graph> corpus;
  corpus.push_back(generate("path", GenParams{12}, 0));
  corpus.push_back(generate("cycle", GenParams{12}, 0));
  corpus.push_back(generate("grid-diag", GenParams{12}, 0));
  corpus.push_back(generate("clique", GenParams{7}, 0));
  for (std::uint64_t seed = 0; seed < 25; ++seed)
    corpus.push_back(generate(seed % 2 == 0 ? "random-connected" : "random-connected-weighted",
                              GenParams{static_cast<int>(6 + seed % 7)}, 100 + seed));
  for (const auto& g : corpus) {
    const auto oracle = gstest::enumerate_all_paths(g);
    const auto dt = all_pairs_distances(g);
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
      for (const auto& e : g.neighbors(v)) {
        const Cone c = cone(g, dt, v, e.to);
        for (int x = 0; x < n; ++x) {
          const bool expected = x != v && oracle.in_cone(v, e.to, x);
          CHECK(c.members.contains(x) == expected);
        }
      }
      for (int t = 0; t < n; ++t) {
        if (t == v) continue;
        const auto edges = target_edges(g, dt, v, t);
        const auto& expect = oracle.first_edges[static_cast<std::size_t>(v)]
                                               [static_cast<std::size_t>(t)];
        CHECK(edges.size() == expect.size());
        for (int u : edges) CHECK(expect.count(u) == 1);
      }
    }
  }
}

TEST_CASE("edge-list text round-trips with identical dense ids") {
  for (const char* kind : {"path", "cycle", "grid-diag", "star-paths", "random-connected",
                           "random-tree-weighted"}) {
    const int n = std::string(kind) == "star-paths" ? 16 : 14;
    const Graph g = generate(kind, GenParams{n}, 5);
    std::ostringstream out;
    g.serialize(out);
    std::istringstream in(out.str());
    const Graph back = Graph::parse(in);
    REQUIRE(back.vertex_count() == g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
      CHECK(back.label(v) == g.label(v));
      REQUIRE(back.degree(v) == g.degree(v));
      for (const auto& e : g.neighbors(v)) {
        CHECK(back.adjacent(v, e.to));
        CHECK(back.edge_weight(v, e.to) == doctest::Approx(e.weight));
      }
    }
  }
}

TEST_CASE("edge-list parser accepts comments and unit-weight shorthand") {
  std::istringstream in(
      "# a path with a spur\n"
      "left mid\n"
      "mid right 2.5   # weighted edge\n"
      "\n"
      "mid spur\n");
  const Graph g = Graph::parse(in);
  CHECK(g.vertex_count() == 4);
  CHECK(g.label(0) == "left");
  CHECK(g.edge_weight(g.vertex_by_label("mid"), g.vertex_by_label("right")) ==
        doctest::Approx(2.5));
  CHECK(g.edge_weight(0, 1) == doctest::Approx(1.0));

  std::istringstream bad("a b 1.0 junk\n");
  CHECK_THROWS_AS(Graph::parse(bad), InvalidEdge);
  std::istringstream lone("a\n");
  CHECK_THROWS_AS(Graph::parse(lone), InvalidEdge);
}
