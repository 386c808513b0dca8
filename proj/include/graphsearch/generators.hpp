#pragma once

#include <cstdint>
#include <string>

#include "graphsearch/graph.hpp"

namespace graphsearch {

struct GenParams {
  int n = 0;
  int extra_edges = -1;  // random-connected: extra edges beyond the tree; -1 = ceil(n/4)
  int max_degree = 0;    // degree cap for random kinds; 0 = uncapped
  bool weighted = false;
  int weight_max = 9;  // random integer weights drawn from 1..weight_max
};

// Kinds: path, cycle, clique, grid-diag, star-paths, random-tree,
// random-connected; append "-weighted" for random integer weights.
// grid-diag is the 2 x n/2 grid with both diagonals in every cell;
// star-paths with parameter n is the star of sqrt(n) paths of length
// sqrt(n) (n+1 vertices). random-connected is a uniform spanning tree plus
// extra uniformly chosen non-duplicate edges.
Graph generate(const std::string& kind, const GenParams& params, std::uint64_t seed);

}  // namespace graphsearch
