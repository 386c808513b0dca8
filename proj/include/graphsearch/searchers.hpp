#pragma once

#include <cstdint>
#include <vector>

#include "graphsearch/instance.hpp"
#include "graphsearch/oracle.hpp"
#include "graphsearch/potentials.hpp"
#include "graphsearch/transcript.hpp"

namespace graphsearch {

struct SearchParams {
  double epsilon = 0.0;                       // approximate-median slack, in [0,1)
  ChoiceRule median_rule = ChoiceRule::Best;  // qualifier selection
  std::vector<int> median_script;             // for ChoiceRule::Scripted
  double rho = 1.0;                           // repetition multiplier
  std::uint64_t seed = 0;                     // searcher-side randomness
  long budget = 100'000'000;                  // safety cutoff on total queries
  bool detailed_transcript = true;
};

struct SearchResult {
  std::vector<int> found;  // vertices the searcher believes are targets
  Transcript transcript;
};

// Candidate-set binary search with gamma medians against a truthful
// single-target oracle. Query count is at most
// ceil(log2 n / (1 - log2(1+eps))) + 1.
SearchResult gamma_binary_search(const Instance& inst, Oracle& oracle,
                                 const SearchParams& params);

// First-target finder for a biased two-target oracle (p1 > 1/2):
// multiplicative weights over vertices driven by weighted-gamma medians,
// followed by reveal-based verification of the heaviest vertex, restarting
// at most 3 times. Throws FirstTargetNotFound when every attempt fails.
SearchResult noisy_first_target(const Instance& inst, Oracle& oracle,
                                const SearchParams& params);

// Two-phase two-target search on trees. Each phase runs at most
// ceil(log2 n) halving iterations; iterations query the current median
// ceil(rho * alpha * log2 n) times where alpha = -1/log2(p1).
SearchResult tree_two_target_search(const Instance& inst, Oracle& oracle,
                                    const SearchParams& params);

double tree_search_alpha(double p1);

// Second-target detection from repeated direction queries (equiprobable tie
// policy): each round queries the median ceil(c * maxdeg * log2 n) times
// with c = 7(1+p1)^2 / (p1 (1-p1)^2), updating through any response off the
// known target's shortest paths, else through the most frequent response.
SearchResult algorithm1_second_target(const Instance& inst, int t1, Oracle& oracle,
                                      const SearchParams& params);

double algorithm1_constant(double p1);

// Second-target detection from direction-distance queries: responses that
// mismatch the known target's distance resolve a round deterministically;
// otherwise candidate neighbors are verified by the distance-decrement
// predicate. A round with no accepted branch repeats once, then throws
// NoBranchAccepted.
SearchResult algorithm2_direction_distance(const Instance& inst, int t1, Oracle& oracle,
                                           const SearchParams& params);

// Second-target detection from vertex-direction plus edge-direction
// queries: candidate neighbors are accepted when every edge query answers
// YES.
SearchResult algorithm3_vertex_edge(const Instance& inst, int t1, Oracle& dir_oracle,
                                    Oracle& edge_oracle, const SearchParams& params);

// Finds all |T| targets with restricted-set queries, deterministically, in
// at most |T| * (ceil(log2 n) + 1) queries.
SearchResult restricted_set_search(const Instance& inst, Oracle& oracle, int target_count,
                                   const SearchParams& params);

}  // namespace graphsearch
