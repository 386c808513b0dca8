#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "graphsearch/instance.hpp"
#include "graphsearch/rng.hpp"
#include "graphsearch/vertex_set.hpp"

namespace graphsearch {

enum class PotentialKind { Phi, Gamma };

// Sum of distances from v to every member of s.
double phi(const DistanceTable& dt, const VertexSet& s, int v);

// Largest number of members of s inside a single cone of v; 0 <= value <= |s|.
long long gamma(const Instance& inst, const VertexSet& s, int v);

// Gamma generalized to positive vertex weights: the largest total weight
// inside a single cone of v.
double weighted_gamma(const Instance& inst, std::span<const double> weights, int v);

std::vector<double> phi_all(const Instance& inst, const VertexSet& s);
std::vector<long long> gamma_all(const Instance& inst, const VertexSet& s);

// Vertex of V (not merely of s) minimizing the potential; smallest id wins ties.
int exact_median(PotentialKind kind, const Instance& inst, const VertexSet& s);

// Exact weighted-gamma minimizer over V; smallest id wins ties.
int weighted_gamma_median(const Instance& inst, std::span<const double> weights);

enum class ChoiceRule { Best, WorstQualifying, RandomQualifying, Scripted };

// Selection policy for (1+epsilon)-approximate medians. A vertex x
// qualifies when potential(x) <= (1+epsilon) * min over V.
struct MedianPolicy {
  PotentialKind potential = PotentialKind::Gamma;
  double epsilon = 0.0;
  ChoiceRule rule = ChoiceRule::Best;
  std::vector<int> script;  // used by ChoiceRule::Scripted
  std::size_t script_cursor = 0;
};

// Returns a qualifying vertex chosen per the policy rule. Throws
// ScriptViolation when a scripted vertex does not qualify. `rng` is only
// consulted for RandomQualifying.
int approx_median(MedianPolicy& policy, const Instance& inst, const VertexSet& s,
                  Rng* rng = nullptr);

}  // namespace graphsearch
