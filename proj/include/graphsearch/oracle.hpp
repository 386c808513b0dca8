#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "graphsearch/instance.hpp"
#include "graphsearch/rng.hpp"
#include "graphsearch/vertex_set.hpp"

namespace graphsearch {

// Oracle answer shapes. Target indices are 1-based, matching the order in
// OracleConfig::targets.
struct Found {
  int target_index;
};
struct Direction {
  int neighbor;
};
struct DirectionDistance {
  int neighbor;
  double distance;
};
struct EdgeAnswer {
  bool yes;
};
struct TwoDirections {
  int first;   // smaller id
  int second;  // larger id; may equal first
};

using QueryResponse = std::variant<Found, Direction, DirectionDistance, EdgeAnswer, TwoDirections>;

inline bool is_found(const QueryResponse& r) { return std::holds_alternative<Found>(r); }
inline int found_index(const QueryResponse& r) { return std::get<Found>(r).target_index; }
std::string response_to_string(const QueryResponse& r);

enum class TiePolicy { Equiprobable, AdversarialSmallestId };

struct OracleConfig {
  std::vector<int> targets;           // t_1, ..., t_|T|, distinct
  std::vector<double> probabilities;  // p_i > 0, summing to 1
  TiePolicy ties = TiePolicy::Equiprobable;
  std::uint64_t seed = 0;

  void validate(int vertex_count) const;

  static OracleConfig single(int t, std::uint64_t seed,
                             TiePolicy ties = TiePolicy::Equiprobable);
  static OracleConfig two(int t1, int t2, double p1, std::uint64_t seed,
                          TiePolicy ties = TiePolicy::Equiprobable);
};

// Truthful probabilistic answer producer. Every query samples a target
// index i with probability p_i, reveals Found(i) when the queried vertex is
// t_i, and otherwise directs along a shortest path to t_i. One oracle owns
// one RNG stream and serves one search loop.
class Oracle {
 public:
  Oracle(const Instance& inst, OracleConfig cfg);

  QueryResponse direction_query(int v);

  // Single-target query that lies with probability 1-p; p must exceed 1/2.
  // The lying answer is chosen adversarially: it keeps the registered
  // belief set as large as possible, falling back to the smallest-id
  // neighbor off every shortest path (or overall when none is off).
  QueryResponse noisy_single_query(double p, int t, int v);

  QueryResponse direction_distance_query(int v);

  // YES iff the sampled target lies in cone(v, u); u must be adjacent to v.
  QueryResponse edge_direction_query(int v, int u);

  // Unordered pair {u, u'} with u on a shortest path to t_1 and u' on one
  // to t_2. Requires exactly two targets.
  QueryResponse two_direction_query(int v);

  // Deterministic adversarial query restricted to the set s: directs to
  // some target inside s, or returns the smallest-id neighbor as noise when
  // s contains no target.
  QueryResponse restricted_set_query(int v, const VertexSet& s);

  void register_belief(const VertexSet* belief) { belief_ = belief; }

  const OracleConfig& config() const { return cfg_; }
  long queries_issued() const { return queries_; }
  // Index sampled by the most recent probabilistic query (1-based), or 0.
  int last_sampled_target() const { return last_sampled_; }

 private:
  int sample_target_index();
  int pick_direction(const std::vector<int>& candidates);

  const Instance& inst_;
  OracleConfig cfg_;
  Rng rng_;
  const VertexSet* belief_ = nullptr;
  long queries_ = 0;
  int last_sampled_ = 0;
};

}  // namespace graphsearch
