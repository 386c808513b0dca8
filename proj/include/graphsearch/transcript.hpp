#pragma once

#include <array>
#include <string>
#include <vector>

#include "graphsearch/oracle.hpp"

namespace graphsearch {

enum class QueryType {
  Direction = 0,
  NoisyDirection,
  DirectionDistance,
  EdgeDirection,
  TwoDirection,
  RestrictedSet,
};
inline constexpr int kQueryTypeCount = 6;
const char* query_type_name(QueryType t);

struct QueryRecord {
  int step;
  QueryType type;
  int vertex;
  int vertex2;       // second vertex of an edge query, else -1
  int set_size_arg;  // |S| argument of a restricted-set query, else -1
  QueryResponse response;
  int candidate_size;  // |S| after the update this response caused
  int phase;
};

// Ordered record of a single search run: every query, its response, and the
// candidate-set size after the update, plus per-type totals and the
// searcher's closed-form query cap. Detailed per-query records can be
// disabled for bulk experiments; totals are always maintained.
class Transcript {
 public:
  explicit Transcript(bool detailed = true) : detailed_(detailed) {}

  void log(QueryType type, int vertex, const QueryResponse& response, int candidate_size,
           int phase = 0, int vertex2 = -1, int set_size_arg = -1);

  long total() const;
  long count(QueryType t) const { return totals_[static_cast<std::size_t>(t)]; }
  const std::vector<QueryRecord>& records() const { return records_; }

  // Array of {step, query:{type, vertex, vertex2?, set_size_arg?}, response,
  // candidate_size} objects.
  std::string to_json() const;

  std::vector<int> found;
  long bound_cap = 0;
  bool bound_ok = true;
  bool shrinkage_ok = true;  // every updating round shrank S by (1+eps)/2
  int rounds = 0;
  long primary_queries = 0;    // median-block queries (repetition algorithms)
  long secondary_queries = 0;  // verification-block queries

 private:
  bool detailed_;
  std::vector<QueryRecord> records_;
  std::array<long, kQueryTypeCount> totals_{};
};

}  // namespace graphsearch
