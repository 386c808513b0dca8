#include "graphsearch/transcript.hpp"

#include <numeric>

#include <json.hpp>

namespace graphsearch {

const char* query_type_name(QueryType t) {
  switch (t) {
    case QueryType::Direction: return "direction";
    case QueryType::NoisyDirection: return "noisy-direction";
    case QueryType::DirectionDistance: return "direction-distance";
    case QueryType::EdgeDirection: return "edge-direction";
    case QueryType::TwoDirection: return "two-direction";
    case QueryType::RestrictedSet: return "restricted-set";
  }
  return "?";
}

void Transcript::log(QueryType type, int vertex, const QueryResponse& response,
                     int candidate_size, int phase, int vertex2, int set_size_arg) {
  ++totals_[static_cast<std::size_t>(type)];
  if (detailed_) {
    records_.push_back(QueryRecord{static_cast<int>(total()), type, vertex, vertex2,
                                   set_size_arg, response, candidate_size, phase});
  }
}

long Transcript::total() const {
  return std::accumulate(totals_.begin(), totals_.end(), 0L);
}

std::string Transcript::to_json() const {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& r : records_) {
    nlohmann::json q{{"type", query_type_name(r.type)}, {"vertex", r.vertex}};
    if (r.vertex2 >= 0) q["vertex2"] = r.vertex2;
    if (r.set_size_arg >= 0) q["set_size_arg"] = r.set_size_arg;
    steps.push_back(nlohmann::json{{"step", r.step},
                                   {"query", q},
                                   {"response", response_to_string(r.response)},
                                   {"candidate_size", r.candidate_size}});
  }
  return steps.dump(2);
}

}  // namespace graphsearch
