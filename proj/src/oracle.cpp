#include "graphsearch/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "graphsearch/errors.hpp"

namespace graphsearch {

std::string response_to_string(const QueryResponse& r) {
  std::ostringstream out;
  if (const auto* f = std::get_if<Found>(&r)) {
    out << "found:" << f->target_index;
  } else if (const auto* d = std::get_if<Direction>(&r)) {
    out << "dir:" << d->neighbor;
  } else if (const auto* dd = std::get_if<DirectionDistance>(&r)) {
    out << "dirdist:" << dd->neighbor << ':' << dd->distance;
  } else if (const auto* e = std::get_if<EdgeAnswer>(&r)) {
    out << (e->yes ? "yes" : "no");
  } else if (const auto* t = std::get_if<TwoDirections>(&r)) {
    out << "pair:" << t->first << ':' << t->second;
  }
  return out.str();
}

void OracleConfig::validate(int vertex_count) const {
  if (targets.empty()) throw IncompatibleConfig("oracle needs at least one target");
  if (targets.size() != probabilities.size())
    throw IncompatibleConfig("targets and probabilities differ in length");
  double sum = 0.0;
  for (double p : probabilities) {
    if (!(p > 0.0)) throw IncompatibleConfig("target probabilities must be positive");
    sum += p;
  }
  if (std::fabs(sum - 1.0) > 1e-9)
    throw IncompatibleConfig("target probabilities must sum to 1");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= vertex_count)
      throw IncompatibleConfig("target id out of range");
    for (std::size_t j = i + 1; j < targets.size(); ++j)
      if (targets[i] == targets[j]) throw IncompatibleConfig("targets must be distinct");
  }
}

OracleConfig OracleConfig::single(int t, std::uint64_t seed, TiePolicy ties) {
  return OracleConfig{{t}, {1.0}, ties, seed};
}

OracleConfig OracleConfig::two(int t1, int t2, double p1, std::uint64_t seed, TiePolicy ties) {
  return OracleConfig{{t1, t2}, {p1, 1.0 - p1}, ties, seed};
}

Oracle::Oracle(const Instance& inst, OracleConfig cfg)
    : inst_(inst), cfg_(std::move(cfg)), rng_(cfg_.seed) {
  cfg_.validate(inst.vertex_count());
}

int Oracle::sample_target_index() {
  if (cfg_.targets.size() == 1) {
    last_sampled_ = 1;
    return 1;
  }
  const double roll = rng_.next_double();
  double acc = 0.0;
  for (std::size_t i = 0; i < cfg_.probabilities.size(); ++i) {
    acc += cfg_.probabilities[i];
    if (roll < acc) {
      last_sampled_ = static_cast<int>(i) + 1;
      return last_sampled_;
    }
  }
  last_sampled_ = static_cast<int>(cfg_.targets.size());
  return last_sampled_;
}

int Oracle::pick_direction(const std::vector<int>& candidates) {
  if (cfg_.ties == TiePolicy::AdversarialSmallestId || candidates.size() == 1)
    return candidates.front();  // candidates are in ascending id order
  return rng_.pick(candidates);
}

QueryResponse Oracle::direction_query(int v) {
  ++queries_;
  const int i = sample_target_index();
  const int t = cfg_.targets[static_cast<std::size_t>(i - 1)];
  if (v == t) return Found{i};
  return Direction{pick_direction(inst_.cones().target_edges(v, t))};
}

QueryResponse Oracle::noisy_single_query(double p, int t, int v) {
  if (!(p > 0.5)) throw InvalidNoise("noise parameter p must exceed 1/2");
  ++queries_;
  last_sampled_ = 1;
  if (rng_.next_double() < p) {
    // Truthful branch with adversarial tie-breaking.
    if (v == t) return Found{1};
    return Direction{inst_.cones().target_edges(v, t).front()};
  }
  // Lying branch: adversarial but still a neighbor of v.
  const auto correct = inst_.cones().target_edges(v, t);
  if (belief_ != nullptr) {
    int best = -1;
    int best_survivors = -1;
    for (const auto& e : inst_.graph().neighbors(v)) {
      const int survivors = inst_.cones().members(v, e.to).intersection_size(*belief_);
      if (survivors > best_survivors) {
        best_survivors = survivors;
        best = e.to;
      }
    }
    return Direction{best};
  }
  for (const auto& e : inst_.graph().neighbors(v)) {
    if (!std::binary_search(correct.begin(), correct.end(), e.to)) return Direction{e.to};
  }
  return Direction{inst_.graph().neighbors(v).front().to};
}

QueryResponse Oracle::direction_distance_query(int v) {
  ++queries_;
  const int i = sample_target_index();
  const int t = cfg_.targets[static_cast<std::size_t>(i - 1)];
  if (v == t) return Found{i};
  const int u = pick_direction(inst_.cones().target_edges(v, t));
  return DirectionDistance{u, inst_.distances()(v, t)};
}

QueryResponse Oracle::edge_direction_query(int v, int u) {
  if (!inst_.graph().adjacent(v, u))
    throw NotAdjacent("edge query on non-adjacent pair " + std::to_string(v) + "," +
                      std::to_string(u));
  ++queries_;
  const int i = sample_target_index();
  const int t = cfg_.targets[static_cast<std::size_t>(i - 1)];
  return EdgeAnswer{inst_.cones().members(v, u).contains(t)};
}

QueryResponse Oracle::two_direction_query(int v) {
  if (cfg_.targets.size() != 2)
    throw IncompatibleConfig("two-direction query needs exactly two targets");
  ++queries_;
  // Reveal rule carried over from the basic direction query: a queried
  // target is revealed with its own probability.
  for (std::size_t i = 0; i < cfg_.targets.size(); ++i) {
    if (cfg_.targets[i] == v) {
      last_sampled_ = static_cast<int>(i) + 1;
      return Found{static_cast<int>(i) + 1};
    }
  }
  const int a = pick_direction(inst_.cones().target_edges(v, cfg_.targets[0]));
  const int b = pick_direction(inst_.cones().target_edges(v, cfg_.targets[1]));
  return TwoDirections{std::min(a, b), std::max(a, b)};
}

QueryResponse Oracle::restricted_set_query(int v, const VertexSet& s) {
  ++queries_;
  last_sampled_ = 0;
  bool any_target_in_s = false;
  for (std::size_t i = 0; i < cfg_.targets.size(); ++i) {
    if (s.contains(cfg_.targets[i])) {
      any_target_in_s = true;
      if (cfg_.targets[i] == v) return Found{static_cast<int>(i) + 1};
    }
  }
  if (!any_target_in_s) {
    // Documented noise rule: direction independent of the targets.
    return Direction{inst_.graph().neighbors(v).front().to};
  }
  for (const auto& e : inst_.graph().neighbors(v)) {
    const auto& members = inst_.cones().members(v, e.to);
    for (int t : cfg_.targets) {
      if (s.contains(t) && members.contains(t)) return Direction{e.to};
    }
  }
  // Unreachable for valid inputs: some cone of v contains any vertex != v.
  return Direction{inst_.graph().neighbors(v).front().to};
}

}  // namespace graphsearch
