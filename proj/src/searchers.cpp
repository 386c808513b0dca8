#include "graphsearch/searchers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphsearch/errors.hpp"

namespace graphsearch {

namespace {

int log2_ceil(int n) {
  int k = 0;
  while ((1LL << k) < n) ++k;
  return k;
}

long gamma_search_cap(int n, double epsilon) {
  if (n <= 1) return 1;
  const double denom = 1.0 - std::log2(1.0 + epsilon);
  return static_cast<long>(std::ceil(std::log2(static_cast<double>(n)) / denom - 1e-9)) + 1;
}

int repetitions(double rho, double mult, int n) {
  if (n <= 1) return 1;
  const double raw = rho * mult * std::log2(static_cast<double>(n));
  return std::max(1, static_cast<int>(std::ceil(raw - 1e-9)));
}

void check_budget(const Transcript& tr, const SearchParams& params) {
  if (tr.total() >= params.budget)
    throw BudgetExceeded("query budget of " + std::to_string(params.budget) + " exhausted");
}

bool shrank_enough(int before, int after, double epsilon) {
  return after <= (1.0 + epsilon) / 2.0 * before + 1e-9;
}

MedianPolicy policy_from(const SearchParams& params) {
  return MedianPolicy{PotentialKind::Gamma, params.epsilon, params.median_rule,
                      params.median_script, 0};
}

}  // namespace

SearchResult gamma_binary_search(const Instance& inst, Oracle& oracle,
                                 const SearchParams& params) {
  const int n = inst.vertex_count();
  SearchResult result{{}, Transcript(params.detailed_transcript)};
  Transcript& tr = result.transcript;
  tr.bound_cap = gamma_search_cap(n, params.epsilon);
  MedianPolicy policy = policy_from(params);
  Rng rng(derive_seed(params.seed, 0x6d));

  VertexSet s = VertexSet::all(n);
  while (true) {
    check_budget(tr, params);
    const int before = s.size();
    const int v = approx_median(policy, inst, s, &rng);
    const QueryResponse resp = oracle.direction_query(v);
    if (is_found(resp)) {
      tr.log(QueryType::Direction, v, resp, s.size());
      result.found = {v};
      break;
    }
    s.intersect_with(inst.cones().members(v, std::get<Direction>(resp).neighbor));
    tr.log(QueryType::Direction, v, resp, s.size());
    if (!shrank_enough(before, s.size(), params.epsilon)) tr.shrinkage_ok = false;
    if (s.empty())
      throw BudgetExceeded("candidate set emptied: the oracle violated its contract");
  }
  tr.bound_ok = tr.total() <= tr.bound_cap;
  return result;
}

SearchResult noisy_first_target(const Instance& inst, Oracle& oracle,
                                const SearchParams& params) {
  const int n = inst.vertex_count();
  const double p1 = oracle.config().probabilities.front();
  if (!(p1 > 0.5))
    throw IncompatibleConfig("first-target search needs a biased oracle with p1 > 1/2");
  SearchResult result{{}, Transcript(params.detailed_transcript)};
  Transcript& tr = result.transcript;
  const int rounds = repetitions(params.rho, 1.0, n);
  tr.bound_cap = 8L * rounds;  // 4 attempts, each <= rounds + rounds queries
  const double keep_factor = (1.0 - p1) / p1;

  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<double> weights(static_cast<std::size_t>(n), 1.0);
    for (int r = 0; r < rounds; ++r) {
      check_budget(tr, params);
      const int v = weighted_gamma_median(inst, weights);
      const QueryResponse resp = oracle.direction_query(v);
      tr.log(QueryType::Direction, v, resp, n, attempt + 1);
      if (is_found(resp)) {
        if (found_index(resp) == 1) {
          result.found = {v};
          tr.bound_ok = tr.total() <= tr.bound_cap;
          return result;
        }
        weights[static_cast<std::size_t>(v)] = 0.0;  // v is the other target
        continue;
      }
      const VertexSet& keep = inst.cones().members(v, std::get<Direction>(resp).neighbor);
      for (int x = 0; x < n; ++x)
        if (!keep.contains(x)) weights[static_cast<std::size_t>(x)] *= keep_factor;
    }
    int candidate = 0;
    for (int x = 1; x < n; ++x)
      if (weights[static_cast<std::size_t>(x)] > weights[static_cast<std::size_t>(candidate)])
        candidate = x;
    for (int k = 0; k < rounds; ++k) {
      check_budget(tr, params);
      const QueryResponse resp = oracle.direction_query(candidate);
      tr.log(QueryType::Direction, candidate, resp, n, attempt + 1);
      if (is_found(resp)) {
        if (found_index(resp) == 1) {
          result.found = {candidate};
          tr.bound_ok = tr.total() <= tr.bound_cap;
          return result;
        }
        break;  // candidate is the other target; this attempt failed
      }
    }
  }
  throw FirstTargetNotFound("no attempt verified the first target");
}

double tree_search_alpha(double p1) { return -1.0 / std::log2(p1); }

namespace {

// One two-target phase on a tree: repeated queries at the current median,
// trusting any response whose cone avoids `anchor` (the first median in
// phase 1, the already-found target in phase 2), else following the
// unanimous direction toward it.
struct TreePhaseOutcome {
  int revealed = -1;   // vertex revealed by a Found response, if any
  int isolated = -1;   // final singleton, if the set narrowed to one vertex
  bool emptied = false;
};

TreePhaseOutcome run_tree_phase(const Instance& inst, Oracle& oracle, Transcript& tr,
                                const SearchParams& params, int phase, int reps,
                                int anchor_or_negative, int skip_found_at) {
  const int n = inst.vertex_count();
  const int iters = log2_ceil(n);
  VertexSet s = VertexSet::all(n);
  int anchor = anchor_or_negative;
  TreePhaseOutcome out;

  for (int i = 1; i <= iters && s.size() > 1; ++i) {
    const int v = exact_median(PotentialKind::Gamma, inst, s);
    if (phase == 1 && i == 1) anchor = v;
    const int count = (phase == 1 && i == 1) ? 1 : reps;
    std::vector<int> dirs;
    dirs.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
      check_budget(tr, params);
      const QueryResponse resp = oracle.direction_query(v);
      if (is_found(resp)) {
        if (v == skip_found_at) {
          tr.log(QueryType::Direction, v, resp, s.size(), phase);
          continue;  // reveal of the already-known target
        }
        tr.log(QueryType::Direction, v, resp, s.size(), phase);
        out.revealed = v;
        return out;
      }
      dirs.push_back(std::get<Direction>(resp).neighbor);
      tr.log(QueryType::Direction, v, resp, s.size(), phase);
    }
    if (dirs.empty()) continue;
    int chosen = -1;
    if (v == anchor) {
      chosen = dirs.front();
    } else {
      for (int u : dirs) {
        if (!inst.cones().members(v, u).contains(anchor)) {
          chosen = u;
          break;
        }
      }
      if (chosen < 0) chosen = dirs.front();  // unanimous direction toward the anchor
    }
    const int before = s.size();
    s.intersect_with(inst.cones().members(v, chosen));
    if (!shrank_enough(before, s.size(), 0.0)) tr.shrinkage_ok = false;
    if (s.empty()) {
      out.emptied = true;
      return out;
    }
  }
  if (s.size() == 1) out.isolated = s.first();
  return out;
}

}  // namespace

SearchResult tree_two_target_search(const Instance& inst, Oracle& oracle,
                                    const SearchParams& params) {
  const Graph& g = inst.graph();
  const int n = g.vertex_count();
  if (g.edge_count() != n - 1) throw NotATree("two-target tree search requires a tree");
  if (oracle.config().targets.size() != 2)
    throw IncompatibleConfig("tree two-target search needs exactly two targets");
  const auto& probs = oracle.config().probabilities;
  const double p1 = std::max(probs[0], probs[1]);
  const double alpha = tree_search_alpha(p1);
  const int iters = log2_ceil(n);
  const int reps = repetitions(params.rho, alpha, n);

  SearchResult result{{}, Transcript(params.detailed_transcript)};
  Transcript& tr = result.transcript;
  tr.bound_cap = static_cast<long>(
      std::floor(2.0 * params.rho * alpha * static_cast<double>(iters) * iters));

  const auto phase1 = run_tree_phase(inst, oracle, tr, params, 1, reps, -1, -1);
  const int t0 = phase1.revealed >= 0 ? phase1.revealed : phase1.isolated;
  if (t0 < 0) {
    tr.bound_ok = tr.total() <= tr.bound_cap;
    return result;  // phase 1 failed to isolate anything
  }

  const auto phase2 = run_tree_phase(inst, oracle, tr, params, 2, reps, t0, t0);
  const int other = phase2.revealed >= 0 ? phase2.revealed : phase2.isolated;
  result.found = other >= 0 ? std::vector<int>{t0, other} : std::vector<int>{t0};
  tr.bound_ok = tr.total() <= tr.bound_cap;
  return result;
}

double algorithm1_constant(double p1) {
  return 7.0 * (1.0 + p1) * (1.0 + p1) / (p1 * (1.0 - p1) * (1.0 - p1));
}

SearchResult algorithm1_second_target(const Instance& inst, int t1, Oracle& oracle,
                                      const SearchParams& params) {
  const Graph& g = inst.graph();
  const int n = g.vertex_count();
  if (oracle.config().targets.size() != 2 || oracle.config().targets[0] != t1)
    throw IncompatibleConfig("second-target search expects targets {t1, t2} with t1 known");
  const double p1 = oracle.config().probabilities[0];
  if (!(p1 > 0.5)) throw IncompatibleConfig("second-target search needs p1 > 1/2");

  const double c = algorithm1_constant(p1);
  const int reps = std::max(
      1, static_cast<int>(std::ceil(c * g.max_degree() * std::log2(static_cast<double>(n)) -
                                    1e-9)));
  const long round_cap = gamma_search_cap(n, params.epsilon) - 1;

  SearchResult result{{}, Transcript(params.detailed_transcript)};
  Transcript& tr = result.transcript;
  tr.bound_cap = static_cast<long>(reps) * round_cap;
  MedianPolicy policy = policy_from(params);
  Rng rng(derive_seed(params.seed, 0x6d));

  VertexSet s = VertexSet::all(n);
  while (s.size() > 1) {
    if (tr.rounds > round_cap + 2) break;  // unsound oracle; give up quietly
    ++tr.rounds;
    const int v = approx_median(policy, inst, s, &rng);
    const auto e1 = inst.cones().target_edges(v, t1);
    const auto nbrs = g.neighbors(v);
    std::vector<long> freq(nbrs.size(), 0);
    int deterministic_u = -1;
    for (int k = 0; k < reps; ++k) {
      check_budget(tr, params);
      const QueryResponse resp = oracle.direction_query(v);
      ++tr.primary_queries;
      tr.log(QueryType::Direction, v, resp, s.size());
      if (is_found(resp)) {
        if (found_index(resp) == 2) {
          result.found = {v};
          tr.bound_ok = tr.total() <= tr.bound_cap;
          return result;
        }
        continue;  // v == t1 revealed; carries no direction
      }
      const int u = std::get<Direction>(resp).neighbor;
      if (deterministic_u < 0 && !std::binary_search(e1.begin(), e1.end(), u))
        deterministic_u = u;
      for (std::size_t j = 0; j < nbrs.size(); ++j) {
        if (nbrs[j].to == u) {
          ++freq[j];
          break;
        }
      }
    }
    int chosen = deterministic_u;
    if (chosen < 0) {
      long best = 0;
      for (std::size_t j = 0; j < nbrs.size(); ++j) {
        if (freq[j] > best) {  // neighbors ascend by id, so ties keep the smallest
          best = freq[j];
          chosen = nbrs[j].to;
        }
      }
      if (chosen < 0) continue;  // every response was a reveal of t1
    }
    const int before = s.size();
    s.intersect_with(inst.cones().members(v, chosen));
    if (!shrank_enough(before, s.size(), params.epsilon)) tr.shrinkage_ok = false;
    if (s.empty()) {
      tr.bound_ok = tr.total() <= tr.bound_cap;
      return result;  // wrong branch eliminated everything; report failure
    }
  }
  if (s.size() == 1) result.found = {s.first()};
  tr.bound_ok = tr.total() <= tr.bound_cap;
  return result;
}

SearchResult algorithm2_direction_distance(const Instance& inst, int t1, Oracle& oracle,
                                           const SearchParams& params) {
  const int n = inst.vertex_count();
  if (oracle.config().targets.size() != 2 || oracle.config().targets[0] != t1)
    throw IncompatibleConfig("second-target search expects targets {t1, t2} with t1 known");
  if (!(oracle.config().probabilities[0] > 0.5))
    throw IncompatibleConfig("second-target search needs a biased oracle with p1 > 1/2");
  const int reps = repetitions(params.rho, 1.0, n);
  const long round_cap = gamma_search_cap(n, params.epsilon) - 1;

  SearchResult result{{}, Transcript(params.detailed_transcript)};
  Transcript& tr = result.transcript;
  tr.bound_cap = static_cast<long>(reps + reps * reps) * (2 * round_cap + 2);
  MedianPolicy policy = policy_from(params);
  Rng rng(derive_seed(params.seed, 0x6d));

  VertexSet s = VertexSet::all(n);
  bool retried = false;
  while (s.size() > 1) {
    if (tr.rounds > 2 * round_cap + 4) break;
    ++tr.rounds;
    const int v = approx_median(policy, inst, s, &rng);
    const double d1 = inst.distances()(v, t1);
    const auto e1 = inst.cones().target_edges(v, t1);

    std::vector<std::pair<int, double>> q;  // distinct responses, insertion order
    for (int k = 0; k < reps; ++k) {
      check_budget(tr, params);
      const QueryResponse resp = oracle.direction_distance_query(v);
      ++tr.primary_queries;
      tr.log(QueryType::DirectionDistance, v, resp, s.size());
      if (is_found(resp)) {
        if (found_index(resp) == 2) {
          result.found = {v};
          tr.bound_ok = tr.total() <= tr.bound_cap;
          return result;
        }
        continue;
      }
      const auto& dd = std::get<DirectionDistance>(resp);
      const std::pair<int, double> item{dd.neighbor, dd.distance};
      if (std::find(q.begin(), q.end(), item) == q.end()) q.push_back(item);
    }

    int update_u = -1;
    for (const auto& [u, ell] : q) {
      if (!std::binary_search(e1.begin(), e1.end(), u) || std::fabs(ell - d1) > kConeTolerance) {
        update_u = u;  // this response cannot refer to t1
        break;
      }
    }
    if (update_u < 0) {
      for (const auto& [u, ell] : q) {
        const double expect = ell - inst.graph().edge_weight(v, u);
        bool all_match = true;
        for (int k = 0; k < reps; ++k) {
          check_budget(tr, params);
          const QueryResponse resp = oracle.direction_distance_query(u);
          ++tr.secondary_queries;
          tr.log(QueryType::DirectionDistance, u, resp, s.size());
          if (is_found(resp)) {
            if (found_index(resp) == 2) {
              result.found = {u};
              tr.bound_ok = tr.total() <= tr.bound_cap;
              return result;
            }
            continue;
          }
          if (std::fabs(std::get<DirectionDistance>(resp).distance - expect) > kConeTolerance)
            all_match = false;
        }
        if (all_match) {
          update_u = u;
          break;
        }
      }
    }
    if (update_u < 0) {
      if (retried) throw NoBranchAccepted("no candidate branch accepted after a retry");
      retried = true;
      continue;
    }
    retried = false;
    const int before = s.size();
    s.intersect_with(inst.cones().members(v, update_u));
    if (!shrank_enough(before, s.size(), params.epsilon)) tr.shrinkage_ok = false;
    if (s.empty()) {
      tr.bound_ok = tr.total() <= tr.bound_cap;
      return result;
    }
  }
  if (s.size() == 1) result.found = {s.first()};
  tr.bound_ok = tr.total() <= tr.bound_cap;
  return result;
}

SearchResult algorithm3_vertex_edge(const Instance& inst, int t1, Oracle& dir_oracle,
                                    Oracle& edge_oracle, const SearchParams& params) {
  const int n = inst.vertex_count();
  if (dir_oracle.config().targets.size() != 2 || dir_oracle.config().targets[0] != t1)
    throw IncompatibleConfig("second-target search expects targets {t1, t2} with t1 known");
  if (dir_oracle.config().targets != edge_oracle.config().targets)
    throw IncompatibleConfig("vertex and edge oracles must share targets");
  if (!(dir_oracle.config().probabilities[0] > 0.5))
    throw IncompatibleConfig("second-target search needs a biased oracle with p1 > 1/2");
  const int reps = repetitions(params.rho, 1.0, n);
  const long round_cap = gamma_search_cap(n, params.epsilon) - 1;

  SearchResult result{{}, Transcript(params.detailed_transcript)};
  Transcript& tr = result.transcript;
  tr.bound_cap = static_cast<long>(reps + reps * reps) * (2 * round_cap + 2);
  MedianPolicy policy = policy_from(params);
  Rng rng(derive_seed(params.seed, 0x6d));

  VertexSet s = VertexSet::all(n);
  bool retried = false;
  while (s.size() > 1) {
    if (tr.rounds > 2 * round_cap + 4) break;
    ++tr.rounds;
    const int v = approx_median(policy, inst, s, &rng);
    const auto e1 = inst.cones().target_edges(v, t1);

    std::vector<int> q;
    for (int k = 0; k < reps; ++k) {
      check_budget(tr, params);
      const QueryResponse resp = dir_oracle.direction_query(v);
      ++tr.primary_queries;
      tr.log(QueryType::Direction, v, resp, s.size());
      if (is_found(resp)) {
        if (found_index(resp) == 2) {
          result.found = {v};
          tr.bound_ok = tr.total() <= tr.bound_cap;
          return result;
        }
        continue;
      }
      const int u = std::get<Direction>(resp).neighbor;
      if (std::find(q.begin(), q.end(), u) == q.end()) q.push_back(u);
    }

    int update_u = -1;
    for (int u : q) {
      if (!std::binary_search(e1.begin(), e1.end(), u)) {
        update_u = u;
        break;
      }
    }
    if (update_u < 0) {
      for (int u : q) {
        bool all_yes = true;
        for (int k = 0; k < reps; ++k) {
          check_budget(tr, params);
          const QueryResponse resp = edge_oracle.edge_direction_query(v, u);
          ++tr.secondary_queries;
          tr.log(QueryType::EdgeDirection, v, resp, s.size(), 0, u);
          if (!std::get<EdgeAnswer>(resp).yes) all_yes = false;
        }
        if (all_yes) {
          update_u = u;
          break;
        }
      }
    }
    if (update_u < 0) {
      if (retried) throw NoBranchAccepted("no candidate branch accepted after a retry");
      retried = true;
      continue;
    }
    retried = false;
    const int before = s.size();
    s.intersect_with(inst.cones().members(v, update_u));
    if (!shrank_enough(before, s.size(), params.epsilon)) tr.shrinkage_ok = false;
    if (s.empty()) {
      tr.bound_ok = tr.total() <= tr.bound_cap;
      return result;
    }
  }
  if (s.size() == 1) result.found = {s.first()};
  tr.bound_ok = tr.total() <= tr.bound_cap;
  return result;
}

SearchResult restricted_set_search(const Instance& inst, Oracle& oracle, int target_count,
                                   const SearchParams& params) {
  const int n = inst.vertex_count();
  if (static_cast<int>(oracle.config().targets.size()) != target_count)
    throw IncompatibleConfig("oracle target count does not match the search");

  SearchResult result{{}, Transcript(params.detailed_transcript)};
  Transcript& tr = result.transcript;
  tr.bound_cap = static_cast<long>(target_count) * (log2_ceil(n) + 1);
  MedianPolicy policy = policy_from(params);
  Rng rng(derive_seed(params.seed, 0x6d));

  for (int round = 0; round < target_count; ++round) {
    VertexSet s = VertexSet::all(n);
    for (int f : result.found) s.erase(f);
    while (true) {
      check_budget(tr, params);
      const int before = s.size();
      const int v = approx_median(policy, inst, s, &rng);
      const QueryResponse resp = oracle.restricted_set_query(v, s);
      if (is_found(resp)) {
        tr.log(QueryType::RestrictedSet, v, resp, s.size(), round + 1, -1, before);
        result.found.push_back(v);
        break;
      }
      s.intersect_with(inst.cones().members(v, std::get<Direction>(resp).neighbor));
      tr.log(QueryType::RestrictedSet, v, resp, s.size(), round + 1, -1, before);
      if (!shrank_enough(before, s.size(), params.epsilon)) tr.shrinkage_ok = false;
      if (s.empty())
        throw BudgetExceeded("candidate set emptied: restricted-set oracle unsound");
    }
  }
  tr.bound_ok = tr.total() <= tr.bound_cap;
  return result;
}

}  // namespace graphsearch
