#include "graphsearch/potentials.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>

#include "graphsearch/errors.hpp"

namespace graphsearch {

double phi(const DistanceTable& dt, const VertexSet& s, int v) {
  double total = 0.0;
  s.for_each([&](int u) { total += dt(v, u); });
  return total;
}

long long gamma(const Instance& inst, const VertexSet& s, int v) {
  long long best = 0;
  for (const auto& e : inst.graph().neighbors(v)) {
    const long long hit = inst.cones().members(v, e.to).intersection_size(s);
    best = std::max(best, hit);
  }
  return best;
}

double weighted_gamma(const Instance& inst, std::span<const double> weights, int v) {
  double best = 0.0;
  for (const auto& e : inst.graph().neighbors(v)) {
    double mass = 0.0;
    inst.cones().members(v, e.to).for_each([&](int x) { mass += weights[static_cast<std::size_t>(x)]; });
    best = std::max(best, mass);
  }
  return best;
}

std::vector<double> phi_all(const Instance& inst, const VertexSet& s) {
  const int n = inst.vertex_count();
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = phi(inst.distances(), s, v);
  return out;
}

std::vector<long long> gamma_all(const Instance& inst, const VertexSet& s) {
  const int n = inst.vertex_count();
  std::vector<long long> out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = gamma(inst, s, v);
  return out;
}

namespace {

template <class T>
int argmin_smallest_id(const std::vector<T>& values) {
  int best = 0;
  for (int v = 1; v < static_cast<int>(values.size()); ++v)
    if (values[static_cast<std::size_t>(v)] < values[static_cast<std::size_t>(best)]) best = v;
  return best;
}

}  // namespace

int exact_median(PotentialKind kind, const Instance& inst, const VertexSet& s) {
  assert(!s.empty());
  if (kind == PotentialKind::Phi) return argmin_smallest_id(phi_all(inst, s));
  return argmin_smallest_id(gamma_all(inst, s));
}

int weighted_gamma_median(const Instance& inst, std::span<const double> weights) {
  const int n = inst.vertex_count();
  int best = 0;
  double best_value = weighted_gamma(inst, weights, 0);
  for (int v = 1; v < n; ++v) {
    const double value = weighted_gamma(inst, weights, v);
    if (value < best_value) {
      best = v;
      best_value = value;
    }
  }
  return best;
}

int approx_median(MedianPolicy& policy, const Instance& inst, const VertexSet& s, Rng* rng) {
  assert(!s.empty());
  std::vector<double> pot;
  if (policy.potential == PotentialKind::Phi) {
    pot = phi_all(inst, s);
  } else {
    const auto g = gamma_all(inst, s);
    pot.assign(g.begin(), g.end());
  }
  const double minimum = *std::min_element(pot.begin(), pot.end());
  // Tiny slack keeps exactly-at-threshold qualifiers in under rounding.
  const double threshold = (1.0 + policy.epsilon) * minimum + 1e-9;
  auto qualifies = [&](int v) { return pot[static_cast<std::size_t>(v)] <= threshold; };

  switch (policy.rule) {
    case ChoiceRule::Best:
      return argmin_smallest_id(pot);
    case ChoiceRule::WorstQualifying: {
      int best = -1;
      for (int v = 0; v < static_cast<int>(pot.size()); ++v) {
        if (!qualifies(v)) continue;
        if (best < 0 || pot[static_cast<std::size_t>(v)] > pot[static_cast<std::size_t>(best)])
          best = v;
      }
      return best;
    }
    case ChoiceRule::RandomQualifying: {
      std::vector<int> pool;
      for (int v = 0; v < static_cast<int>(pot.size()); ++v)
        if (qualifies(v)) pool.push_back(v);
      assert(rng != nullptr);
      return rng->pick(pool);
    }
    case ChoiceRule::Scripted: {
      if (policy.script_cursor >= policy.script.size())
        throw ScriptViolation("script exhausted");
      const int v = policy.script[policy.script_cursor++];
      if (v < 0 || v >= static_cast<int>(pot.size()) || !qualifies(v))
        throw ScriptViolation("scripted vertex " + std::to_string(v) +
                              " is not a qualifying approximate median");
      return v;
    }
  }
  return argmin_smallest_id(pot);
}

}  // namespace graphsearch
