#include "graphsearch/adversaries.hpp"

#include <algorithm>
#include <cmath>

#include "graphsearch/errors.hpp"
#include "graphsearch/generators.hpp"
#include "graphsearch/potentials.hpp"

namespace graphsearch {

// ---------------------------------------------------------------- grid ----

GridAdditiveGame::GridAdditiveGame(int n)
    : n_(n), inst_([&] {
        if (n < 4 || n % 2 != 0) throw InvalidSize("grid game needs even n >= 4");
        return generate("grid-diag", GenParams{n}, 0);
      }()),
      queried_(static_cast<std::size_t>(n), 0) {}

int GridAdditiveGame::answered_for(int v) const {
  const int c = n_ / 2;
  return v < c ? v + c : v - c;  // the opposite-row vertex
}

QueryResponse GridAdditiveGame::respond(int v) {
  ++queries_;
  if (committed_) {
    if (v == target_) return Found{1};
    // Truthful after commitment: smallest neighbor on a shortest path.
    return Direction{inst_.cones().target_edges(v, target_).front()};
  }
  if (!queried_[static_cast<std::size_t>(v)]) {
    queried_[static_cast<std::size_t>(v)] = 1;
    ++queried_count_;
  }
  if (queried_count_ == n_) {
    // v was the last vertex standing, so the target can only be there.
    committed_ = true;
    target_ = v;
    return Found{1};
  }
  const int answer = answered_for(v);
  history_.emplace_back(v, answer);
  return Direction{answer};
}

std::vector<int> GridAdditiveGame::committed_targets() const {
  return committed_ ? std::vector<int>{target_} : std::vector<int>{};
}

std::vector<int> GridAdditiveGame::consistent_placements() const {
  std::vector<int> out;
  const auto& dt = inst_.distances();
  for (int t = 0; t < n_; ++t) {
    if (queried_[static_cast<std::size_t>(t)]) continue;
    bool ok = true;
    for (const auto& [v, ans] : history_) {
      if (1.0 + dt(ans, t) > dt(v, t) + 1.0 + kConeTolerance) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(t);
  }
  return out;
}

bool GridAdditiveGame::certificate_ok() const {
  if (committed_) return true;
  // Every unqueried vertex must remain a consistent placement.
  return static_cast<int>(consistent_placements().size()) == n_ - queried_count_;
}

// ------------------------------------------------------------- marking ----

MultiplicativeMarkingGame::MultiplicativeMarkingGame(int n, double epsilon)
    : n_(n), epsilon_(epsilon), inst_([&] {
        if (n < 4 || n % 2 != 0) throw InvalidSize("marking game needs even n >= 4");
        if (!(epsilon > 0.0) || epsilon > 2.0)
          throw InvalidSize("marking game needs 0 < epsilon <= 2");
        return generate("grid-diag", GenParams{n}, 0);
      }()),
      column_marked_(static_cast<std::size_t>(n / 2), 0) {}

long MultiplicativeMarkingGame::bound() const {
  return static_cast<long>(std::ceil(n_ * epsilon_ / 4.0 - 1e-9));
}

int MultiplicativeMarkingGame::unmarked_column_count() const {
  int count = 0;
  for (char m : column_marked_)
    if (!m) ++count;
  return count;
}

QueryResponse MultiplicativeMarkingGame::respond(int v) {
  ++queries_;
  if (committed_) {
    if (v == target_) return Found{1};
    return Direction{inst_.cones().target_edges(v, target_).front()};
  }
  const int c = n_ / 2;
  const int i = column_of(v);
  const double radius = 1.0 / epsilon_;
  long newly = 0;
  int first_new_column = -1;
  for (int j = 0; j < c; ++j) {
    if (column_marked_[static_cast<std::size_t>(j)]) continue;
    if (std::abs(j - i) < radius) {  // open window, exactly the real inequality
      column_marked_[static_cast<std::size_t>(j)] = 1;
      ++newly;
      if (first_new_column < 0) first_new_column = j;
    }
  }
  last_new_columns_ = newly;
  max_new_columns_ = std::max(max_new_columns_, newly);
  if (unmarked_column_count() > 0) {
    const int answer = v < c ? v + c : v - c;
    history_.emplace_back(v, answer);
    return Direction{answer};
  }
  // Everything is marked: place the target at a vertex marked by this very
  // query and answer truthfully.
  committed_ = true;
  target_ = first_new_column >= 0 ? first_new_column : v;
  if (v == target_) return Found{1};
  return Direction{inst_.cones().target_edges(v, target_).front()};
}

std::vector<int> MultiplicativeMarkingGame::committed_targets() const {
  return committed_ ? std::vector<int>{target_} : std::vector<int>{};
}

bool MultiplicativeMarkingGame::placements_exist() const {
  if (committed_) return true;
  const int c = n_ / 2;
  const auto& dt = inst_.distances();
  for (int col = 0; col < c; ++col) {
    if (column_marked_[static_cast<std::size_t>(col)]) continue;
    for (int t : {col, col + c}) {
      bool ok = true;
      for (const auto& [v, ans] : history_) {
        if (1.0 + dt(ans, t) > (1.0 + epsilon_) * dt(v, t) + kConeTolerance) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

bool MultiplicativeMarkingGame::certificate_ok() const {
  if (max_new_columns_ > static_cast<long>(std::floor(2.0 / epsilon_ + kConeTolerance)))
    return false;
  if (committed_) return true;
  // Every vertex in an unmarked column must be a valid placement.
  const int c = n_ / 2;
  const auto& dt = inst_.distances();
  for (int col = 0; col < c; ++col) {
    if (column_marked_[static_cast<std::size_t>(col)]) continue;
    for (int t : {col, col + c}) {
      for (const auto& [v, ans] : history_) {
        if (1.0 + dt(ans, t) > (1.0 + epsilon_) * dt(v, t) + kConeTolerance) return false;
      }
    }
  }
  return true;
}

// ------------------------------------------------------------ phi trap ----

PhiTrapGame::PhiTrapGame(int n, double epsilon)
    : n_(n), side_(static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))))),
      epsilon_(epsilon), graph_([&] {
        const int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
        if (s < 2 || s * s != n) throw InvalidSize("star trap needs n a perfect square >= 4");
        return generate("star-paths", GenParams{n}, 0);
      }()) {}

QueryResponse PhiTrapGame::respond(int v) {
  ++queries_;
  if (v == 0) return Found{1};
  // Unique shortest path toward the center: step one position down the arm.
  const int parent = pos_of(v) == 1 ? 0 : v - 1;
  return Direction{parent};
}

std::vector<int> PhiTrapGame::scripted_policy() const {
  std::vector<int> script;
  script.reserve(static_cast<std::size_t>(side_));
  for (int arm = 0; arm < side_; ++arm) script.push_back(arm * side_ + 1);
  return script;
}

long long PhiTrapGame::phi_center_closed(int n, int k) {
  const long long s = std::llround(std::sqrt(static_cast<double>(n)));
  return k + (s - k) * (static_cast<long long>(n) + s) / 2;
}

long long PhiTrapGame::phi_arm_closed(int n, int k) {
  const long long s = std::llround(std::sqrt(static_cast<double>(n)));
  return 2LL * k + (static_cast<long long>(n) - s) / 2 + 1 +
         (s - k - 1) * (static_cast<long long>(n) + 3 * s) / 2;
}

long long PhiTrapGame::phi_pruned(int v, int k) const {
  const long long s = side_;
  const long long sum_1_to_s = s * (s + 1) / 2;
  if (v == 0) return k + (s - k) * sum_1_to_s;
  const long long arm = arm_of(v);
  const long long a = pos_of(v);
  const bool on_pruned_arm = arm <= k;
  long long phi = a;  // distance to the center
  // Pruned arms keep only their first vertex, at distance a+1 (a-1 on v's own arm).
  phi += (a + 1) * (k - (on_pruned_arm ? 1 : 0));
  if (on_pruned_arm) {
    phi += a - 1;
  } else {
    const long long left = a - 1, right = s - a;
    phi += left * (left + 1) / 2 + right * (right + 1) / 2;
  }
  // Full arms other than v's own.
  phi += (a * s + sum_1_to_s) * (s - k - (on_pruned_arm ? 0 : 1));
  return phi;
}

PhiTrapGame::ScriptedRun PhiTrapGame::run_scripted() {
  ScriptedRun run;
  const int s = side_;
  long long effective_candidates = n_ + 1;

  for (int k = 0; k < s; ++k) {
    const int scripted = k * s + 1;  // first vertex of arm k+1
    ScriptedStep step;
    step.pruned_arms = k;
    step.scripted_vertex = scripted;
    step.phi_scripted = phi_pruned(scripted, k);
    step.phi_center = phi_pruned(0, k);

    // Exact minimum over all vertices: positions are interchangeable across
    // arms of the same class, so one arm per class suffices.
    long long minimum = step.phi_center;
    int minimizer = 0;
    for (int a = 1; a <= s; ++a) {
      if (k >= 1) {
        const long long value = phi_pruned((1 - 1) * s + a, k);  // a pruned arm
        if (value < minimum) {
          minimum = value;
          minimizer = a;
        }
      }
      if (k < s) {
        const long long value = phi_pruned(k * s + a, k);  // a full arm
        if (value < minimum) {
          minimum = value;
          minimizer = k * s + a;
        }
      }
    }
    step.phi_minimum = minimum;
    step.minimizer = minimizer;
    step.qualified = static_cast<double>(step.phi_scripted) <=
                     (1.0 + epsilon_) * static_cast<double>(minimum) + 1e-9;
    run.steps.push_back(step);
    if (!step.qualified) {
      certificate_ok_ = false;
      throw ScriptViolation("scripted vertex " + std::to_string(scripted) +
                            " is not a (1+eps)-approximate minimizer at step " +
                            std::to_string(k));
    }
    const QueryResponse resp = respond(scripted);
    if (!std::holds_alternative<Direction>(resp) || std::get<Direction>(resp).neighbor != 0) {
      certificate_ok_ = false;
      throw Error("unexpected response in the scripted run");
    }
    ++run.queries;
    // The answered cone drops the queried arm and the queried vertex.
    effective_candidates -= s;
  }
  if (effective_candidates == 1) run.isolated = 0;
  return run;
}

// -------------------------------------------------------------- cycles ----

CycleAntipodalGame::CycleAntipodalGame(int n, int pair_count, std::uint64_t seed)
    : CycleAntipodalGame(n, pair_count, seed, false) {}

CycleAntipodalGame::CycleAntipodalGame(int n, int pair_count, std::uint64_t seed,
                                       bool two_direction)
    : n_(n), pair_count_(pair_count), two_direction_(two_direction), inst_([&] {
        if (n < 4 || n % 2 != 0) throw InvalidSize("cycle game needs even n >= 4");
        if (pair_count < 1 || 2 * pair_count > n / 2)
          throw InvalidSize("cycle game needs 1 <= c and 2c <= n/2");
        return generate("cycle", GenParams{n}, 0);
      }()),
      rng_(seed),
      queried_(static_cast<std::size_t>(n), 0),
      pair_blocked_(static_cast<std::size_t>(n / 2), 0),
      free_pairs_(n / 2) {}

CycleTwoDirectionGame::CycleTwoDirectionGame(int n) : CycleAntipodalGame(n, 1, 0, true) {}

QueryResponse CycleAntipodalGame::answer_at(int v) {
  const int left = (v + n_ - 1) % n_;
  const int right = (v + 1) % n_;
  if (two_direction_) {
    history_.emplace_back(v, -1);
    return TwoDirections{std::min(left, right), std::max(left, right)};
  }
  const int answer = rng_.bernoulli(0.5) ? left : right;
  history_.emplace_back(v, answer);
  return Direction{answer};
}

QueryResponse CycleAntipodalGame::respond(int v) {
  ++queries_;
  if (committed_) {
    for (std::size_t i = 0; i < targets_.size(); ++i)
      if (targets_[i] == v) return Found{static_cast<int>(i) + 1};
    return answer_at(v);
  }
  if (!queried_[static_cast<std::size_t>(v)]) {
    queried_[static_cast<std::size_t>(v)] = 1;
    const int pair = v % (n_ / 2);
    if (!pair_blocked_[static_cast<std::size_t>(pair)]) {
      pair_blocked_[static_cast<std::size_t>(pair)] = 1;
      --free_pairs_;
    }
  }
  if (free_pairs_ == pair_count_) {
    // Forced: exactly c untouched antipodal pairs remain; the targets live
    // there. Targets t_i and t_{i+c} are antipodal partners.
    committed_ = true;
    std::vector<int> firsts;
    for (int p = 0; p < n_ / 2; ++p)
      if (!pair_blocked_[static_cast<std::size_t>(p)]) firsts.push_back(p);
    targets_.assign(static_cast<std::size_t>(2 * pair_count_), -1);
    for (int i = 0; i < pair_count_; ++i) {
      targets_[static_cast<std::size_t>(i)] = firsts[static_cast<std::size_t>(i)];
      targets_[static_cast<std::size_t>(i + pair_count_)] =
          firsts[static_cast<std::size_t>(i)] + n_ / 2;
    }
  }
  if (committed_) {
    for (std::size_t i = 0; i < targets_.size(); ++i)
      if (targets_[i] == v) return Found{static_cast<int>(i) + 1};
  }
  return answer_at(v);
}

bool CycleAntipodalGame::certificate_ok() const {
  if (queries_ < bound() && !committed_) return free_pairs_ >= pair_count_ + 1;
  return true;
}

bool CycleAntipodalGame::placements_exist() const {
  if (committed_) return true;
  if (free_pairs_ < pair_count_) return false;
  // Take the first c free pairs and check every recorded answer against them.
  std::vector<int> targets;
  for (int p = 0; p < n_ / 2 && static_cast<int>(targets.size()) < 2 * pair_count_; ++p) {
    if (!pair_blocked_[static_cast<std::size_t>(p)]) {
      targets.push_back(p);
      targets.push_back(p + n_ / 2);
    }
  }
  for (const auto& [v, ans] : history_) {
    const auto check_dir = [&](int u) {
      for (int t : targets)
        if (inst_.cones().members(v, u).contains(t)) return true;
      return false;
    };
    if (ans >= 0) {
      if (!check_dir(ans)) return false;
    } else {
      // Two-direction answer: both neighbors must point at some target.
      if (!check_dir((v + n_ - 1) % n_) || !check_dir((v + 1) % n_)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- path ----

PathTwoTargetGame::PathTwoTargetGame(int n)
    : n_(n), half_(n / 2), inst_([&] {
        if (n < 4) throw InvalidSize("path game needs n >= 4");
        return generate("path", GenParams{n}, 0);
      }()),
      queried_(static_cast<std::size_t>(n), 0),
      unqueried_left_(n / 2),
      unqueried_right_(n - n / 2) {}

QueryResponse PathTwoTargetGame::respond(int v) {
  ++queries_;
  if (committed_) {
    if (v == t1_) return Found{1};
    if (v == t2_) return Found{2};
    return Direction{v < half_ ? v + 1 : v - 1};
  }
  const bool was_queried = queried_[static_cast<std::size_t>(v)];
  if (!was_queried) {
    queried_[static_cast<std::size_t>(v)] = 1;
    (v < half_ ? unqueried_left_ : unqueried_right_) -= 1;
  }
  const bool left_forced = unqueried_left_ == 0 && v < half_ && !was_queried;
  const bool right_forced = unqueried_right_ == 0 && v >= half_ && !was_queried;
  if (left_forced || right_forced) {
    committed_ = true;
    if (left_forced) {
      t1_ = v;
      for (int x = half_; x < n_; ++x)
        if (!queried_[static_cast<std::size_t>(x)]) {
          t2_ = x;
          break;
        }
      if (t2_ < 0) t2_ = n_ - 1;  // everything queried; keep the answers consistent
      return Found{1};
    }
    t2_ = v;
    for (int x = 0; x < half_; ++x)
      if (!queried_[static_cast<std::size_t>(x)]) {
        t1_ = x;
        break;
      }
    if (t1_ < 0) t1_ = 0;
    return Found{2};
  }
  return Direction{v < half_ ? v + 1 : v - 1};
}

std::vector<int> PathTwoTargetGame::committed_targets() const {
  return committed_ ? std::vector<int>{t1_, t2_} : std::vector<int>{};
}

bool PathTwoTargetGame::certificate_ok() const {
  if (committed_) return true;
  return unqueried_left_ >= 1 && unqueried_right_ >= 1;
}

bool PathTwoTargetGame::placements_exist() const {
  if (committed_) return true;
  if (unqueried_left_ == 0 || unqueried_right_ == 0) return false;
  // Any unqueried left t1 and right t2 must be consistent with the fixed
  // answer map: answers in the left half point right (toward t2), answers
  // in the right half point left (toward t1).
  for (int t1 = 0; t1 < half_; ++t1) {
    if (queried_[static_cast<std::size_t>(t1)]) continue;
    for (int t2 = half_; t2 < n_; ++t2) {
      if (queried_[static_cast<std::size_t>(t2)]) continue;
      for (int v = 0; v < n_; ++v) {
        if (!queried_[static_cast<std::size_t>(v)] || v == t1 || v == t2) continue;
        const int ans = v < half_ ? v + 1 : v - 1;
        const bool ok = inst_.cones().members(v, ans).contains(t1) ||
                        inst_.cones().members(v, ans).contains(t2);
        if (!ok) return false;
      }
    }
  }
  return true;
}

// ------------------------------------------------------------- factory ----

std::unique_ptr<AdversaryGame> make_game(const std::string& name, int n, int pair_count,
                                         double epsilon, std::uint64_t seed) {
  if (name == "grid-additive") return std::make_unique<GridAdditiveGame>(n);
  if (name == "mul-marking") return std::make_unique<MultiplicativeMarkingGame>(n, epsilon);
  if (name == "phi-trap") return std::make_unique<PhiTrapGame>(n, epsilon);
  if (name == "cycle-antipodal")
    return std::make_unique<CycleAntipodalGame>(n, pair_count, seed);
  if (name == "cycle-twodir") return std::make_unique<CycleTwoDirectionGame>(n);
  if (name == "path-two-target") return std::make_unique<PathTwoTargetGame>(n);
  throw IncompatibleConfig("unknown adversary game: " + name);
}

// --------------------------------------------------------------- probe ----

ProbeResult run_probe(AdversaryGame& game, const Instance& inst, bool check_placements) {
  const int n = inst.vertex_count();
  ProbeResult result;
  VertexSet s = VertexSet::all(n);
  VertexSet queried = VertexSet::none(n);

  const auto gamma_median_in = [&](const VertexSet& set) {
    int best = -1;
    long long best_value = 0;
    set.for_each([&](int v) {
      const long long value = gamma(inst, set, v);
      if (best < 0 || value < best_value) {
        best = v;
        best_value = value;
      }
    });
    return best;
  };

  while (result.total_queries < 4L * n) {
    if (s.empty()) {
      s = VertexSet::all(n);
      queried.for_each([&](int v) { s.erase(v); });
      if (s.empty()) break;
    }
    const int v = gamma_median_in(s);
    const QueryResponse resp = game.respond(v);
    ++result.total_queries;
    queried.insert(v);
    if (game.queries_issued() < game.bound() && !game.certificate_ok())
      result.certificate_held = false;
    if (check_placements && !game.targets_committed() && !game.placements_exist())
      result.placements_checked_ok = false;
    if (game.targets_committed() && result.queries_at_commit < 0)
      result.queries_at_commit = result.total_queries;
    if (is_found(resp)) {
      result.found = {v};
      break;
    }
    if (const auto* dir = std::get_if<Direction>(&resp)) {
      s.intersect_with(inst.cones().members(v, dir->neighbor));
    } else if (const auto* two = std::get_if<TwoDirections>(&resp)) {
      VertexSet keep = inst.cones().members(v, two->first);
      keep.unite_with(inst.cones().members(v, two->second));
      s.intersect_with(keep);
    }
    s.erase(v);
  }
  return result;
}

}  // namespace graphsearch
