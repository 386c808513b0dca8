#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "graphsearch/instance.hpp"
#include "graphsearch/oracle.hpp"
#include "graphsearch/rng.hpp"

namespace graphsearch {

// A lower-bound construction packaged as a scripted responder with lazy
// target placement. At every point before commitment, at least one target
// placement is consistent with all answers given so far; commitment happens
// at the first Found-forcing event.
class AdversaryGame {
 public:
  virtual ~AdversaryGame() = default;

  virtual const Graph& graph() const = 0;
  virtual QueryResponse respond(int v) = 0;

  // Minimum number of queries the construction claims any (deterministic)
  // algorithm needs.
  virtual long bound() const = 0;

  long queries_issued() const { return queries_; }
  virtual bool targets_committed() const = 0;
  virtual std::vector<int> committed_targets() const = 0;

  // Cheap construction-specific certificate, checked after every answer.
  virtual bool certificate_ok() const = 0;
  // Brute-force search for a consistent placement of the remaining targets.
  virtual bool placements_exist() const = 0;

  // Precomputed instance for driving searchers, when the game keeps one.
  virtual const Instance* probe_instance() const { return nullptr; }

  virtual std::string name() const = 0;

 protected:
  long queries_ = 0;
};

// 2 x n/2 grid with cell diagonals; every answer points to the opposite-row
// vertex and is valid for a 1-additive approximation query whatever the
// (unqueried) target is. bound() = n - 1.
class GridAdditiveGame : public AdversaryGame {
 public:
  explicit GridAdditiveGame(int n);

  const Graph& graph() const override { return inst_.graph(); }
  QueryResponse respond(int v) override;
  long bound() const override { return n_ - 1; }
  bool targets_committed() const override { return committed_; }
  std::vector<int> committed_targets() const override;
  bool certificate_ok() const override;
  bool placements_exist() const override { return !consistent_placements().empty(); }
  std::string name() const override { return "grid-additive"; }

  // Unqueried vertices t for which every past answer is 1-additive valid.
  std::vector<int> consistent_placements() const;
  int answered_for(int v) const;  // the fixed answer map, for emptiness checks
  int queried_count() const { return queried_count_; }
  const Instance& instance() const { return inst_; }
  const Instance* probe_instance() const override { return &inst_; }

 private:
  int n_;
  Instance inst_;
  std::vector<char> queried_;
  int queried_count_ = 0;
  bool committed_ = false;
  int target_ = -1;
  std::vector<std::pair<int, int>> history_;  // (queried vertex, answer)
};

// Same grid; queries mark every column within distance 1/eps and the answer
// stays valid for every (1+eps)-multiplicative approximation query aimed at
// an unmarked target. bound() = ceil(n * eps / 4).
class MultiplicativeMarkingGame : public AdversaryGame {
 public:
  MultiplicativeMarkingGame(int n, double epsilon);

  const Graph& graph() const override { return inst_.graph(); }
  QueryResponse respond(int v) override;
  long bound() const override;
  bool targets_committed() const override { return committed_; }
  std::vector<int> committed_targets() const override;
  bool certificate_ok() const override;
  bool placements_exist() const override;
  std::string name() const override { return "mul-marking"; }

  int unmarked_column_count() const;
  long last_query_new_columns() const { return last_new_columns_; }
  long max_new_columns_per_query() const { return max_new_columns_; }
  double epsilon() const { return epsilon_; }
  const Instance& instance() const { return inst_; }
  const Instance* probe_instance() const override { return &inst_; }

 private:
  int column_of(int v) const { return v % (n_ / 2); }

  int n_;
  double epsilon_;
  Instance inst_;
  std::vector<char> column_marked_;
  bool committed_ = false;
  int target_ = -1;
  long last_new_columns_ = 0;
  long max_new_columns_ = 0;
  std::vector<std::pair<int, int>> history_;  // pre-commitment answers
};

// Star of sqrt(n) paths of length sqrt(n); the target sits at the center
// and the scripted median sequence visits a fresh arm's first vertex each
// step, each one a qualifying (1+eps)-approximate minimizer of the
// distance-sum potential over the current pruned set. Forces sqrt(n)
// queries. No distance table is materialized; the construction's distances
// are evaluated structurally, exactly, in integer arithmetic.
class PhiTrapGame : public AdversaryGame {
 public:
  PhiTrapGame(int n, double epsilon);

  const Graph& graph() const override { return graph_; }
  QueryResponse respond(int v) override;
  long bound() const override { return side_; }
  bool targets_committed() const override { return true; }  // fixed at the center
  std::vector<int> committed_targets() const override { return {0}; }
  bool certificate_ok() const override { return certificate_ok_; }
  bool placements_exist() const override { return true; }
  std::string name() const override { return "phi-trap"; }

  // The scripted approximate-median sequence: first vertices of arms 1..s.
  std::vector<int> scripted_policy() const;

  struct ScriptedStep {
    int pruned_arms;        // k
    int scripted_vertex;    // the arm-1 vertex queried at this step
    long long phi_scripted;
    long long phi_center;
    long long phi_minimum;  // true minimum over all vertices
    int minimizer;
    bool qualified;
  };
  struct ScriptedRun {
    std::vector<ScriptedStep> steps;
    long queries = 0;
    int isolated = -1;  // final effective candidate
  };

  // Executes the construction's own search loop; throws ScriptViolation
  // when a scripted vertex fails the (1+eps) qualification.
  ScriptedRun run_scripted();

  // Exact distance-sum over the pruned set with k arms reduced to their
  // first vertex, for an arbitrary query vertex.
  long long phi_pruned(int v, int k) const;
  // Closed forms for the center and for a fresh arm's first vertex.
  static long long phi_center_closed(int n, int k);
  static long long phi_arm_closed(int n, int k);

  int side() const { return side_; }

 private:
  int arm_of(int v) const { return (v - 1) / side_ + 1; }
  int pos_of(int v) const { return (v - 1) % side_ + 1; }

  int n_;
  int side_;
  double epsilon_;
  Graph graph_;
  bool certificate_ok_ = true;
};

// Unweighted even cycle with c target pairs on antipodal vertices and
// unbiased answers; any deterministic algorithm needs n/2 - c queries.
class CycleAntipodalGame : public AdversaryGame {
 public:
  CycleAntipodalGame(int n, int pair_count, std::uint64_t seed);

  const Graph& graph() const override { return inst_.graph(); }
  QueryResponse respond(int v) override;
  long bound() const override { return n_ / 2 - pair_count_; }
  bool targets_committed() const override { return committed_; }
  std::vector<int> committed_targets() const override { return targets_; }
  bool certificate_ok() const override;
  bool placements_exist() const override;
  std::string name() const override { return "cycle-antipodal"; }

  int free_pair_count() const { return free_pairs_; }
  const Instance& instance() const { return inst_; }
  const Instance* probe_instance() const override { return &inst_; }

 protected:
  CycleAntipodalGame(int n, int pair_count, std::uint64_t seed, bool two_direction);

  QueryResponse answer_at(int v);

  int n_;
  int pair_count_;
  bool two_direction_;
  Instance inst_;
  Rng rng_;
  std::vector<char> queried_;
  std::vector<char> pair_blocked_;  // pair j = {v_j, v_{j+n/2}}
  int free_pairs_;
  bool committed_ = false;
  std::vector<int> targets_;
  std::vector<std::pair<int, int>> history_;  // (vertex, encoded answer)
};

// Two-direction variant: every answer is the unordered neighbor pair, one
// antipodal target pair, bound n/2 - 1.
class CycleTwoDirectionGame : public CycleAntipodalGame {
 public:
  explicit CycleTwoDirectionGame(int n);
  std::string name() const override { return "cycle-twodir"; }
};

// Path with one target hidden in each half; queries in the left half point
// right and vice versa. bound() = floor(n/2) queries to force one target.
class PathTwoTargetGame : public AdversaryGame {
 public:
  explicit PathTwoTargetGame(int n);

  const Graph& graph() const override { return inst_.graph(); }
  QueryResponse respond(int v) override;
  long bound() const override { return half_; }
  bool targets_committed() const override { return committed_; }
  std::vector<int> committed_targets() const override;
  bool certificate_ok() const override;
  bool placements_exist() const override;
  std::string name() const override { return "path-two-target"; }

  const Instance& instance() const { return inst_; }
  const Instance* probe_instance() const override { return &inst_; }

 private:
  int n_;
  int half_;  // left half is ids 0..half-1
  Instance inst_;
  std::vector<char> queried_;
  int unqueried_left_;
  int unqueried_right_;
  bool committed_ = false;
  int t1_ = -1;
  int t2_ = -1;
};

std::unique_ptr<AdversaryGame> make_game(const std::string& name, int n, int pair_count,
                                         double epsilon, std::uint64_t seed);

// Deterministic restarting probe: maintains a candidate set, queries its
// gamma-median (restricted to the set, smallest id on ties), intersects
// with the answered cone(s), and resets to the unqueried vertices whenever
// the set empties. Used to drive the lower-bound games.
struct ProbeResult {
  long total_queries = 0;
  long queries_at_commit = -1;  // query count when the game committed targets
  std::vector<int> found;
  bool certificate_held = true;
  bool placements_checked_ok = true;  // online brute-force checks, when enabled
};

ProbeResult run_probe(AdversaryGame& game, const Instance& inst, bool check_placements);

}  // namespace graphsearch
