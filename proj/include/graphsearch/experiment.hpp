#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "graphsearch/generators.hpp"
#include "graphsearch/oracle.hpp"
#include "graphsearch/searchers.hpp"
#include "graphsearch/transcript.hpp"

namespace graphsearch {

struct OracleSpec {
  int target_count = 1;
  double p1 = 1.0;  // probability of the first target when there are two
  TiePolicy ties = TiePolicy::Equiprobable;
};

// Searchers: gamma-bs, noisy-first, tree-two-target, alg1-second,
// alg2-dir-dist, alg3-vertex-edge, restricted-set; adversary drivers:
// gamma-probe (grid/cycle/path games), scripted-phi (phi-trap).
struct ExperimentConfig {
  std::string generator = "path";
  GenParams gen_params;
  std::string searcher = "gamma-bs";
  SearchParams search_params;
  OracleSpec oracle;
  std::string game;  // empty for oracle experiments
  int game_pairs = 1;
  double game_epsilon = 0.1;
  int trials = 1;
  std::uint64_t master_seed = 0;
};

struct ExperimentRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  std::string searcher;
  int n = 0;
  double p1 = 1.0;
  double epsilon = 0.0;
  double rho = 1.0;
  long queries_total = 0;
  std::array<long, kQueryTypeCount> by_type{};
  bool success = false;
  std::vector<int> found;
  long bound_cap = 0;
  bool bound_ok = false;
  double millis = 0.0;
};

struct ExperimentSummary {
  int trials = 0;
  double success_rate = 0.0;
  long queries_p50 = 0;
  long queries_p90 = 0;
  long queries_max = 0;
  bool all_bounds_ok = true;
};

// Validates searcher/oracle compatibility, then runs every trial with a
// seed derived from (master seed, trial index). Deterministic: the same
// config produces the same records.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg);

ExperimentSummary summarize(const std::vector<ExperimentRecord>& records);

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
void write_json(std::ostream& out, const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> read_records(std::istream& in);
std::vector<ExperimentRecord> read_records_file(const std::string& path);

struct BoundSpec {
  enum class Kind { Cap, Floor, RecordCap } kind = Kind::RecordCap;
  long value = 0;
};

struct VerifyReport {
  bool pass = true;
  int checked = 0;
  int violations = 0;
  std::string text;
};

// Asserts per-trial caps (upper bounds) or per-run floors (adversary
// games); RecordCap checks each record against its own stored cap.
VerifyReport verify_bounds(const std::vector<ExperimentRecord>& records,
                           const BoundSpec& spec);

}  // namespace graphsearch
