#include "graphsearch/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <set>
#include <sstream>

#include <json.hpp>

#include "graphsearch/adversaries.hpp"
#include "graphsearch/errors.hpp"
#include "graphsearch/instance.hpp"

namespace graphsearch {

namespace {

constexpr std::uint64_t kGraphStream = 1;
constexpr std::uint64_t kTargetStream = 2;
constexpr std::uint64_t kOracleStream = 3;
constexpr std::uint64_t kSearchStream = 4;
constexpr std::uint64_t kEdgeOracleStream = 5;

bool is_game_driver(const std::string& searcher) {
  return searcher == "gamma-probe" || searcher == "scripted-phi";
}

int required_targets(const std::string& searcher, const OracleSpec& spec) {
  if (searcher == "gamma-bs") return 1;
  if (searcher == "noisy-first") return spec.p1 >= 1.0 ? 1 : 2;
  if (searcher == "tree-two-target" || searcher == "alg1-second" ||
      searcher == "alg2-dir-dist" || searcher == "alg3-vertex-edge")
    return 2;
  if (searcher == "restricted-set") return spec.target_count;
  throw IncompatibleConfig("unknown searcher: " + searcher);
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.trials < 0) throw IncompatibleConfig("trial count must be nonnegative");
  if (!cfg.game.empty()) {
    if (cfg.searcher == "gamma-probe") {
      if (cfg.game == "phi-trap")
        throw IncompatibleConfig("phi-trap pairs with the scripted-phi driver");
      return;
    }
    if (cfg.searcher == "scripted-phi") {
      if (cfg.game != "phi-trap")
        throw IncompatibleConfig("scripted-phi drives only the phi-trap game");
      return;
    }
    throw IncompatibleConfig("adversary games pair with gamma-probe or scripted-phi");
  }
  if (is_game_driver(cfg.searcher))
    throw IncompatibleConfig("driver searcher " + cfg.searcher + " needs a --game");
  const int t = required_targets(cfg.searcher, cfg.oracle);
  if (cfg.searcher == "restricted-set" && cfg.oracle.target_count < 1)
    throw IncompatibleConfig("restricted-set search needs at least one target");
  if (t == 2 && !(cfg.oracle.p1 > 0.0 && cfg.oracle.p1 < 1.0) &&
      cfg.searcher != "noisy-first")
    throw IncompatibleConfig("two-target searchers need 0 < p1 < 1");
}

std::vector<int> pick_targets(Rng& rng, int n, int count) {
  std::set<int> chosen;
  while (static_cast<int>(chosen.size()) < count) chosen.insert(rng.next_int(n));
  return {chosen.begin(), chosen.end()};
}

ExperimentRecord run_oracle_trial(const ExperimentConfig& cfg, int trial) {
  ExperimentRecord rec;
  rec.trial = trial;
  rec.seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(trial));
  rec.searcher = cfg.searcher;
  rec.p1 = cfg.oracle.p1;
  rec.epsilon = cfg.search_params.epsilon;
  rec.rho = cfg.search_params.rho;

  const auto start = std::chrono::steady_clock::now();
  Instance inst(generate(cfg.generator, cfg.gen_params, derive_seed(rec.seed, kGraphStream)));
  const int n = inst.vertex_count();
  rec.n = n;

  Rng target_rng(derive_seed(rec.seed, kTargetStream));
  const int tcount = required_targets(cfg.searcher, cfg.oracle);
  std::vector<int> targets = pick_targets(target_rng, n, tcount);
  // Randomize which vertex plays the role of t1.
  if (tcount == 2 && target_rng.bernoulli(0.5)) std::swap(targets[0], targets[1]);

  OracleConfig ocfg;
  ocfg.targets = targets;
  if (tcount == 1) {
    ocfg.probabilities = {1.0};
  } else if (tcount == 2) {
    ocfg.probabilities = {cfg.oracle.p1, 1.0 - cfg.oracle.p1};
  } else {
    ocfg.probabilities.assign(static_cast<std::size_t>(tcount), 1.0 / tcount);
  }
  ocfg.ties = cfg.oracle.ties;
  ocfg.seed = derive_seed(rec.seed, kOracleStream);
  Oracle oracle(inst, ocfg);

  SearchParams params = cfg.search_params;
  params.seed = derive_seed(rec.seed, kSearchStream);
  params.detailed_transcript = false;

  try {
    SearchResult result{{}, Transcript(false)};
    if (cfg.searcher == "gamma-bs") {
      result = gamma_binary_search(inst, oracle, params);
      rec.success = result.found == std::vector<int>{targets[0]};
    } else if (cfg.searcher == "noisy-first") {
      result = noisy_first_target(inst, oracle, params);
      rec.success = result.found == std::vector<int>{targets[0]};
    } else if (cfg.searcher == "tree-two-target") {
      result = tree_two_target_search(inst, oracle, params);
      std::set<int> got(result.found.begin(), result.found.end());
      rec.success = got == std::set<int>(targets.begin(), targets.end());
    } else if (cfg.searcher == "alg1-second") {
      result = algorithm1_second_target(inst, targets[0], oracle, params);
      rec.success = result.found == std::vector<int>{targets[1]};
    } else if (cfg.searcher == "alg2-dir-dist") {
      result = algorithm2_direction_distance(inst, targets[0], oracle, params);
      rec.success = result.found == std::vector<int>{targets[1]};
    } else if (cfg.searcher == "alg3-vertex-edge") {
      OracleConfig edge_cfg = ocfg;
      edge_cfg.seed = derive_seed(rec.seed, kEdgeOracleStream);
      Oracle edge_oracle(inst, edge_cfg);
      result = algorithm3_vertex_edge(inst, targets[0], oracle, edge_oracle, params);
      rec.success = result.found == std::vector<int>{targets[1]};
    } else if (cfg.searcher == "restricted-set") {
      result = restricted_set_search(inst, oracle, tcount, params);
      std::set<int> got(result.found.begin(), result.found.end());
      rec.success = got == std::set<int>(targets.begin(), targets.end());
    }
    for (int i = 0; i < kQueryTypeCount; ++i)
      rec.by_type[static_cast<std::size_t>(i)] =
          result.transcript.count(static_cast<QueryType>(i));
    rec.queries_total = result.transcript.total();
    rec.found = result.found;
    rec.bound_cap = result.transcript.bound_cap;
    rec.bound_ok = result.transcript.bound_ok && result.transcript.shrinkage_ok;
  } catch (const Error&) {
    rec.success = false;
    rec.queries_total = oracle.queries_issued();
    rec.bound_ok = false;
  }
  rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
                   .count();
  return rec;
}

ExperimentRecord run_game_trial(const ExperimentConfig& cfg, int trial) {
  ExperimentRecord rec;
  rec.trial = trial;
  rec.seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(trial));
  rec.searcher = cfg.searcher + ":" + cfg.game;
  rec.epsilon = cfg.game_epsilon;
  rec.rho = cfg.search_params.rho;

  const auto start = std::chrono::steady_clock::now();
  auto game = make_game(cfg.game, cfg.gen_params.n, cfg.game_pairs, cfg.game_epsilon,
                        derive_seed(rec.seed, kOracleStream));
  rec.n = game->graph().vertex_count();

  if (cfg.searcher == "scripted-phi") {
    auto* trap = dynamic_cast<PhiTrapGame*>(game.get());
    const auto run = trap->run_scripted();
    rec.queries_total = run.queries;
    rec.by_type[static_cast<std::size_t>(QueryType::Direction)] = run.queries;
    rec.success = run.isolated == 0;
    rec.bound_cap = trap->bound();
    rec.bound_ok = run.queries >= trap->bound();
    rec.found = {run.isolated};
  } else {
    const bool small = rec.n <= 200;
    const Instance* inst = game->probe_instance();
    if (inst == nullptr) throw IncompatibleConfig("game does not support the probe driver");
    const auto probe = run_probe(*game, *inst, small);
    rec.queries_total = probe.total_queries;
    rec.by_type[static_cast<std::size_t>(QueryType::Direction)] = probe.total_queries;
    rec.found = probe.found;
    rec.success = !probe.found.empty() && probe.certificate_held &&
                  probe.placements_checked_ok;
    rec.bound_cap = game->bound();
    rec.bound_ok = probe.queries_at_commit < 0 || probe.queries_at_commit >= game->bound();
  }
  rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
                   .count();
  return rec;
}

}  // namespace

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  std::vector<ExperimentRecord> records;
  records.reserve(static_cast<std::size_t>(cfg.trials));
  for (int trial = 0; trial < cfg.trials; ++trial) {
    records.push_back(cfg.game.empty() ? run_oracle_trial(cfg, trial)
                                       : run_game_trial(cfg, trial));
  }
  return records;
}

ExperimentSummary summarize(const std::vector<ExperimentRecord>& records) {
  ExperimentSummary s;
  s.trials = static_cast<int>(records.size());
  if (records.empty()) return s;
  std::vector<long> queries;
  int successes = 0;
  for (const auto& r : records) {
    queries.push_back(r.queries_total);
    successes += r.success ? 1 : 0;
    s.all_bounds_ok = s.all_bounds_ok && r.bound_ok;
  }
  std::sort(queries.begin(), queries.end());
  s.success_rate = static_cast<double>(successes) / static_cast<double>(records.size());
  s.queries_p50 = queries[queries.size() / 2];
  s.queries_p90 = queries[queries.size() * 9 / 10];
  s.queries_max = queries.back();
  return s;
}

namespace {

std::string join_by_type(const std::array<long, kQueryTypeCount>& by_type) {
  std::ostringstream out;
  for (int i = 0; i < kQueryTypeCount; ++i) {
    if (i > 0) out << ';';
    out << query_type_name(static_cast<QueryType>(i)) << '=' << by_type[static_cast<std::size_t>(i)];
  }
  return out.str();
}

std::string join_found(const std::vector<int>& found) {
  std::ostringstream out;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (i > 0) out << ';';
    out << found[i];
  }
  return out.str();
}

nlohmann::json record_to_json(const ExperimentRecord& r) {
  nlohmann::json by_type = nlohmann::json::object();
  for (int i = 0; i < kQueryTypeCount; ++i)
    by_type[query_type_name(static_cast<QueryType>(i))] =
        r.by_type[static_cast<std::size_t>(i)];
  return nlohmann::json{{"trial", r.trial},
                        {"seed", r.seed},
                        {"searcher", r.searcher},
                        {"n", r.n},
                        {"p1", r.p1},
                        {"epsilon", r.epsilon},
                        {"rho", r.rho},
                        {"queries_total", r.queries_total},
                        {"queries_by_type", by_type},
                        {"success", r.success},
                        {"found", r.found},
                        {"bound_cap", r.bound_cap},
                        {"bound_ok", r.bound_ok},
                        {"millis", r.millis}};
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << "trial,seed,searcher,n,p1,epsilon,rho,queries_total,queries_by_type,success,found,"
         "bound_cap,bound_ok,millis\n";
  for (const auto& r : records) {
    out << r.trial << ',' << r.seed << ',' << r.searcher << ',' << r.n << ',' << r.p1 << ','
        << r.epsilon << ',' << r.rho << ',' << r.queries_total << ',' << join_by_type(r.by_type)
        << ',' << (r.success ? 1 : 0) << ',' << join_found(r.found) << ',' << r.bound_cap << ','
        << (r.bound_ok ? 1 : 0) << ',' << std::fixed << std::setprecision(3) << r.millis
        << std::defaultfloat << '\n';
  }
  const auto s = summarize(records);
  out << "# summary trials=" << s.trials << " success_rate=" << s.success_rate
      << " queries_p50=" << s.queries_p50 << " queries_p90=" << s.queries_p90
      << " queries_max=" << s.queries_max << " all_bounds_ok=" << (s.all_bounds_ok ? 1 : 0)
      << '\n';
}

void write_json(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  nlohmann::json array = nlohmann::json::array();
  for (const auto& r : records) array.push_back(record_to_json(r));
  const auto s = summarize(records);
  nlohmann::json doc{{"records", array},
                     {"summary",
                      {{"trials", s.trials},
                       {"success_rate", s.success_rate},
                       {"queries_p50", s.queries_p50},
                       {"queries_p90", s.queries_p90},
                       {"queries_max", s.queries_max},
                       {"all_bounds_ok", s.all_bounds_ok}}}};
  out << doc.dump(2) << '\n';
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

ExperimentRecord record_from_json(const nlohmann::json& j) {
  ExperimentRecord r;
  r.trial = j.at("trial").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.searcher = j.at("searcher").get<std::string>();
  r.n = j.at("n").get<int>();
  r.p1 = j.at("p1").get<double>();
  r.epsilon = j.at("epsilon").get<double>();
  r.rho = j.at("rho").get<double>();
  r.queries_total = j.at("queries_total").get<long>();
  const auto& by_type = j.at("queries_by_type");
  for (int i = 0; i < kQueryTypeCount; ++i) {
    const auto* name = query_type_name(static_cast<QueryType>(i));
    if (by_type.contains(name)) r.by_type[static_cast<std::size_t>(i)] = by_type[name].get<long>();
  }
  r.success = j.at("success").get<bool>();
  r.found = j.at("found").get<std::vector<int>>();
  r.bound_cap = j.at("bound_cap").get<long>();
  r.bound_ok = j.at("bound_ok").get<bool>();
  r.millis = j.at("millis").get<double>();
  return r;
}

}  // namespace

std::vector<ExperimentRecord> read_records(std::istream& in) {
  std::string first;
  while (std::getline(in, first)) {
    if (!first.empty()) break;
  }
  std::vector<ExperimentRecord> records;
  if (first.empty()) return records;
  if (first[0] == '{') {  // JSON document
    std::ostringstream rest;
    rest << first << in.rdbuf();
    const auto doc = nlohmann::json::parse(rest.str());
    for (const auto& j : doc.at("records")) records.push_back(record_from_json(j));
    return records;
  }
  // CSV: the first line is the header.
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto parts = split(line, ',');
    if (parts.size() != 14) throw Error("malformed record line: " + line);
    ExperimentRecord r;
    r.trial = std::stoi(parts[0]);
    r.seed = std::stoull(parts[1]);
    r.searcher = parts[2];
    r.n = std::stoi(parts[3]);
    r.p1 = std::stod(parts[4]);
    r.epsilon = std::stod(parts[5]);
    r.rho = std::stod(parts[6]);
    r.queries_total = std::stol(parts[7]);
    for (const auto& pair : split(parts[8], ';')) {
      const auto eq = pair.find('=');
      if (eq == std::string::npos) continue;
      const std::string name = pair.substr(0, eq);
      const long count = std::stol(pair.substr(eq + 1));
      for (int i = 0; i < kQueryTypeCount; ++i)
        if (name == query_type_name(static_cast<QueryType>(i)))
          r.by_type[static_cast<std::size_t>(i)] = count;
    }
    r.success = parts[9] == "1";
    if (!parts[10].empty())
      for (const auto& tok : split(parts[10], ';')) r.found.push_back(std::stoi(tok));
    r.bound_cap = std::stol(parts[11]);
    r.bound_ok = parts[12] == "1";
    r.millis = std::stod(parts[13]);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<ExperimentRecord> read_records_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open records file: " + path);
  return read_records(in);
}

VerifyReport verify_bounds(const std::vector<ExperimentRecord>& records,
                           const BoundSpec& spec) {
  VerifyReport report;
  std::ostringstream text;
  if (records.empty()) {
    report.pass = true;
    text << "WARNING: no records; vacuous pass\n";
    report.text = text.str();
    return report;
  }
  for (const auto& r : records) {
    ++report.checked;
    bool ok = true;
    long limit = spec.value;
    switch (spec.kind) {
      case BoundSpec::Kind::Cap:
        ok = r.queries_total <= limit;
        break;
      case BoundSpec::Kind::Floor:
        ok = r.queries_total >= limit;
        break;
      case BoundSpec::Kind::RecordCap:
        limit = r.bound_cap;
        ok = r.queries_total <= limit && r.bound_ok;
        break;
    }
    if (!ok) {
      ++report.violations;
      text << "VIOLATION trial=" << r.trial << " queries=" << r.queries_total
           << (spec.kind == BoundSpec::Kind::Floor ? " < floor=" : " > cap=") << limit << '\n';
    }
  }
  report.pass = report.violations == 0;
  text << (report.pass ? "PASS" : "FAIL") << ": " << report.checked << " records, "
       << report.violations << " violations\n";
  report.text = text.str();
  return report;
}

}  // namespace graphsearch
