#include "graphsearch/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "graphsearch/adversaries.hpp"
#include "graphsearch/errors.hpp"
#include "graphsearch/experiment.hpp"
#include "graphsearch/generators.hpp"
#include "graphsearch/instance.hpp"
#include "graphsearch/searchers.hpp"

namespace graphsearch {

namespace {

struct CliOptions {
  std::string kind = "path";
  int n = 0;
  int extra_edges = -1;
  int max_degree = 0;
  int weight_max = 9;
  std::uint64_t seed = 0;
  std::string graph_file;
  std::string out_file;
  std::string searcher = "gamma-bs";
  std::string game;
  std::string targets;
  std::string format = "csv";
  std::string verify_in;
  long cap = -1;
  long floor = -1;
  bool record_caps = false;
  double epsilon = 0.0;
  double p1 = 0.75;
  double rho = 1.0;
  int trials = 1;
  int pairs = 1;
  int target_count = 1;
  long budget = 100'000'000;
};

std::unique_ptr<std::ofstream> open_out(const std::string& path, std::ostream*& out) {
  if (path.empty()) {
    out = &std::cout;
    return nullptr;
  }
  auto file = std::make_unique<std::ofstream>(path);
  if (!*file) throw Error("cannot open output file: " + path);
  out = file.get();
  return file;
}

int cmd_gen(const CliOptions& opt) {
  GenParams params{opt.n, opt.extra_edges, opt.max_degree, false, opt.weight_max};
  const Graph g = generate(opt.kind, params, opt.seed);
  std::ostream* out = nullptr;
  auto holder = open_out(opt.out_file, out);
  g.serialize(*out);
  return 0;
}

std::vector<int> parse_targets(const Graph& g, const std::string& spec) {
  std::vector<int> out;
  std::istringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    const int v = g.vertex_by_label(token);
    if (v < 0) throw IncompatibleConfig("unknown vertex label: " + token);
    out.push_back(v);
  }
  if (out.empty()) throw IncompatibleConfig("no targets given");
  return out;
}

int cmd_search(const CliOptions& opt) {
  Graph g = opt.graph_file.empty()
                ? generate(opt.kind, GenParams{opt.n, opt.extra_edges, opt.max_degree},
                           derive_seed(opt.seed, 1))
                : Graph::load_file(opt.graph_file);
  Instance inst(std::move(g));
  const int n = inst.vertex_count();

  std::vector<int> targets;
  if (!opt.targets.empty()) {
    targets = parse_targets(inst.graph(), opt.targets);
  } else {
    Rng rng(derive_seed(opt.seed, 2));
    std::set<int> chosen;
    const int need = opt.searcher == "gamma-bs" || opt.searcher == "noisy-first"
                         ? (opt.searcher == "noisy-first" && opt.p1 < 1.0 ? 2 : 1)
                         : (opt.searcher == "restricted-set" ? opt.target_count : 2);
    while (static_cast<int>(chosen.size()) < need) chosen.insert(rng.next_int(n));
    targets.assign(chosen.begin(), chosen.end());
  }

  OracleConfig ocfg;
  ocfg.targets = targets;
  if (targets.size() == 1)
    ocfg.probabilities = {1.0};
  else if (targets.size() == 2)
    ocfg.probabilities = {opt.p1, 1.0 - opt.p1};
  else
    ocfg.probabilities.assign(targets.size(), 1.0 / static_cast<double>(targets.size()));
  ocfg.seed = derive_seed(opt.seed, 3);
  Oracle oracle(inst, ocfg);

  SearchParams params;
  params.epsilon = opt.epsilon;
  params.rho = opt.rho;
  params.seed = derive_seed(opt.seed, 4);
  params.budget = opt.budget;

  SearchResult result{{}, Transcript(true)};
  if (opt.searcher == "gamma-bs") {
    result = gamma_binary_search(inst, oracle, params);
  } else if (opt.searcher == "noisy-first") {
    result = noisy_first_target(inst, oracle, params);
  } else if (opt.searcher == "tree-two-target") {
    result = tree_two_target_search(inst, oracle, params);
  } else if (opt.searcher == "alg1-second") {
    result = algorithm1_second_target(inst, targets[0], oracle, params);
  } else if (opt.searcher == "alg2-dir-dist") {
    result = algorithm2_direction_distance(inst, targets[0], oracle, params);
  } else if (opt.searcher == "alg3-vertex-edge") {
    OracleConfig edge_cfg = ocfg;
    edge_cfg.seed = derive_seed(opt.seed, 5);
    Oracle edge_oracle(inst, edge_cfg);
    result = algorithm3_vertex_edge(inst, targets[0], oracle, edge_oracle, params);
  } else if (opt.searcher == "restricted-set") {
    result = restricted_set_search(inst, oracle, static_cast<int>(targets.size()), params);
  } else {
    throw IncompatibleConfig("unknown searcher: " + opt.searcher);
  }

  std::ostream* out = nullptr;
  auto holder = open_out(opt.out_file, out);
  *out << result.transcript.to_json() << '\n';
  *out << "# found:";
  for (int v : result.found) *out << ' ' << inst.graph().label(v);
  *out << "  queries: " << result.transcript.total()
       << "  cap: " << result.transcript.bound_cap << '\n';
  return 0;
}

int cmd_adversary(const CliOptions& opt) {
  auto game = make_game(opt.game, opt.n, opt.pairs, opt.epsilon, opt.seed);
  std::ostream* out = nullptr;
  auto holder = open_out(opt.out_file, out);
  if (opt.game == "phi-trap") {
    auto* trap = dynamic_cast<PhiTrapGame*>(game.get());
    const auto run = trap->run_scripted();
    *out << "game: " << game->name() << "  n: " << opt.n << "  bound: " << game->bound()
         << "  forced-queries: " << run.queries
         << "  isolated: " << (run.isolated == 0 ? "center" : "?") << '\n';
    return 0;
  }
  const Instance* inst = game->probe_instance();
  const auto probe = run_probe(*game, *inst, game->graph().vertex_count() <= 200);
  *out << "game: " << game->name() << "  n: " << game->graph().vertex_count()
       << "  bound: " << game->bound() << "  queries: " << probe.total_queries
       << "  queries-at-commit: " << probe.queries_at_commit
       << "  certificate: " << (probe.certificate_held ? "ok" : "VIOLATED") << '\n';
  return probe.certificate_held &&
                 (probe.queries_at_commit < 0 || probe.queries_at_commit >= game->bound())
             ? 0
             : 1;
}

int cmd_experiment(const CliOptions& opt) {
  ExperimentConfig cfg;
  cfg.generator = opt.kind;
  cfg.gen_params = GenParams{opt.n, opt.extra_edges, opt.max_degree};
  cfg.searcher = opt.game.empty()
                     ? opt.searcher
                     : (opt.game == "phi-trap" ? "scripted-phi" : "gamma-probe");
  if (!opt.searcher.empty() && (opt.searcher == "gamma-probe" || opt.searcher == "scripted-phi"))
    cfg.searcher = opt.searcher;
  cfg.search_params.epsilon = opt.epsilon;
  cfg.search_params.rho = opt.rho;
  cfg.search_params.budget = opt.budget;
  cfg.oracle.p1 = opt.p1;
  cfg.oracle.target_count = opt.target_count;
  cfg.game = opt.game;
  cfg.game_pairs = opt.pairs;
  cfg.game_epsilon = opt.epsilon;
  cfg.trials = opt.trials;
  cfg.master_seed = opt.seed;
  const auto records = run_experiment(cfg);
  std::ostream* out = nullptr;
  auto holder = open_out(opt.out_file, out);
  if (opt.format == "json")
    write_json(*out, records);
  else
    write_csv(*out, records);
  return 0;
}

int cmd_verify(const CliOptions& opt) {
  const auto records = read_records_file(opt.verify_in);
  BoundSpec spec;
  if (opt.cap >= 0) {
    spec.kind = BoundSpec::Kind::Cap;
    spec.value = opt.cap;
  } else if (opt.floor >= 0) {
    spec.kind = BoundSpec::Kind::Floor;
    spec.value = opt.floor;
  } else {
    spec.kind = BoundSpec::Kind::RecordCap;
  }
  const auto report = verify_bounds(records, spec);
  std::cout << report.text;
  return report.pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"graph target-search library and simulation harness"};
  app.require_subcommand(1);
  CliOptions opt;

  auto* gen = app.add_subcommand("gen", "generate a graph and write its edge list");
  gen->add_option("--kind", opt.kind, "graph kind")->required();
  gen->add_option("--n", opt.n, "size parameter")->required();
  gen->add_option("--m", opt.extra_edges, "extra edges (random-connected)");
  gen->add_option("--max-degree", opt.max_degree, "degree cap (random kinds)");
  gen->add_option("--wmax", opt.weight_max, "max integer weight for *-weighted kinds");
  gen->add_option("--seed", opt.seed, "generator seed");
  gen->add_option("--out", opt.out_file, "output file (default stdout)");

  auto* search = app.add_subcommand("search", "run one search and print the transcript");
  search->add_option("--graph", opt.graph_file, "edge-list file");
  search->add_option("--kind", opt.kind, "generate this kind instead of --graph");
  search->add_option("--n", opt.n, "size for --kind");
  search->add_option("--m", opt.extra_edges, "extra edges (random-connected)");
  search->add_option("--max-degree", opt.max_degree, "degree cap (random kinds)");
  search->add_option("--searcher", opt.searcher, "searcher name")->required();
  search->add_option("--seed", opt.seed, "master seed");
  search->add_option("--epsilon", opt.epsilon, "approximate-median slack");
  search->add_option("--p1", opt.p1, "first-target probability");
  search->add_option("--rho", opt.rho, "repetition multiplier");
  search->add_option("--targets", opt.targets, "comma-separated vertex labels");
  search->add_option("--target-count", opt.target_count, "random targets (restricted-set)");
  search->add_option("--budget", opt.budget, "query budget");
  search->add_option("--out", opt.out_file, "output file (default stdout)");

  auto* adv = app.add_subcommand("adversary", "run a lower-bound game against its driver");
  adv->add_option("--game", opt.game, "game name")->required();
  adv->add_option("--n", opt.n, "size parameter")->required();
  adv->add_option("--epsilon", opt.epsilon, "epsilon (phi-trap, mul-marking)");
  adv->add_option("--c", opt.pairs, "antipodal pair count (cycle-antipodal)");
  adv->add_option("--seed", opt.seed, "answer-tape seed");
  adv->add_option("--out", opt.out_file, "output file (default stdout)");

  auto* exp = app.add_subcommand("experiment", "run seeded trials and write records");
  exp->add_option("--kind", opt.kind, "graph kind");
  exp->add_option("--n", opt.n, "size parameter")->required();
  exp->add_option("--m", opt.extra_edges, "extra edges (random-connected)");
  exp->add_option("--max-degree", opt.max_degree, "degree cap (random kinds)");
  exp->add_option("--searcher", opt.searcher, "searcher name");
  exp->add_option("--game", opt.game, "adversary game instead of an oracle");
  exp->add_option("--c", opt.pairs, "antipodal pair count");
  exp->add_option("--trials", opt.trials, "number of trials");
  exp->add_option("--seed", opt.seed, "master seed");
  exp->add_option("--epsilon", opt.epsilon, "median slack / game epsilon");
  exp->add_option("--p1", opt.p1, "first-target probability");
  exp->add_option("--rho", opt.rho, "repetition multiplier");
  exp->add_option("--targets", opt.target_count, "target count (restricted-set)");
  exp->add_option("--budget", opt.budget, "query budget per trial");
  exp->add_option("--format", opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  exp->add_option("--out", opt.out_file, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "check records against a bound");
  verify->add_option("--in", opt.verify_in, "records file (csv or json)")->required();
  verify->add_option("--cap", opt.cap, "per-trial query cap");
  verify->add_option("--floor", opt.floor, "per-run query floor (adversary games)");
  verify->add_flag("--record-caps", opt.record_caps, "use each record's stored cap");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(opt);
    if (search->parsed()) return cmd_search(opt);
    if (adv->parsed()) return cmd_adversary(opt);
    if (exp->parsed()) return cmd_experiment(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace graphsearch
