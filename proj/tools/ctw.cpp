#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctw/bench.hpp"
#include "ctw/error.hpp"
#include "ctw/gen.hpp"
#include "ctw/io.hpp"
#include "ctw/oracle.hpp"
#include "ctw/poly.hpp"
#include "ctw/reduce.hpp"
#include "ctw/solve.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kSuboptimal = 1, kUnsat = 2, kUnsolved = 3, kFail = 4 };

int exit_code(ctw::ResultState state) {
  switch (state) {
  case ctw::ResultState::Optimal:
    return kOk;
  case ctw::ResultState::Suboptimal:
    return kSuboptimal;
  case ctw::ResultState::Unsatisfiable:
    return kUnsat;
  case ctw::ResultState::Unsolved:
    return kUnsolved;
  case ctw::ResultState::Undefined:
    return kFail;
  }
  return kFail;
}

std::int64_t default_time_limit() {
  if (const char *env = std::getenv("CTW_TIME_LIMIT_MS")) {
    try {
      const auto v = std::stoll(env);
      if (v > 0)
        return v;
    } catch (const std::exception &) {
    }
    std::cerr << "ctw: ignoring CTW_TIME_LIMIT_MS=" << env << "\n";
  }
  return 300000;
}

ctw::Instance load(const fs::path &path) {
  std::vector<std::string> warnings;
  auto inst = ctw::io::load_instance(path, &warnings);
  for (const auto &w : warnings)
    std::cerr << path.string() << ": warning: " << w << "\n";
  return inst;
}

void write_output(const std::string &text, const std::string &out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f)
    throw ctw::Error("cannot write " + out);
  f << text;
}

json costs_json(const ctw::CostBreakdown &c) {
  return {{"S", c.S}, {"M", c.M}, {"L", c.L}, {"N", c.N}};
}

json seq_json(std::span<const int> v) { return json(std::vector<int>(v.begin(), v.end())); }

ctw::io::InstanceFormat format_arg(const std::string &name) {
  const auto f = ctw::io::parse_format(name);
  if (!f)
    throw CLI::ValidationError("format", "unknown format " + name);
  return *f;
}

// solve ----------------------------------------------------------------------

struct SolveArgs {
  std::string instance;
  std::string engine = "bb";
  std::int64_t time_limit = 0;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> node_limit;
  bool no_dive = false;
  std::string output = "json";
  std::string solution_out;
};

int run_solve(const SolveArgs &a, bool timestamps) {
  const fs::path path(a.instance);
  const auto inst = load(path);
  const auto id = path.stem().string();

  ctw::solve::SolverConfig cfg;
  cfg.time_limit_ms = a.time_limit;
  cfg.seed = a.seed;
  cfg.node_limit = a.node_limit;
  cfg.heuristic_dive = !a.no_dive;
  const auto engine = *ctw::bench::parse_engine(a.engine);

  auto row = ctw::bench::run_engine(inst, id, engine, cfg);
  if (!timestamps)
    row.runtime_ms.reset();
  if (row.state == ctw::ResultState::Undefined)
    std::cerr << "ctw: " << row.diagnostic << "\n";

  if (a.output == "csv") {
    std::cout << ctw::io::emit_report_csv(std::span(&row, 1));
  } else {
    json j;
    j["instance"] = id;
    j["engine"] = a.engine;
    j["state"] = ctw::to_string(row.state);
    j["objective"] = row.costs ? json(row.costs->objective) : json(nullptr);
    j["costs"] = row.costs ? costs_json(*row.costs) : json(nullptr);
    j["cfp"] = row.solution ? seq_json(row.solution->cfp()) : json(nullptr);
    j["pfc"] = row.solution ? seq_json(row.solution->pfc()) : json(nullptr);
    json stats;
    stats["nodes"] = row.nodes;
    if (row.runtime_ms)
      stats["time_ms"] = *row.runtime_ms;
    if (row.proven_lower_bound)
      stats["proven_lower_bound"] = *row.proven_lower_bound;
    j["stats"] = stats;
    j["flags"] = row.flags;
    if (row.state == ctw::ResultState::Unsatisfiable) {
      const auto cert = ctw::poly::unsat_precheck(inst);
      j["certificate"] =
          cert ? json{{"cycle", cert->cycle}} : json(nullptr);
    }
    if (!row.diagnostic.empty())
      j["diagnostic"] = row.diagnostic;
    std::cout << j.dump(2) << "\n";
  }

  if (!a.solution_out.empty() && row.solution)
    write_output(ctw::io::emit_solution(id, *row.solution, row.costs),
                 a.solution_out);
  return exit_code(row.state);
}

// validate -------------------------------------------------------------------

struct ValidateArgs {
  std::string instance;
  std::string solution;
  std::string output = "json";
};

int run_validate(const ValidateArgs &a) {
  const fs::path path(a.instance);
  const auto inst = load(path);
  const auto sol = ctw::io::parse_solution(ctw::io::read_file(a.solution));
  auto row = ctw::bench::validate_external(inst, sol);
  row.instance_id = sol.instance_id.empty() ? path.stem().string() : sol.instance_id;
  const bool valid = row.state != ctw::ResultState::Undefined;
  const bool consistent =
      std::find(row.flags.begin(), row.flags.end(), "claim-mismatch") ==
      row.flags.end();

  if (a.output == "csv") {
    std::cout << ctw::io::emit_report_csv(std::span(&row, 1));
  } else {
    json j;
    j["instance"] = row.instance_id;
    j["valid"] = valid;
    j["state"] = ctw::to_string(row.state);
    j["objective"] = row.costs ? json(row.costs->objective) : json(nullptr);
    j["costs"] = row.costs ? costs_json(*row.costs) : json(nullptr);
    json violations = json::array();
    if (const auto pfc = sol.pfc();
        pfc && static_cast<int>(pfc->size()) == inst.k()) {
      for (const auto &v : ctw::validate_pfc(inst, *pfc))
        violations.push_back({{"kind", ctw::to_string(v.kind)},
                              {"index", v.index},
                              {"detail", v.detail}});
    }
    j["violations"] = violations;
    j["flags"] = row.flags;
    if (!row.diagnostic.empty())
      j["diagnostic"] = row.diagnostic;
    std::cout << j.dump(2) << "\n";
  }
  if (!valid || !consistent)
    std::cerr << "ctw: " << row.diagnostic << "\n";
  return valid && consistent ? kOk : kFail;
}

// oracle ---------------------------------------------------------------------

struct OracleArgs {
  std::string input;
  int limit = ctw::oracle::kDefaultLimit;
  bool mas = false;
  int vertices = 0;
};

int run_oracle(const OracleArgs &a) {
  if (a.mas) {
    const auto g =
        ctw::reduce::parse_edge_list(ctw::io::read_file(a.input), a.vertices);
    json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["mas"] = ctw::oracle::brute_mas(g, a.limit);
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  const fs::path path(a.input);
  const auto inst = load(path);
  const auto r = ctw::oracle::enumerate(inst, a.limit);
  json j;
  j["instance"] = path.stem().string();
  j["enumerated"] = r.enumerated;
  j["valid_count"] = r.valid_count;
  j["optimal_objective"] =
      r.optimal_objective ? json(*r.optimal_objective) : json(nullptr);
  json sols = json::array();
  for (const auto &p : r.optimal_solutions)
    sols.push_back(seq_json(p.cfp()));
  j["optimal_solutions"] = sols;
  std::cout << j.dump(2) << "\n";
  return r.optimal_objective ? kOk : kUnsat;
}

// gen ------------------------------------------------------------------------

struct GenArgs {
  ctw::gen::GenParams params;
  std::string mode = "satisfiable";
  std::string format = "json";
  std::string out;
  std::string planted;
};

struct SuiteArgs {
  std::string dir;
  std::uint64_t seed = 0;
  int small = 200;
  int large = 50;
  int k_min = 20;
  int k_max = 50;
  std::string format = "dat";
};

int run_gen(GenArgs a) {
  const auto mode = ctw::gen::parse_mode(a.mode);
  if (!mode)
    throw CLI::ValidationError("--mode", "unknown mode " + a.mode);
  a.params.mode = *mode;
  const auto g = ctw::gen::generate(a.params);
  write_output(ctw::io::emit(g.instance, format_arg(a.format)), a.out);
  if (!a.planted.empty()) {
    const std::string id =
        a.out.empty() || a.out == "-" ? "" : fs::path(a.out).stem().string();
    write_output(ctw::io::emit_solution(id, g.planted, std::nullopt),
                 a.planted);
  }
  return kOk;
}

json params_json(const ctw::gen::GenParams &p) {
  return {{"b", p.b},
          {"n", p.n},
          {"p_atomic", p.p_atomic},
          {"p_soft", p.p_soft},
          {"p_disjunctive", p.p_disjunctive},
          {"ds_count", p.ds_count},
          {"seed", p.seed},
          {"mode", ctw::gen::to_string(p.mode)}};
}

int run_gen_suite(const SuiteArgs &a) {
  const auto format = format_arg(a.format);
  if (format == ctw::io::InstanceFormat::Dzn)
    throw CLI::ValidationError("--format", "suite instances must be dat or json");
  const std::string ext = format == ctw::io::InstanceFormat::Json ? ".json" : ".dat";
  const fs::path root(a.dir);
  json manifest;
  manifest["seed"] = a.seed;
  auto emit_tree = [&](const char *name,
                       const std::vector<ctw::gen::SuiteEntry> &entries) {
    const auto dir = root / name;
    fs::create_directories(dir);
    json list = json::array();
    for (const auto &e : entries) {
      const auto g = ctw::gen::generate(e.params);
      write_output(ctw::io::emit(g.instance, format), (dir / (e.id + ext)).string());
      list.push_back({{"id", e.id}, {"k", g.instance.k()}, {"params", params_json(e.params)}});
    }
    manifest[name] = list;
  };
  emit_tree("small", ctw::gen::small_suite(a.seed, a.small));
  emit_tree("large", ctw::gen::large_suite(a.seed, a.large, a.k_min, a.k_max));
  write_output(manifest.dump(2) + "\n", (root / "manifest.json").string());

  json summary;
  summary["dir"] = root.string();
  summary["small"] = a.small;
  summary["large"] = a.large;
  std::cout << summary.dump(2) << "\n";
  return kOk;
}

// convert --------------------------------------------------------------------

struct ConvertArgs {
  std::string instance;
  std::string to;
  std::string out;
};

int run_convert(const ConvertArgs &a) {
  const fs::path path(a.instance);
  if (ctw::io::format_from_path(path) == ctw::io::InstanceFormat::Dzn)
    throw ctw::Error("reading .dzn is not supported; convert from .dat or .json");
  const auto inst = load(path);
  write_output(ctw::io::emit(inst, format_arg(a.to)), a.out);
  return kOk;
}

// bench / stats --------------------------------------------------------------

struct BenchArgs {
  std::string dir;
  std::string engine = "bb";
  std::int64_t time_limit = 0;
  std::optional<std::int64_t> node_limit;
  unsigned jobs = 0;
  std::string out;
  std::string solutions;
};

int run_bench(const BenchArgs &a, bool timestamps) {
  if (!fs::is_directory(a.dir))
    throw ctw::Error("not a directory: " + a.dir);
  ctw::bench::SuiteOptions opt;
  opt.engine = *ctw::bench::parse_engine(a.engine);
  opt.cfg.time_limit_ms = a.time_limit;
  opt.cfg.node_limit = a.node_limit;
  opt.jobs = a.jobs;
  if (!a.solutions.empty())
    opt.solutions_dir = fs::path(a.solutions);
  opt.timestamps = timestamps;
  const auto rows = ctw::bench::run_suite(a.dir, opt);
  write_output(ctw::io::emit_report_csv(rows), a.out);

  std::map<std::string, int> tally;
  for (const auto &r : rows)
    ++tally[ctw::to_string(r.state)];
  std::cerr << "ctw: " << rows.size() << " instances";
  for (const auto &[state, count] : tally)
    std::cerr << ", " << state << " " << count;
  std::cerr << "\n";
  return kOk;
}

struct StatsArgs {
  std::string dir;
  std::vector<std::string> files;
  std::string out;
};

int run_stats(const StatsArgs &a) {
  std::vector<fs::path> paths;
  if (!a.dir.empty()) {
    if (!fs::is_directory(a.dir))
      throw ctw::Error("not a directory: " + a.dir);
    paths = ctw::bench::instance_files(a.dir);
  }
  for (const auto &f : a.files)
    paths.emplace_back(f);
  std::vector<std::pair<std::string, ctw::InstanceMetrics>> rows;
  for (const auto &p : paths)
    rows.emplace_back(p.stem().string(), ctw::bench::metrics(load(p)));
  write_output(ctw::io::emit_metrics_csv(rows), a.out);
  return kOk;
}

// reduce-mas -----------------------------------------------------------------

struct ReduceArgs {
  std::string graph;
  int vertices = 0;
  std::string format = "json";
  std::string out;
  std::string extract;
};

json edges_json(const std::set<ctw::Edge> &edges) {
  json a = json::array();
  for (const auto &e : edges)
    a.push_back({e.from, e.to});
  return a;
}

int run_reduce(const ReduceArgs &a) {
  const auto g =
      ctw::reduce::parse_edge_list(ctw::io::read_file(a.graph), a.vertices);
  if (a.extract.empty()) {
    write_output(ctw::io::emit(ctw::reduce::mas_to_ctw(g), format_arg(a.format)),
                 a.out);
    return kOk;
  }
  const auto sol = ctw::io::parse_solution(ctw::io::read_file(a.extract));
  const auto pfc = sol.pfc();
  if (!pfc || static_cast<int>(pfc->size()) != g.vertex_count())
    throw ctw::Error("solution is not a permutation of the graph's vertices");
  const auto kept = ctw::reduce::extract_mas(g, ctw::Permutation::from_pfc(*pfc));
  std::set<ctw::Edge> removed;
  for (const auto &e : g.edges())
    if (!kept.contains(e))
      removed.insert(e);
  json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["acyclic_edges"] = kept.size();
  j["kept"] = edges_json(kept);
  j["removed"] = edges_json(removed);
  write_output(j.dump(2) + "\n", a.out);
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Cable tree wiring sequence solver"};
  app.require_subcommand(1);
  app.fallthrough();
  bool no_timestamps = false;
  app.add_flag("--no-timestamps", no_timestamps,
               "Omit wall-clock fields from structured output");

  const std::int64_t time_limit = default_time_limit();
  const std::vector<std::string> engines{"bb", "topo", "ds-only", "oracle"};
  const std::vector<std::string> outputs{"json", "csv"};
  const std::vector<std::string> formats{"dat", "dzn", "json"};

  SolveArgs solve_args;
  solve_args.time_limit = time_limit;
  auto *solve = app.add_subcommand("solve", "Solve one instance");
  solve->add_option("instance", solve_args.instance, "Instance (.dat or .json)")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--engine", solve_args.engine, "bb, topo, ds-only or oracle")
      ->check(CLI::IsMember(engines));
  solve->add_option("--time-limit", solve_args.time_limit,
                    "Milliseconds (default $CTW_TIME_LIMIT_MS or 300000)")
      ->check(CLI::PositiveNumber);
  solve->add_option("--seed", solve_args.seed);
  solve->add_option("--node-limit", solve_args.node_limit)
      ->check(CLI::PositiveNumber);
  solve->add_flag("--no-dive", solve_args.no_dive,
                  "Skip the greedy dive before branch-and-bound");
  solve->add_option("--output", solve_args.output)->check(CLI::IsMember(outputs));
  solve->add_option("--solution-out", solve_args.solution_out,
                    "Also write the best sequence as a solution file");

  ValidateArgs validate_args;
  auto *validate = app.add_subcommand("validate", "Check a solution file");
  validate->add_option("instance", validate_args.instance)
      ->required()
      ->check(CLI::ExistingFile);
  validate->add_option("--solution", validate_args.solution)
      ->required()
      ->check(CLI::ExistingFile);
  validate->add_option("--output", validate_args.output)
      ->check(CLI::IsMember(outputs));

  OracleArgs oracle_args;
  auto *oracle = app.add_subcommand("oracle", "Exhaustive enumeration (small k)");
  oracle->add_option("input", oracle_args.input, "Instance, or edge list with --mas")
      ->required()
      ->check(CLI::ExistingFile);
  oracle->add_option("--limit", oracle_args.limit, "Largest k (or |V|) accepted")
      ->check(CLI::Range(0, 12));
  auto *oracle_mas =
      oracle->add_flag("--mas", oracle_args.mas, "Brute-force maximum acyclic subgraph");
  oracle->add_option("--vertices", oracle_args.vertices)
      ->needs(oracle_mas)
      ->check(CLI::NonNegativeNumber);

  GenArgs gen_args;
  auto *gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(0, 1);
  gen->add_option("--b", gen_args.params.b, "Two-sided pairs")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--n", gen_args.params.n, "One-sided jobs")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--p-atomic", gen_args.params.p_atomic)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--p-soft", gen_args.params.p_soft, "Default 1/k")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--p-disjunctive", gen_args.params.p_disjunctive)
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--ds-count", gen_args.params.ds_count)
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gen_args.params.seed);
  gen->add_option("--mode", gen_args.mode,
                  "satisfiable, unsatisfiable, ds-only or atomic-only");
  gen->add_option("--format", gen_args.format)->check(CLI::IsMember(formats));
  gen->add_option("--out", gen_args.out);
  gen->add_option("--planted", gen_args.planted,
                  "Write the planted sequence as a solution file");

  SuiteArgs suite_args;
  auto *suite = gen->add_subcommand("suite", "Emit the benchmark tree");
  suite->add_option("--dir", suite_args.dir)->required();
  suite->add_option("--seed", suite_args.seed);
  suite->add_option("--small", suite_args.small, "Instances with k <= 8")
      ->check(CLI::NonNegativeNumber);
  suite->add_option("--large", suite_args.large)->check(CLI::NonNegativeNumber);
  suite->add_option("--k-min", suite_args.k_min)->check(CLI::Range(2, 100000));
  suite->add_option("--k-max", suite_args.k_max)->check(CLI::Range(2, 100000));
  suite->add_option("--format", suite_args.format)
      ->check(CLI::IsMember(std::vector<std::string>{"dat", "json"}));

  ConvertArgs convert_args;
  auto *convert = app.add_subcommand("convert", "Rewrite an instance in another format");
  convert->add_option("instance", convert_args.instance)
      ->required()
      ->check(CLI::ExistingFile);
  convert->add_option("--to", convert_args.to)->required()->check(CLI::IsMember(formats));
  convert->add_option("--out", convert_args.out);

  BenchArgs bench_args;
  bench_args.time_limit = time_limit;
  auto *bench = app.add_subcommand("bench", "Run an engine over a directory");
  bench->add_option("--dir", bench_args.dir)->required();
  auto *bench_engine = bench->add_option("--engine", bench_args.engine)
                           ->check(CLI::IsMember(engines));
  bench->add_option("--time-limit", bench_args.time_limit)->check(CLI::PositiveNumber);
  bench->add_option("--node-limit", bench_args.node_limit)->check(CLI::PositiveNumber);
  bench->add_option("--jobs", bench_args.jobs, "Workers (0 = all cores)");
  bench->add_option("--out", bench_args.out, "Report CSV (default stdout)");
  bench->add_option("--solutions", bench_args.solutions,
                    "Audit <dir>/<id>.sol instead of solving")
      ->excludes(bench_engine)
      ->check(CLI::ExistingDirectory);

  StatsArgs stats_args;
  auto *stats = app.add_subcommand("stats", "Instance metrics as CSV");
  auto *stats_dir = stats->add_option("--dir", stats_args.dir);
  stats->add_option("files", stats_args.files)->check(CLI::ExistingFile);
  stats->add_option("--out", stats_args.out);

  ReduceArgs reduce_args;
  auto *reduce = app.add_subcommand("reduce-mas", "Maximum acyclic subgraph as CTW");
  reduce->add_option("graph", reduce_args.graph, "Edge list, one 'v w' per line")
      ->required()
      ->check(CLI::ExistingFile);
  reduce->add_option("--vertices", reduce_args.vertices)->check(CLI::NonNegativeNumber);
  auto *reduce_format = reduce->add_option("--format", reduce_args.format)
                            ->check(CLI::IsMember(formats));
  reduce->add_option("--out", reduce_args.out);
  reduce->add_option("--extract", reduce_args.extract,
                     "Solution of the reduced instance; emits the kept edges")
      ->excludes(reduce_format)
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
    if (*stats && stats_dir->count() == 0 && stats_args.files.empty())
      throw CLI::RequiredError("stats needs --dir or instance files");
    if (*suite && suite_args.k_max < suite_args.k_min)
      throw CLI::ValidationError("--k-max", "must not be below --k-min");
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e, std::cerr, std::cerr);
    std::cerr << app.help();
    return kFail;
  }

  const bool timestamps = !no_timestamps;
  try {
    if (*solve)
      return run_solve(solve_args, timestamps);
    if (*validate)
      return run_validate(validate_args);
    if (*oracle)
      return run_oracle(oracle_args);
    if (*suite)
      return run_gen_suite(suite_args);
    if (*gen)
      return run_gen(gen_args);
    if (*convert)
      return run_convert(convert_args);
    if (*bench)
      return run_bench(bench_args, timestamps);
    if (*stats)
      return run_stats(stats_args);
    if (*reduce)
      return run_reduce(reduce_args);
  } catch (const CLI::Error &e) {
    std::cerr << "ctw: " << e.what() << "\n";
    return kFail;
  } catch (const ctw::Error &e) {
    std::cerr << "ctw: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception &e) {
    std::cerr << "ctw: " << e.what() << "\n";
    return kFail;
  }
  return kFail;
}
