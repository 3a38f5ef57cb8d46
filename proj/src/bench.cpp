#include "ctw/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "ctw/error.hpp"
#include "ctw/oracle.hpp"
#include "ctw/poly.hpp"

namespace ctw::bench {

namespace fs = std::filesystem;

std::optional<Engine> parse_engine(std::string_view text) {
  if (text == "bb")
    return Engine::BranchAndBound;
  if (text == "topo")
    return Engine::Topo;
  if (text == "ds-only")
    return Engine::DsOnly;
  if (text == "oracle")
    return Engine::Oracle;
  return std::nullopt;
}

const char *to_string(Engine engine) {
  switch (engine) {
  case Engine::BranchAndBound:
    return "bb";
  case Engine::Topo:
    return "topo";
  case Engine::DsOnly:
    return "ds-only";
  case Engine::Oracle:
    return "oracle";
  }
  return "bb";
}

InstanceMetrics metrics(const Instance &inst) {
  InstanceMetrics m;
  m.k = inst.k();
  m.b = inst.b();
  m.n = inst.one_sided();
  m.atomic = inst.atomic().size();
  m.soft_atomic = inst.soft_atomic().size();
  m.disjunctive = inst.disjunctive().size();
  m.direct_successors = inst.direct_successors().size();
  m.sum_of_constraints = static_cast<std::int64_t>(
      m.b + m.atomic + m.soft_atomic + m.disjunctive + m.direct_successors);

  std::vector<std::int64_t> load(inst.k() + 1, 0); // doubled
  for (const auto &c : inst.atomic())
    load[c.before] += 2;
  for (const auto &d : inst.disjunctive()) {
    load[d.first_before] += 1;
    load[d.second_before] += 1;
  }
  for (JobId j = 1; j <= inst.k(); ++j) {
    m.total_constrainedness_x2 += load[j];
    m.max_constrainedness_x2 = std::max(m.max_constrainedness_x2, load[j]);
  }
  return m;
}

namespace {

using Clock = std::chrono::steady_clock;

void add_cost_flags(BenchRow &row, int k) {
  if (row.costs && k > 0 && row.costs->N >= k)
    row.flags.push_back("N>=k");
}

// Recomputes everything from the permutation; the engine's own numbers are
// never trusted.
void certify(BenchRow &row, const Instance &inst, const Permutation &perm) {
  if (perm.size() != inst.k() || !validate(inst, perm).empty()) {
    row.state = ResultState::Undefined;
    row.diagnostic = "engine returned an invalid permutation";
    row.flags.push_back("invalid-solution");
    return;
  }
  row.solution = perm;
  row.costs = evaluate(inst, perm);
  add_cost_flags(row, inst.k());
}

} // namespace

BenchRow run_engine(const Instance &inst, std::string_view instance_id,
                    Engine engine, const solve::SolverConfig &cfg) {
  BenchRow row;
  row.instance_id = std::string(instance_id);
  row.metrics = metrics(inst);
  const auto start = Clock::now();
  try {
    switch (engine) {
    case Engine::BranchAndBound: {
      const auto r = solve::solve(inst, cfg);
      row.state = r.state;
      row.nodes = r.stats.nodes_expanded;
      if (r.best) {
        row.proven_lower_bound = r.stats.proven_lower_bound;
        certify(row, inst, *r.best);
      }
      break;
    }
    case Engine::Topo: {
      const auto r = poly::topo_solve(inst);
      if (const auto *perm = std::get_if<Permutation>(&r)) {
        row.state = ResultState::Optimal;
        certify(row, inst, *perm);
      } else {
        row.state = ResultState::Unsatisfiable;
      }
      break;
    }
    case Engine::DsOnly:
      row.state = ResultState::Optimal;
      certify(row, inst, poly::ds_only_solve(inst));
      break;
    case Engine::Oracle: {
      const auto r = oracle::enumerate(inst);
      row.nodes = r.enumerated;
      if (r.optimal_objective) {
        row.state = ResultState::Optimal;
        certify(row, inst, r.optimal_solutions.front());
      } else {
        row.state = ResultState::Unsatisfiable;
      }
      break;
    }
    }
  } catch (const Error &e) {
    row.state = ResultState::Undefined;
    row.diagnostic = e.what();
    row.flags.push_back("engine-error");
  }
  row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       Clock::now() - start)
                       .count();
  return row;
}

BenchRow validate_external(const Instance &inst, const io::SolutionFile &sol) {
  BenchRow row;
  row.instance_id = sol.instance_id;
  row.metrics = metrics(inst);
  row.state = ResultState::Undefined;

  const auto pfc = sol.pfc();
  if (!pfc) {
    row.diagnostic = "sequence is not a permutation";
    row.flags.push_back("malformed");
    return row;
  }
  if (static_cast<int>(pfc->size()) != inst.k()) {
    row.diagnostic = "sequence has length " + std::to_string(pfc->size()) +
                     ", instance has k=" + std::to_string(inst.k());
    row.flags.push_back("malformed");
    return row;
  }
  const auto violations = validate_pfc(inst, *pfc);
  if (!violations.empty()) {
    row.diagnostic = std::string(to_string(violations.front().kind)) + ": " +
                     violations.front().detail;
    if (violations.front().kind == ViolationKind::NotBijective)
      row.flags.push_back("malformed");
    else
      row.flags.push_back("invalid-solution");
    return row;
  }

  const auto perm = Permutation::from_pfc(*pfc);
  row.state = ResultState::Suboptimal;
  row.solution = perm;
  row.costs = evaluate(inst, perm);
  add_cost_flags(row, inst.k());

  if (sol.claimed) {
    const auto &c = *sol.claimed;
    const auto &r = *row.costs;
    std::string mismatch;
    auto check = [&](const char *name, const std::optional<std::int64_t> &v,
                     std::int64_t actual) {
      if (v && *v != actual)
        mismatch += std::string(mismatch.empty() ? "" : ", ") + "claimed " +
                    name + " " + std::to_string(*v) + ", recomputed " +
                    std::to_string(actual);
    };
    check("S", c.S, r.S);
    check("M", c.M, r.M);
    check("L", c.L, r.L);
    check("N", c.N, r.N);
    check("objective", c.objective, r.objective);
    if (!mismatch.empty()) {
      row.flags.push_back("claim-mismatch");
      row.diagnostic = mismatch;
    }
  }
  return row;
}

std::vector<fs::path> instance_files(const fs::path &dir) {
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file())
      continue;
    const auto ext = entry.path().extension();
    if (ext == ".dat" || ext == ".json")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<BenchRow> run_suite(const fs::path &dir,
                                const SuiteOptions &options) {
  const auto files = instance_files(dir);
  std::vector<BenchRow> rows(files.size());

  auto work = [&](std::size_t i) {
    const auto id = files[i].stem().string();
    BenchRow row;
    try {
      const auto inst = io::load_instance(files[i]);
      if (options.solutions_dir) {
        const auto sol_path = *options.solutions_dir / (id + ".sol");
        if (!fs::exists(sol_path)) {
          row.instance_id = id;
          row.metrics = metrics(inst);
          row.diagnostic = "no solution file " + sol_path.string();
          row.flags.push_back("missing-solution");
        } else {
          auto sol = io::parse_solution(io::read_file(sol_path));
          if (sol.instance_id.empty())
            sol.instance_id = id;
          row = validate_external(inst, sol);
          row.instance_id = id;
        }
      } else {
        row = run_engine(inst, id, options.engine, options.cfg);
      }
    } catch (const Error &e) {
      row = BenchRow{};
      row.instance_id = id;
      row.state = ResultState::Undefined;
      row.diagnostic = e.what();
      row.flags.push_back("parse-error");
    }
    if (!options.timestamps)
      row.runtime_ms.reset();
    rows[i] = std::move(row);
  };

  unsigned workers = options.jobs;
  if (workers == 0)
    workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(files.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++)
      work(i);
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(worker);
  }
  return rows;
}

} // namespace ctw::bench
