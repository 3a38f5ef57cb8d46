#ifndef CTW_BENCH_HPP
#define CTW_BENCH_HPP

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "ctw/core.hpp"
#include "ctw/io.hpp"
#include "ctw/result.hpp"
#include "ctw/solve.hpp"

namespace ctw::bench {

enum class Engine { BranchAndBound, Topo, DsOnly, Oracle };

std::optional<Engine> parse_engine(std::string_view text);
const char *to_string(Engine engine);

/// Difficulty indicators: the sum of constraints b + |A| + |A_s| + |D| +
/// |DS|, and per-job constrainedness where each hard atomic constraint
/// charges its 'before' job 1 and each disjunct charges its 'before' job 0.5.
InstanceMetrics metrics(const Instance &inst);

/// Runs one engine on one instance and revalidates whatever it returns.
/// Never throws for engine-side problems; those become Undefined rows.
BenchRow run_engine(const Instance &inst, std::string_view instance_id,
                    Engine engine, const solve::SolverConfig &cfg);

/// Audits a solution produced elsewhere. The row is Undefined when the
/// permutation is malformed or violates a hard constraint; otherwise it is
/// Suboptimal (no optimality proof is available) with recomputed costs and
/// a "claim-mismatch" flag when the claimed values disagree.
BenchRow validate_external(const Instance &inst, const io::SolutionFile &sol);

struct SuiteOptions {
  Engine engine = Engine::BranchAndBound;
  solve::SolverConfig cfg;
  /// 0 means one worker per hardware thread.
  unsigned jobs = 0;
  /// When set, solutions are read from <dir>/<id>.sol and audited instead of
  /// running an engine.
  std::optional<std::filesystem::path> solutions_dir;
  bool timestamps = true;
};

/// Every *.dat and *.json file in dir, sorted by file name.
std::vector<std::filesystem::path>
instance_files(const std::filesystem::path &dir);

/// One row per instance file, ordered by instance id regardless of which
/// worker finished first. Unparseable files give Undefined rows.
std::vector<BenchRow> run_suite(const std::filesystem::path &dir,
                                const SuiteOptions &options);

} // namespace ctw::bench

#endif
