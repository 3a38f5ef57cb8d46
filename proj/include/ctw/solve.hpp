#ifndef CTW_SOLVE_HPP
#define CTW_SOLVE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ctw/core.hpp"
#include "ctw/result.hpp"

namespace ctw::solve {

struct SolverConfig {
  std::int64_t time_limit_ms = 300000;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> node_limit;
  bool heuristic_dive = true;
  std::optional<std::int64_t> log_every_nodes;
};

struct SolveStats {
  std::int64_t nodes_expanded = 0;
  std::int64_t time_ms = 0;
  std::int64_t proven_lower_bound = 0;
};

struct SolveResult {
  /// One of Optimal, Suboptimal, Unsatisfiable, Unsolved.
  ResultState state = ResultState::Unsolved;
  std::optional<Permutation> best;
  std::optional<CostBreakdown> costs;
  SolveStats stats;
};

/// Precomputed constraint lookups shared by every node of one search.
struct SearchModel {
  explicit SearchModel(const Instance &inst);

  const Instance *inst;
  int k;
  int b;
  std::vector<std::vector<JobId>> atomic_succ;
  std::vector<std::vector<JobId>> atomic_pred;
  /// Disjunctions (index, slot) in which the job is the 'after' side.
  std::vector<std::vector<std::pair<int, int>>> disjunct_after;
  /// Soft constraints (i, j) grouped by j, listing i.
  std::vector<std::vector<JobId>> soft_before_of;
  std::vector<bool> direct_successor;
};

/// Partial wiring sequence with incrementally maintained cost accumulators.
/// Every prefix held by a node satisfies all hard constraints restricted to
/// its placed jobs.
class SearchNode {
public:
  explicit SearchNode(const SearchModel &model);

  /// Builds the node for a given prefix; throws InstanceError if some job in
  /// the prefix is not a legal extension.
  static SearchNode from_prefix(const SearchModel &model,
                                std::span<const JobId> prefix);

  int depth() const { return static_cast<int>(prefix_.size()); }
  bool complete() const { return depth() == model_->k; }
  std::span<const JobId> prefix() const { return prefix_; }
  bool placed(JobId j) const { return pos_[j] != 0; }
  Position position_of(JobId j) const { return pos_[j]; }

  /// Whether j can be placed next without falsifying a hard constraint.
  bool legal(JobId j) const;

  /// Legal next jobs, best first.
  std::vector<JobId> candidates() const;

  void push(JobId j);
  void pop();

  /// Admissible: never above the objective of any valid completion. Exact
  /// at a complete node.
  std::int64_t lower_bound() const;

  /// Committed parts of the criteria (S, M, L, N) behind lower_bound().
  CostBreakdown committed() const;

private:
  struct Accum {
    int closed_interrupted = 0;
    int open_pairs = 0;
    int max_straddle = 0;
    int max_closed_gap = 0;
    int soft_violated = 0;
  };

  /// Job whose partner must come next, or 0.
  JobId forced() const;

  const SearchModel *model_;
  std::vector<JobId> prefix_;
  std::vector<Position> pos_; // 0 = unplaced, indexed by job
  std::vector<int> missing_preds_;
  std::vector<int> unplaced_succs_;
  std::vector<Accum> trail_;
  Accum acc_;
};

/// Legal next jobs for the node, ordered by the branching heuristic:
/// forced direct-successor partner, then the partner of the most recently
/// opened pair, then jobs with more unplaced successors, then job id.
std::vector<JobId> extend_candidates(const SearchNode &node);

std::int64_t lower_bound(const SearchNode &node);

/// Called with every new incumbent (objective is non-increasing).
using IncumbentCallback =
    std::function<void(const Permutation &, const CostBreakdown &)>;

/// Depth-first branch-and-bound over prefix extensions. Deterministic for a
/// fixed instance and config as long as the time limit does not cut in.
SolveResult solve(const Instance &inst, const SolverConfig &cfg = {},
                  const IncumbentCallback &on_incumbent = {});

} // namespace ctw::solve

#endif
