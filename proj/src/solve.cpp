#include "ctw/solve.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "ctw/error.hpp"
#include "ctw/poly.hpp"

namespace ctw::solve {

SearchModel::SearchModel(const Instance &instance)
    : inst(&instance), k(instance.k()), b(instance.b()),
      atomic_succ(k + 1), atomic_pred(k + 1), disjunct_after(k + 1),
      soft_before_of(k + 1), direct_successor(k + 1, false) {
  for (const auto &c : instance.atomic()) {
    atomic_succ[c.before].push_back(c.after);
    atomic_pred[c.after].push_back(c.before);
  }
  const auto disj = instance.disjunctive();
  for (std::size_t d = 0; d < disj.size(); ++d) {
    disjunct_after[disj[d].first_after].push_back({static_cast<int>(d), 0});
    disjunct_after[disj[d].second_after].push_back({static_cast<int>(d), 1});
  }
  for (const auto &c : instance.soft_atomic())
    soft_before_of[c.after].push_back(c.before);
  for (JobId i : instance.direct_successors())
    direct_successor[i] = true;
}

SearchNode::SearchNode(const SearchModel &model)
    : model_(&model), pos_(model.k + 1, 0), missing_preds_(model.k + 1, 0),
      unplaced_succs_(model.k + 1, 0) {
  prefix_.reserve(model.k);
  trail_.reserve(model.k);
  for (JobId j = 1; j <= model.k; ++j) {
    missing_preds_[j] = static_cast<int>(model.atomic_pred[j].size());
    unplaced_succs_[j] = static_cast<int>(model.atomic_succ[j].size());
  }
}

SearchNode SearchNode::from_prefix(const SearchModel &model,
                                   std::span<const JobId> prefix) {
  SearchNode node(model);
  for (JobId j : prefix) {
    if (j < 1 || j > model.k)
      throw InstanceError("prefix job " + std::to_string(j) + " out of range");
    const JobId f = node.forced();
    if (!node.legal(j) || (f != 0 && j != f))
      throw InstanceError("prefix job " + std::to_string(j) +
                          " is not a legal extension");
    node.push(j);
  }
  return node;
}

JobId SearchNode::forced() const {
  if (prefix_.empty())
    return 0;
  const JobId last = prefix_.back();
  if (!model_->direct_successor[last])
    return 0;
  const JobId other = partner(last, model_->b);
  return placed(other) ? 0 : other;
}

bool SearchNode::legal(JobId j) const {
  if (placed(j) || missing_preds_[j] != 0)
    return false;
  const auto disj = model_->inst->disjunctive();
  auto before_of = [&](const DisjunctiveConstraint &d, int slot) {
    return slot == 0 ? d.first_before : d.second_before;
  };
  auto after_of = [&](const DisjunctiveConstraint &d, int slot) {
    return slot == 0 ? d.first_after : d.second_after;
  };
  for (const auto &[index, slot] : model_->disjunct_after[j]) {
    const auto &d = disj[index];
    if (placed(before_of(d, slot)))
      continue; // this disjunct is satisfied by placing j
    const int other = 1 - slot;
    const JobId ob = before_of(d, other);
    const JobId oa = after_of(d, other);
    bool other_dead;
    if (oa == j)
      other_dead = !placed(ob);
    else
      other_dead = placed(oa) && (!placed(ob) || pos_[ob] > pos_[oa]);
    if (other_dead)
      return false;
  }
  return true;
}

std::vector<JobId> SearchNode::candidates() const {
  std::vector<JobId> out;
  if (complete())
    return out;
  if (const JobId f = forced(); f != 0) {
    if (legal(f))
      out.push_back(f);
    return out;
  }

  JobId closing = 0;
  if (acc_.open_pairs > 0) {
    for (auto it = prefix_.rbegin(); it != prefix_.rend(); ++it) {
      if (*it <= 2 * model_->b && !placed(partner(*it, model_->b))) {
        closing = partner(*it, model_->b);
        break;
      }
    }
  }
  for (JobId j = 1; j <= model_->k; ++j)
    if (j != closing && legal(j))
      out.push_back(j);
  std::stable_sort(out.begin(), out.end(), [&](JobId a, JobId c) {
    return unplaced_succs_[a] > unplaced_succs_[c];
  });
  if (closing != 0 && legal(closing))
    out.insert(out.begin(), closing);
  return out;
}

void SearchNode::push(JobId j) {
  trail_.push_back(acc_);
  const Position t = depth() + 1;
  int straddle = acc_.open_pairs;
  if (j <= 2 * model_->b) {
    const JobId other = partner(j, model_->b);
    if (placed(other)) {
      const int gap = t - pos_[other];
      if (gap > 1)
        ++acc_.closed_interrupted;
      acc_.max_closed_gap = std::max(acc_.max_closed_gap, gap - 1);
      --acc_.open_pairs;
      --straddle;
    } else {
      ++acc_.open_pairs;
    }
  }
  acc_.max_straddle = std::max(acc_.max_straddle, straddle);
  for (JobId i : model_->soft_before_of[j])
    if (!placed(i))
      ++acc_.soft_violated;

  pos_[j] = t;
  prefix_.push_back(j);
  for (JobId s : model_->atomic_succ[j])
    --missing_preds_[s];
  for (JobId p : model_->atomic_pred[j])
    --unplaced_succs_[p];
}

void SearchNode::pop() {
  const JobId j = prefix_.back();
  prefix_.pop_back();
  pos_[j] = 0;
  for (JobId s : model_->atomic_succ[j])
    ++missing_preds_[s];
  for (JobId p : model_->atomic_pred[j])
    ++unplaced_succs_[p];
  acc_ = trail_.back();
  trail_.pop_back();
}

CostBreakdown SearchNode::committed() const {
  const int t = depth();
  CostBreakdown c;
  c.N = acc_.soft_violated;
  c.S = acc_.closed_interrupted;
  c.M = acc_.max_straddle;
  c.L = acc_.max_closed_gap;
  if (acc_.open_pairs > 0) {
    // An open pair whose placed end is not the last job can no longer be
    // wired back to back.
    const JobId last = prefix_.back();
    const bool last_opens =
        last <= 2 * model_->b && !placed(partner(last, model_->b));
    c.S += acc_.open_pairs - (last_opens ? 1 : 0);
    // The next job closes at most one open pair; the rest straddle it.
    c.M = std::max<std::int64_t>(c.M, acc_.open_pairs - 1);
    // Open partners take distinct slots t+1, t+2, ...; matching them in
    // order of their placed ends minimises the largest gap.
    int rank = 0;
    for (Position x = 1; x <= t; ++x) {
      const JobId j = prefix_[x - 1];
      if (j <= 2 * model_->b && !placed(partner(j, model_->b))) {
        ++rank;
        c.L = std::max<std::int64_t>(c.L, t + rank - x - 1);
      }
    }
  }
  c.objective = objective(c.S, c.M, c.L, c.N, model_->k);
  return c;
}

std::int64_t SearchNode::lower_bound() const { return committed().objective; }

std::vector<JobId> extend_candidates(const SearchNode &node) {
  return node.candidates();
}

std::int64_t lower_bound(const SearchNode &node) { return node.lower_bound(); }

namespace {

using Clock = std::chrono::steady_clock;

class Search {
public:
  Search(const Instance &inst, const SolverConfig &cfg,
         const IncumbentCallback &on_incumbent)
      : inst_(inst), cfg_(cfg), on_incumbent_(on_incumbent), model_(inst),
        node_(model_), start_(Clock::now()),
        deadline_(start_ + std::chrono::milliseconds(cfg.time_limit_ms)) {}

  SolveResult run() {
    if (cfg_.heuristic_dive)
      dive();
    const bool finished = !aborted_ && branch_and_bound();

    SolveResult r;
    r.stats.nodes_expanded = nodes_;
    if (best_) {
      r.best = best_;
      r.costs = best_costs_;
      r.state = finished ? ResultState::Optimal : ResultState::Suboptimal;
      r.stats.proven_lower_bound = finished ? best_costs_.objective : 0;
    } else {
      r.state = finished ? ResultState::Unsatisfiable : ResultState::Unsolved;
    }
    r.stats.time_ms = elapsed_ms();
    return r;
  }

private:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 start_)
        .count();
  }

  // Counts one expanded node; returns false once a limit is hit.
  bool tick() {
    ++nodes_;
    if (cfg_.node_limit && nodes_ >= *cfg_.node_limit)
      aborted_ = true;
    else if ((nodes_ & 1023) == 0 && Clock::now() >= deadline_)
      aborted_ = true;
    if (cfg_.log_every_nodes && *cfg_.log_every_nodes > 0 &&
        nodes_ % *cfg_.log_every_nodes == 0)
      std::clog << "nodes=" << nodes_ << " depth=" << node_.depth()
                << " best="
                << (best_ ? std::to_string(best_costs_.objective) : "-")
                << " elapsed_ms=" << elapsed_ms() << "\n";
    return !aborted_;
  }

  void record_leaf() {
    auto perm = Permutation::from_cfp(
        std::vector<JobId>(node_.prefix().begin(), node_.prefix().end()));
    if (!validate(inst_, perm).empty())
      throw std::logic_error("search produced an invalid sequence");
    const auto costs = evaluate(inst_, perm);
    if (costs.objective != node_.lower_bound())
      throw std::logic_error("incremental cost disagrees with evaluation");
    best_ = std::move(perm);
    best_costs_ = costs;
    bound_ = costs.objective;
    if (on_incumbent_)
      on_incumbent_(*best_, best_costs_);
  }

  void dive() {
    while (!node_.complete()) {
      const auto cands = node_.candidates();
      if (cands.empty())
        break;
      node_.push(cands.front());
      if (!tick())
        break;
    }
    if (node_.complete() && node_.lower_bound() < bound_)
      record_leaf();
    while (node_.depth() > 0)
      node_.pop();
  }

  // Returns true iff the tree was exhausted.
  bool branch_and_bound() {
    struct Frame {
      std::vector<JobId> cands;
      std::size_t next = 0;
    };
    std::vector<Frame> frames;
    if (!tick())
      return false;
    frames.push_back({node_.candidates()});
    while (!frames.empty()) {
      auto &f = frames.back();
      if (f.next == f.cands.size()) {
        frames.pop_back();
        if (node_.depth() > 0)
          node_.pop();
        continue;
      }
      const JobId j = f.cands[f.next++];
      node_.push(j);
      if (node_.lower_bound() >= bound_) {
        node_.pop();
        continue;
      }
      if (node_.complete()) {
        record_leaf();
        node_.pop();
        if (!tick())
          return false;
        continue;
      }
      if (!tick())
        return false;
      frames.push_back({node_.candidates()});
    }
    return true;
  }

  const Instance &inst_;
  const SolverConfig &cfg_;
  const IncumbentCallback &on_incumbent_;
  SearchModel model_;
  SearchNode node_;
  Clock::time_point start_;
  Clock::time_point deadline_;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
  std::optional<Permutation> best_;
  CostBreakdown best_costs_;
  std::int64_t bound_ = std::numeric_limits<std::int64_t>::max();
};

} // namespace

SolveResult solve(const Instance &inst, const SolverConfig &cfg,
                  const IncumbentCallback &on_incumbent) {
  if (cfg.time_limit_ms <= 0)
    throw PreconditionError("time limit must be positive");
  const auto start = Clock::now();
  if (poly::unsat_precheck(inst)) {
    SolveResult r;
    r.state = ResultState::Unsatisfiable;
    r.stats.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          Clock::now() - start)
                          .count();
    return r;
  }
  return Search(inst, cfg, on_incumbent).run();
}

} // namespace ctw::solve
