#include "ctw/poly.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>

#include "ctw/error.hpp"

namespace ctw::poly {

namespace {

// Compressed adjacency: successors of v are target[start[v] .. start[v+1]).
struct Adjacency {
  std::vector<int> start, target;
  std::span<const int> operator[](int v) const {
    return {target.data() + start[v], target.data() + start[v + 1]};
  }
};

// Counting sort by tail, filling each list back to front. With sorted set,
// a first pass by head leaves every list ascending.
Adjacency atomic_successors(const Instance &inst, bool sorted) {
  const int k = inst.k();
  const auto edges = inst.atomic();
  // Ends of each bucket; placing with pre-decrement turns them into starts.
  auto bucket_ends = [&](auto key) {
    std::vector<int> at(k + 2, 0);
    for (const auto &c : edges)
      ++at[key(c)];
    for (int v = 1; v <= k + 1; ++v)
      at[v] += at[v - 1];
    return at;
  };
  std::vector<int> order;
  if (sorted) {
    auto at = bucket_ends([](const AtomicConstraint &c) { return c.after; });
    order.resize(edges.size());
    for (std::size_t e = edges.size(); e-- > 0;)
      order[--at[edges[e].after]] = static_cast<int>(e);
  }

  Adjacency adj{bucket_ends([](const AtomicConstraint &c) { return c.before; }), {}};
  adj.target.resize(edges.size());
  auto place = [&](const AtomicConstraint &c) { adj.target[--adj.start[c.before]] = c.after; };
  if (sorted)
    for (auto e = order.rbegin(); e != order.rend(); ++e)
      place(edges[*e]);
  else
    for (const auto &c : edges)
      place(c);
  return adj;
}

// Set of jobs 0..n-1 with smallest-element extraction in O(log_64 n) word
// operations: each level summarises which words of the level below are
// non-empty.
class ReadySet {
public:
  explicit ReadySet(int n) {
    std::size_t words = std::max<std::size_t>(1, (static_cast<std::size_t>(n) + 63) / 64);
    levels_.emplace_back(words, 0);
    while (words > 1) {
      words = (words + 63) / 64;
      levels_.emplace_back(words, 0);
    }
  }
  bool empty() const { return levels_.back()[0] == 0; }
  void insert(int v) {
    for (auto &level : levels_) {
      const bool was_empty = level[v / 64] == 0;
      level[v / 64] |= std::uint64_t{1} << (v % 64);
      if (!was_empty)
        return;
      v /= 64;
    }
  }
  int pop_min() {
    std::size_t idx = 0;
    for (auto l = levels_.size(); l-- > 0;)
      idx = idx * 64 + static_cast<std::size_t>(std::countr_zero(levels_[l][idx]));
    const int v = static_cast<int>(idx);
    for (auto &level : levels_) {
      level[idx / 64] &= ~(std::uint64_t{1} << (idx % 64));
      if (level[idx / 64] != 0)
        break;
      idx /= 64;
    }
    return v;
  }

private:
  std::vector<std::vector<std::uint64_t>> levels_;
};

void rotate_to_smallest(std::vector<int> &cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
}

} // namespace

TopoResult topo_solve(const Instance &inst) {
  if (inst.b() != 0 || !inst.soft_atomic().empty() ||
      !inst.disjunctive().empty() || !inst.direct_successors().empty())
    throw PreconditionError(
        "topo engine needs b = 0 and only hard atomic constraints");

  const int k = inst.k();
  const auto succ = atomic_successors(inst, false);
  std::vector<int> indegree(k + 1, 0);
  for (const auto &c : inst.atomic())
    ++indegree[c.after];

  ReadySet ready(k + 1);
  for (int v = 1; v <= k; ++v)
    if (indegree[v] == 0)
      ready.insert(v);

  std::vector<JobId> order;
  order.reserve(k);
  while (!ready.empty()) {
    const int v = ready.pop_min();
    order.push_back(v);
    for (int w : succ[v])
      if (--indegree[w] == 0)
        ready.insert(w);
  }
  if (static_cast<int>(order.size()) == k)
    return Permutation::from_cfp(std::move(order));

  // Every job left over still has a left-over predecessor, so walking
  // predecessors backwards must revisit a job.
  std::vector<std::vector<int>> pred(k + 1);
  for (const auto &c : inst.atomic())
    if (indegree[c.before] > 0 && indegree[c.after] > 0)
      pred[c.after].push_back(c.before);
  int start = 1;
  while (indegree[start] == 0)
    ++start;
  std::vector<int> seen_at(k + 1, -1);
  std::vector<int> walk;
  int v = start;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = *std::min_element(pred[v].begin(), pred[v].end());
  }
  std::vector<int> cycle(walk.begin() + seen_at[v], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  rotate_to_smallest(cycle);
  return UnsatCertificate{std::move(cycle)};
}

Permutation ds_only_solve(const Instance &inst) {
  if (!inst.atomic().empty() || !inst.soft_atomic().empty() ||
      !inst.disjunctive().empty())
    throw PreconditionError(
        "ds-only engine needs A, A_s and D to be empty");
  std::vector<JobId> cfp;
  cfp.reserve(inst.k());
  for (JobId i = 1; i <= inst.b(); ++i) {
    cfp.push_back(i);
    cfp.push_back(i + inst.b());
  }
  for (JobId j = 2 * inst.b() + 1; j <= inst.k(); ++j)
    cfp.push_back(j);
  return Permutation::from_cfp(std::move(cfp));
}

std::optional<UnsatCertificate> unsat_precheck(const Instance &inst) {
  const int k = inst.k();
  const auto succ = atomic_successors(inst, true);
  enum Color : unsigned char { White, Gray, Black };
  std::vector<Color> color(k + 1, White);
  // (vertex, index of next successor to visit)
  std::vector<std::pair<int, std::size_t>> stack;

  for (int root = 1; root <= k; ++root) {
    if (color[root] != White)
      continue;
    stack.push_back({root, 0});
    color[root] = Gray;
    while (!stack.empty()) {
      auto &[v, next] = stack.back();
      if (next == succ[v].size()) {
        color[v] = Black;
        stack.pop_back();
        continue;
      }
      const int w = succ[v][next++];
      if (color[w] == White) {
        color[w] = Gray;
        stack.push_back({w, 0});
      } else if (color[w] == Gray) {
        std::vector<int> cycle;
        auto it = std::find_if(stack.begin(), stack.end(),
                               [w](const auto &f) { return f.first == w; });
        for (; it != stack.end(); ++it)
          cycle.push_back(it->first);
        rotate_to_smallest(cycle);
        return UnsatCertificate{std::move(cycle)};
      }
    }
  }
  return std::nullopt;
}

bool is_cycle_in(const DiGraph &g, const std::vector<int> &cycle) {
  if (cycle.size() < 2)
    return false;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]))
      return false;
  return true;
}

} // namespace ctw::poly
