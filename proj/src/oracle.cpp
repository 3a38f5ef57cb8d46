#include "ctw/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "ctw/error.hpp"

namespace ctw::oracle {

OracleResult enumerate(const Instance &inst, int limit_k) {
  if (inst.k() > limit_k)
    throw LimitError("oracle refuses k=" + std::to_string(inst.k()) +
                     " (limit " + std::to_string(limit_k) + ")");
  OracleResult result;
  std::vector<JobId> cfp(inst.k());
  std::iota(cfp.begin(), cfp.end(), 1);
  do {
    ++result.enumerated;
    auto perm = Permutation::from_cfp(cfp);
    if (!validate(inst, perm).empty())
      continue;
    ++result.valid_count;
    const auto obj = evaluate(inst, perm).objective;
    if (!result.optimal_objective || obj < *result.optimal_objective) {
      result.optimal_objective = obj;
      result.optimal_solutions.clear();
    }
    if (obj == *result.optimal_objective)
      result.optimal_solutions.push_back(std::move(perm));
  } while (std::next_permutation(cfp.begin(), cfp.end()));
  return result;
}

std::int64_t brute_mas(const DiGraph &g, int limit_v) {
  if (g.vertex_count() > limit_v)
    throw LimitError("brute_mas refuses " + std::to_string(g.vertex_count()) +
                     " vertices (limit " + std::to_string(limit_v) + ")");
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 1);
  std::vector<int> rank(g.vertex_count() + 1);
  std::int64_t best = 0;
  do {
    for (std::size_t i = 0; i < order.size(); ++i)
      rank[order[i]] = static_cast<int>(i);
    std::int64_t forward = 0;
    for (const auto &e : g.edges())
      if (rank[e.from] < rank[e.to])
        ++forward;
    best = std::max(best, forward);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

} // namespace ctw::oracle
