#ifndef CTW_ORACLE_HPP
#define CTW_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ctw/core.hpp"
#include "ctw/graph.hpp"

namespace ctw::oracle {

inline constexpr int kDefaultLimit = 10;

struct OracleResult {
  std::int64_t valid_count = 0;
  std::optional<std::int64_t> optimal_objective;
  /// Every optimal permutation, in lexicographic cfp order.
  std::vector<Permutation> optimal_solutions;
  /// Always k!.
  std::int64_t enumerated = 0;
};

/// Exhaustive ground truth: walks all k! wiring sequences in lexicographic
/// cfp order. Throws LimitError when k exceeds limit_k.
OracleResult enumerate(const Instance &inst, int limit_k = kDefaultLimit);

/// Size of a maximum acyclic subgraph, found by trying every vertex order
/// and keeping the edges that point forward. Throws LimitError above
/// limit_v vertices.
std::int64_t brute_mas(const DiGraph &g, int limit_v = kDefaultLimit);

} // namespace ctw::oracle

#endif
