#ifndef CTW_RESULT_HPP
#define CTW_RESULT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctw/core.hpp"

namespace ctw {

/// Outcome of a solver run. Undefined is only produced when auditing
/// external or malformed results; the built-in engines never return it.
enum class ResultState { Optimal, Suboptimal, Unsatisfiable, Unsolved, Undefined };

const char *to_string(ResultState state);
std::optional<ResultState> parse_result_state(std::string_view text);

struct InstanceMetrics {
  int k = 0;
  int b = 0;
  int n = 0;
  std::size_t atomic = 0;
  std::size_t soft_atomic = 0;
  std::size_t disjunctive = 0;
  std::size_t direct_successors = 0;
  std::int64_t sum_of_constraints = 0;
  /// Constrainedness is a multiple of 0.5; stored doubled to stay exact.
  std::int64_t total_constrainedness_x2 = 0;
  std::int64_t max_constrainedness_x2 = 0;

  double avg_constrainedness() const {
    return k == 0 ? 0.0 : static_cast<double>(total_constrainedness_x2) / (2.0 * k);
  }
  double max_constrainedness() const {
    return static_cast<double>(max_constrainedness_x2) / 2.0;
  }
};

/// One line of a benchmark report.
struct BenchRow {
  std::string instance_id;
  ResultState state = ResultState::Undefined;
  std::optional<CostBreakdown> costs;
  std::optional<Permutation> solution;
  /// Absent when timestamps are suppressed.
  std::optional<std::int64_t> runtime_ms;
  std::int64_t nodes = 0;
  std::optional<std::int64_t> proven_lower_bound;
  std::optional<InstanceMetrics> metrics;
  std::vector<std::string> flags;
  std::string diagnostic;
};

} // namespace ctw

#endif
