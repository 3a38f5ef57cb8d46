#ifndef CTW_GEN_HPP
#define CTW_GEN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctw/core.hpp"

namespace ctw::gen {

enum class GenMode { Satisfiable, Unsatisfiable, DsOnly, AtomicOnly };

std::optional<GenMode> parse_mode(std::string_view text);
const char *to_string(GenMode mode);

struct GenParams {
  int b = 0;
  int n = 0;
  double p_atomic = 0.1;
  /// Per unordered job pair; negative means the default 1/k, which keeps
  /// the expected number of violated soft constraints below k.
  double p_soft = -1.0;
  /// Per (pair, third job) triple.
  double p_disjunctive = 0.05;
  int ds_count = 0;
  std::uint64_t seed = 0;
  GenMode mode = GenMode::Satisfiable;
};

struct Generated {
  Instance instance;
  /// Hidden sequence that satisfies every hard constraint. Unsatisfiable
  /// instances keep the plant the cycle was injected on top of.
  Permutation planted;
};

/// Seeded random instance. Satisfiable, DsOnly and AtomicOnly instances
/// always admit the planted sequence; Unsatisfiable adds a directed cycle of
/// hard atomic constraints. Throws PreconditionError on bad parameters.
Generated generate(const GenParams &params);

struct SuiteEntry {
  std::string id;
  GenParams params;
};

/// Oracle-sized mix (k <= 8): every tenth entry is unsatisfiable, one in
/// ten is direct-successor only, one in ten atomic only, the rest are
/// satisfiable with all constraint types.
std::vector<SuiteEntry> small_suite(std::uint64_t seed, int count);

/// Satisfiable instances with k in [k_min, k_max], sized for anytime runs.
std::vector<SuiteEntry> large_suite(std::uint64_t seed, int count, int k_min,
                                    int k_max);

} // namespace ctw::gen

#endif
