#ifndef CTW_IO_HPP
#define CTW_IO_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctw/core.hpp"
#include "ctw/result.hpp"

namespace ctw::io {

// Instance formats ---------------------------------------------------------

/// Parses the OPL-style .dat format:
///
///     k = 26;
///     b = 6;
///     AtomicConstraints = {<1,3>, <2,3>};
///     SoftAtomicConstraints = {<2,1>};
///     DisjunctiveConstraints = {<8,15,8,16>};
///     DirectSuccessors = {1,2,8,7,};
///
/// Whitespace and `//`, `/* */` comments are ignored, a trailing comma is
/// allowed inside a set, and a missing set means an empty one. An elision
/// `...` inside a set stands for omitted entries; it is skipped with a
/// warning. Unknown or
/// repeated parameters are errors. Syntax errors carry line and column;
/// instance invariant failures are rethrown as ParseError naming the datum.
Instance parse_dat(std::string_view text,
                   std::vector<std::string> *warnings = nullptr);

/// Canonical .dat text; sets are sorted ascending.
std::string emit_dat(const Instance &inst);

/// MiniZinc data with the six parameters k, b, AtomicConstraints,
/// DisjunctiveConstraints, DirectSuccessors and SoftAtomicConstraints.
std::string emit_dzn(const Instance &inst);

inline constexpr std::string_view kJsonFormatTag = "ctw-instance";
inline constexpr int kJsonVersion = 1;

/// JSON instance. Required fields: "format" ("ctw-instance"), "version" (1),
/// "k", "b", "atomic", "soft_atomic", "disjunctive", "direct_successors".
/// Schema errors name the JSON pointer of the offending value.
Instance parse_json(std::string_view text,
                    std::vector<std::string> *warnings = nullptr);
std::string emit_json(const Instance &inst);

enum class InstanceFormat { Dat, Dzn, Json };

std::optional<InstanceFormat> parse_format(std::string_view name);
/// Guesses from the file extension (.dat, .dzn, .json).
std::optional<InstanceFormat> format_from_path(const std::filesystem::path &p);

std::string emit(const Instance &inst, InstanceFormat format);

std::string read_file(const std::filesystem::path &p);
/// Reads a .dat or .json instance, picking the parser from the extension
/// (anything not ending in .json is read as .dat).
Instance load_instance(const std::filesystem::path &p,
                       std::vector<std::string> *warnings = nullptr);

// Solutions ----------------------------------------------------------------

enum class SequenceOrder { Cfp, Pfc };

/// A solution as written by a solver. The sequence is kept raw so that
/// malformed permutations can be reported instead of rejected at parse time.
///
/// Text form, one `key: value` per line, `#` starts a comment:
///
///     instance: R024
///     order: cfp
///     sequence: 5 3 4 2 1
///     claimed: S=1 M=1 L=2 N=1 objective=161
///
/// `order` is `cfp` (job per position) or `pfc` (position per job);
/// `claimed` is optional and may list any subset of the five fields.
struct SolutionFile {
  std::string instance_id;
  SequenceOrder order = SequenceOrder::Cfp;
  std::vector<int> sequence;
  struct Claim {
    std::optional<std::int64_t> S, M, L, N, objective;
  };
  std::optional<Claim> claimed;

  /// Position per job, or nullopt when a cfp sequence cannot be inverted.
  std::optional<std::vector<Position>> pfc() const;
};

SolutionFile parse_solution(std::string_view text);
std::string emit_solution(std::string_view instance_id, const Permutation &perm,
                          const std::optional<CostBreakdown> &costs);

// Reports --------------------------------------------------------------------

/// Header: instance,k,b,state,S,M,L,N,objective,runtime_ms,nodes,
/// sum_of_constraints,avg_constrainedness,max_constrainedness,flags.
/// Constrainedness is printed with one decimal, flags are ';'-joined.
std::string emit_report_csv(std::span<const BenchRow> rows);

/// Metrics-only CSV: instance,k,b,n,atomic,soft_atomic,disjunctive,
/// direct_successors,sum_of_constraints,avg_constrainedness,
/// max_constrainedness.
std::string emit_metrics_csv(
    std::span<const std::pair<std::string, InstanceMetrics>> rows);

/// Parses a report produced by emit_report_csv back into rows (costs, state,
/// flags and counters; metrics are not reconstructed). Malformed rows throw
/// ParseError with the 1-based row index.
std::vector<BenchRow> parse_report_csv(std::string_view text);

} // namespace ctw::io

#endif
