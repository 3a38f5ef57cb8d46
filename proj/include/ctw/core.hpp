#ifndef CTW_CORE_HPP
#define CTW_CORE_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ctw/graph.hpp"

namespace ctw {

/// Job (cable end) label, 1-based. Jobs 1..b pair with b+1..2b, jobs
/// 2b+1..k are one-sided.
using JobId = int;
/// Slot in the wiring sequence, 1-based.
using Position = int;

/// before ◁ after.
struct AtomicConstraint {
  JobId before;
  JobId after;
  auto operator<=>(const AtomicConstraint &) const = default;
};

/// (first_before ◁ first_after) ∨ (second_before ◁ second_after).
struct DisjunctiveConstraint {
  JobId first_before;
  JobId first_after;
  JobId second_before;
  JobId second_after;
  auto operator<=>(const DisjunctiveConstraint &) const = default;
};

/// Raw, unchecked instance fields. Turn into an Instance to validate.
struct InstanceData {
  int k = 0;
  int b = 0;
  std::vector<AtomicConstraint> atomic;
  std::vector<AtomicConstraint> soft_atomic;
  std::vector<DisjunctiveConstraint> disjunctive;
  /// Entry i stands for i ◀ partner(i).
  std::vector<JobId> direct_successors;
};

/// Returns the other end of two-sided job i. Throws InstanceError when i is
/// not in 1..2b.
JobId partner(JobId i, int b);

/// An immutable, validated CTW instance.
///
/// Construction checks every structural invariant: k >= 2b >= 0, all job ids
/// in range, no self-precedences, direct successors only on two-sided ends,
/// and disjoint hard/soft atomic sets. Duplicate entries inside one list are
/// dropped (first occurrence kept) and reported through `warnings`.
class Instance {
public:
  Instance() = default;
  explicit Instance(InstanceData data,
                    std::vector<std::string> *warnings = nullptr);

  int k() const { return data_.k; }
  int b() const { return data_.b; }
  int one_sided() const { return data_.k - 2 * data_.b; }

  std::span<const AtomicConstraint> atomic() const { return data_.atomic; }
  std::span<const AtomicConstraint> soft_atomic() const {
    return data_.soft_atomic;
  }
  std::span<const DisjunctiveConstraint> disjunctive() const {
    return data_.disjunctive;
  }
  std::span<const JobId> direct_successors() const {
    return data_.direct_successors;
  }
  const InstanceData &data() const { return data_; }

  bool is_two_sided(JobId j) const { return j >= 1 && j <= 2 * data_.b; }
  JobId partner(JobId j) const { return ctw::partner(j, data_.b); }

  /// Same instance with every list sorted ascending.
  Instance canonical() const;

  /// Set equality: list order is not significant.
  bool operator==(const Instance &other) const;

private:
  InstanceData data_;
};

/// Dual view of a wiring sequence: position per job (pfc) and job per
/// position (cfp). Always a bijection on 1..size().
class Permutation {
public:
  Permutation() = default;

  static Permutation from_cfp(std::vector<JobId> cfp);
  static Permutation from_pfc(std::vector<Position> pfc);
  static Permutation identity(int k);

  int size() const { return static_cast<int>(pfc_.size()); }
  Position position_of(JobId j) const { return pfc_[j - 1]; }
  JobId job_at(Position x) const { return cfp_[x - 1]; }
  std::span<const Position> pfc() const { return pfc_; }
  std::span<const JobId> cfp() const { return cfp_; }

  bool operator==(const Permutation &) const = default;

private:
  std::vector<Position> pfc_;
  std::vector<JobId> cfp_;
};

/// True iff values is a permutation of 1..values.size().
bool is_bijection(std::span<const int> values);

struct CostBreakdown {
  std::int64_t S = 0;
  std::int64_t M = 0;
  std::int64_t L = 0;
  std::int64_t N = 0;
  std::int64_t objective = 0;
  bool operator==(const CostBreakdown &) const = default;
};

enum class ViolationKind { NotBijective, Atomic, Disjunctive, DirectSuccessor };

const char *to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  /// Index into the offending constraint list, or the offending job for
  /// NotBijective.
  std::size_t index;
  std::string detail;
};

/// Checks the hard constraints A, D and the direct successors. Soft
/// constraints never produce violations. Throws InstanceError if the
/// permutation length differs from k.
std::vector<Violation> validate(const Instance &inst, const Permutation &perm);

/// Same as validate() but on a raw position-per-job list that may not be a
/// bijection; malformed input yields a single NotBijective violation.
std::vector<Violation> validate_pfc(const Instance &inst,
                                    std::span<const Position> pfc);

std::int64_t cost_S(const Instance &inst, const Permutation &perm);
std::int64_t cost_M(const Instance &inst, const Permutation &perm);
std::int64_t cost_L(const Instance &inst, const Permutation &perm);
std::int64_t cost_N(const Instance &inst, const Permutation &perm);

/// S as the sum of tour edge costs: edge q(x) -> q(x+1) costs 1 iff q(x) is
/// a two-sided end whose partner is neither already placed nor placed next.
std::int64_t edge_cost_S(const Instance &inst, const Permutation &perm);

/// k^3 S + k^2 M + k L + N in exact 64-bit arithmetic. Throws OverflowError
/// rather than wrapping, and InstanceError on negative inputs.
std::int64_t objective(std::int64_t S, std::int64_t M, std::int64_t L,
                       std::int64_t N, std::int64_t k);

/// All four criteria plus the weighted objective.
CostBreakdown evaluate(const Instance &inst, const Permutation &perm);

/// One vertex per job, one edge per hard atomic constraint.
DiGraph hard_atomic_graph(const Instance &inst);

/// Instance-level flag: the weighting's lexicographic reading needs N < k.
inline bool soft_exceeds_k(const CostBreakdown &c, int k) { return c.N >= k; }

} // namespace ctw

#endif
