#ifndef CTW_POLY_HPP
#define CTW_POLY_HPP

#include <optional>
#include <variant>
#include <vector>

#include "ctw/core.hpp"

namespace ctw::poly {

/// A directed cycle of hard atomic constraints, listed from its smallest job
/// in edge direction (cycle[i] ◁ cycle[i+1], last ◁ first).
struct UnsatCertificate {
  std::vector<JobId> cycle;
  bool operator==(const UnsatCertificate &) const = default;
};

using TopoResult = std::variant<Permutation, UnsatCertificate>;

/// Kahn's algorithm on the hard atomic graph, smallest ready job first.
/// Only for instances with b = 0 and nothing but hard atomic constraints;
/// throws PreconditionError otherwise.
TopoResult topo_solve(const Instance &inst);

/// Wires every pair back to back, then the one-sided jobs:
/// 1, 1+b, 2, 2+b, ..., b, 2b, 2b+1, ..., k. Cost is zero.
/// Requires A = A_s = D = ∅; throws PreconditionError otherwise.
Permutation ds_only_solve(const Instance &inst);

/// Looks for a cycle among hard atomic constraints (iterative DFS). A cycle
/// proves unsatisfiability; no cycle proves nothing.
std::optional<UnsatCertificate> unsat_precheck(const Instance &inst);

/// Every consecutive pair in `cycle` (and last->first) is an edge of g.
bool is_cycle_in(const DiGraph &g, const std::vector<int> &cycle);

} // namespace ctw::poly

#endif
