#ifndef CTW_REDUCE_HPP
#define CTW_REDUCE_HPP

#include <set>
#include <string_view>

#include "ctw/core.hpp"
#include "ctw/graph.hpp"

namespace ctw::reduce {

/// Maximum acyclic subgraph as CTW: vertex v becomes one-sided job v and
/// every edge (v, w) becomes the soft constraint v ◁ w. The optimal N is
/// |E| minus the size of a maximum acyclic subgraph.
Instance mas_to_ctw(const DiGraph &g);

/// Edges that the wiring sequence keeps pointing forward. The result is
/// always acyclic. Throws InstanceError on a size mismatch.
std::set<Edge> extract_mas(const DiGraph &g, const Permutation &perm);

/// Edge-list text: one "v w" pair per line, '#' comments. Vertices are
/// 1..max(label, vertex_count).
DiGraph parse_edge_list(std::string_view text, int vertex_count = 0);

} // namespace ctw::reduce

#endif
