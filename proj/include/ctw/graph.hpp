#ifndef CTW_GRAPH_HPP
#define CTW_GRAPH_HPP

#include <compare>
#include <set>
#include <vector>

namespace ctw {

struct Edge {
  int from;
  int to;
  auto operator<=>(const Edge &) const = default;
};

/// Directed graph over vertices 1..vertex_count. Parallel edges collapse,
/// self-loops are rejected.
class DiGraph {
public:
  explicit DiGraph(int vertex_count = 0);

  void add_edge(int from, int to);

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::set<Edge> &edges() const { return edges_; }
  bool has_edge(int from, int to) const { return edges_.contains({from, to}); }

  /// Adjacency lists indexed by vertex (index 0 unused), sorted ascending.
  std::vector<std::vector<int>> successors() const;
  std::vector<std::vector<int>> predecessors() const;

  bool operator==(const DiGraph &) const = default;

private:
  int vertex_count_;
  std::set<Edge> edges_;
};

} // namespace ctw

#endif
