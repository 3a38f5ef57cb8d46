#include "ctw/graph.hpp"

#include <string>

#include "ctw/error.hpp"

namespace ctw {

DiGraph::DiGraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0)
    throw InstanceError("negative vertex count");
}

void DiGraph::add_edge(int from, int to) {
  if (from < 1 || from > vertex_count_ || to < 1 || to > vertex_count_)
    throw InstanceError("edge (" + std::to_string(from) + "," +
                        std::to_string(to) + ") outside vertex range 1.." +
                        std::to_string(vertex_count_));
  if (from == to)
    throw InstanceError("self-loop on vertex " + std::to_string(from));
  edges_.insert({from, to});
}

std::vector<std::vector<int>> DiGraph::successors() const {
  std::vector<std::vector<int>> adj(vertex_count_ + 1);
  for (const auto &e : edges_)
    adj[e.from].push_back(e.to);
  return adj;
}

std::vector<std::vector<int>> DiGraph::predecessors() const {
  std::vector<std::vector<int>> adj(vertex_count_ + 1);
  for (const auto &e : edges_)
    adj[e.to].push_back(e.from);
  return adj;
}

} // namespace ctw
