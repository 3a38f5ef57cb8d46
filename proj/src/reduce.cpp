#include "ctw/reduce.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "ctw/error.hpp"

namespace ctw::reduce {

Instance mas_to_ctw(const DiGraph &g) {
  InstanceData data;
  data.k = g.vertex_count();
  data.b = 0;
  for (const auto &e : g.edges())
    data.soft_atomic.push_back({e.from, e.to});
  return Instance(std::move(data));
}

std::set<Edge> extract_mas(const DiGraph &g, const Permutation &perm) {
  if (perm.size() != g.vertex_count())
    throw InstanceError("permutation has length " +
                        std::to_string(perm.size()) + " but graph has " +
                        std::to_string(g.vertex_count()) + " vertices");
  std::set<Edge> kept;
  for (const auto &e : g.edges())
    if (perm.position_of(e.from) < perm.position_of(e.to))
      kept.insert(e);
  return kept;
}

DiGraph parse_edge_list(std::string_view text, int vertex_count) {
  std::vector<Edge> edges;
  int max_label = 0;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    ++line_no;
    auto line = text.substr(start, end - start);
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::vector<int> nums;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() &&
             (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
        ++i;
      if (i == line.size())
        break;
      int v = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i,
                                       line.data() + line.size(), v);
      if (ec != std::errc() || v < 1)
        throw ParseError("expected a positive vertex label", line_no,
                         static_cast<int>(i + 1));
      nums.push_back(v);
      i = static_cast<std::size_t>(ptr - line.data());
    }
    if (nums.empty())
      continue;
    if (nums.size() != 2)
      throw ParseError("expected 'v w'", line_no, 1);
    if (nums[0] == nums[1])
      throw ParseError("self-loop on vertex " + std::to_string(nums[0]),
                       line_no, 1);
    edges.push_back({nums[0], nums[1]});
    max_label = std::max({max_label, nums[0], nums[1]});
  }
  DiGraph g(std::max(vertex_count, max_label));
  for (const auto &e : edges)
    g.add_edge(e.from, e.to);
  return g;
}

} // namespace ctw::reduce
