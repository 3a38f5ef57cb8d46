#include <sstream>

#include "ctw/io.hpp"

namespace ctw::io {

namespace {

void rows(std::ostringstream &out, const char *name, std::size_t width,
          const std::vector<std::vector<int>> &table) {
  out << name << " = ";
  if (table.empty()) {
    out << "array2d(1..0, 1.." << width << ", []);\n";
    return;
  }
  out << "[|";
  for (const auto &row : table) {
    out << ' ';
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? ", " : "") << row[i];
    out << " |";
  }
  out << "];\n";
}

} // namespace

std::string emit_dzn(const Instance &inst) {
  const auto canon = inst.canonical();
  const auto &d = canon.data();
  std::vector<std::vector<int>> atomic, soft, disj;
  for (const auto &c : d.atomic)
    atomic.push_back({c.before, c.after});
  for (const auto &c : d.soft_atomic)
    soft.push_back({c.before, c.after});
  for (const auto &c : d.disjunctive)
    disj.push_back(
        {c.first_before, c.first_after, c.second_before, c.second_after});

  std::ostringstream out;
  out << "k = " << d.k << ";\n";
  out << "b = " << d.b << ";\n";
  rows(out, "AtomicConstraints", 2, atomic);
  rows(out, "DisjunctiveConstraints", 4, disj);
  out << "DirectSuccessors = ";
  if (d.direct_successors.empty()) {
    out << "array1d(1..0, []);\n";
  } else {
    out << '[';
    for (std::size_t i = 0; i < d.direct_successors.size(); ++i)
      out << (i ? ", " : "") << d.direct_successors[i];
    out << "];\n";
  }
  rows(out, "SoftAtomicConstraints", 2, soft);
  return out.str();
}

} // namespace ctw::io
