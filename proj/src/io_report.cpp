#include <charconv>
#include <cstdio>
#include <sstream>

#include "ctw/error.hpp"
#include "ctw/io.hpp"

namespace ctw::io {

namespace {

constexpr const char *kReportHeader =
    "instance,k,b,state,S,M,L,N,objective,runtime_ms,nodes,"
    "sum_of_constraints,avg_constrainedness,max_constrainedness,flags";

constexpr const char *kMetricsHeader =
    "instance,k,b,n,atomic,soft_atomic,disjunctive,direct_successors,"
    "sum_of_constraints,avg_constrainedness,max_constrainedness";

std::string one_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

std::string quote(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos)
    return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

std::optional<std::int64_t> opt_int(const std::string &s, std::size_t row,
                                    const char *column) {
  if (s.empty())
    return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("report row " + std::to_string(row) + ": column " +
                     column + " is not an integer ('" + s + "')");
  return v;
}

} // namespace

std::string emit_report_csv(std::span<const BenchRow> rows) {
  std::ostringstream out;
  out << kReportHeader << "\n";
  for (const auto &r : rows) {
    out << quote(r.instance_id) << ',';
    if (r.metrics)
      out << r.metrics->k << ',' << r.metrics->b << ',';
    else
      out << ",,";
    out << to_string(r.state) << ',';
    if (r.costs)
      out << r.costs->S << ',' << r.costs->M << ',' << r.costs->L << ','
          << r.costs->N << ',' << r.costs->objective << ',';
    else
      out << ",,,,,";
    if (r.runtime_ms)
      out << *r.runtime_ms;
    out << ',' << r.nodes << ',';
    if (r.metrics)
      out << r.metrics->sum_of_constraints << ','
          << one_decimal(r.metrics->avg_constrainedness()) << ','
          << one_decimal(r.metrics->max_constrainedness()) << ',';
    else
      out << ",,,";
    std::string flags;
    for (const auto &f : r.flags)
      flags += (flags.empty() ? "" : ";") + f;
    out << quote(flags) << "\n";
  }
  return out.str();
}

std::string emit_metrics_csv(
    std::span<const std::pair<std::string, InstanceMetrics>> rows) {
  std::ostringstream out;
  out << kMetricsHeader << "\n";
  for (const auto &[id, m] : rows)
    out << quote(id) << ',' << m.k << ',' << m.b << ',' << m.n << ','
        << m.atomic << ',' << m.soft_atomic << ',' << m.disjunctive << ','
        << m.direct_successors << ',' << m.sum_of_constraints << ','
        << one_decimal(m.avg_constrainedness()) << ','
        << one_decimal(m.max_constrainedness()) << "\n";
  return out.str();
}

std::vector<BenchRow> parse_report_csv(std::string_view text) {
  std::vector<BenchRow> rows;
  std::size_t start = 0;
  std::size_t index = 0;
  bool header = true;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    if (header) {
      if (line != kReportHeader)
        throw ParseError("report header mismatch");
      header = false;
      continue;
    }
    if (line.empty())
      continue;
    ++index;
    const auto cells = split_csv_line(line);
    if (cells.size() != 15)
      throw ParseError("report row " + std::to_string(index) + ": expected 15 "
                       "columns, got " + std::to_string(cells.size()));
    BenchRow r;
    r.instance_id = cells[0];
    const auto state = parse_result_state(cells[3]);
    if (!state)
      throw ParseError("report row " + std::to_string(index) +
                       ": unknown state '" + cells[3] + "'");
    r.state = *state;
    const auto S = opt_int(cells[4], index, "S");
    const auto M = opt_int(cells[5], index, "M");
    const auto L = opt_int(cells[6], index, "L");
    const auto N = opt_int(cells[7], index, "N");
    const auto obj = opt_int(cells[8], index, "objective");
    if (S && M && L && N && obj)
      r.costs = CostBreakdown{*S, *M, *L, *N, *obj};
    else if (S || M || L || N || obj)
      throw ParseError("report row " + std::to_string(index) +
                       ": partial cost columns");
    r.runtime_ms = opt_int(cells[9], index, "runtime_ms");
    r.nodes = opt_int(cells[10], index, "nodes").value_or(0);
    std::string_view flags = cells[14];
    while (!flags.empty()) {
      const auto semi = flags.find(';');
      r.flags.emplace_back(flags.substr(0, semi));
      if (semi == std::string_view::npos)
        break;
      flags.remove_prefix(semi + 1);
    }
    rows.push_back(std::move(r));
  }
  if (header)
    throw ParseError("empty report (no header)");
  return rows;
}

} // namespace ctw::io

namespace ctw {

const char *to_string(ResultState state) {
  switch (state) {
  case ResultState::Optimal:
    return "optimal";
  case ResultState::Suboptimal:
    return "suboptimal";
  case ResultState::Unsatisfiable:
    return "unsatisfiable";
  case ResultState::Unsolved:
    return "unsolved";
  case ResultState::Undefined:
    return "undefined";
  }
  return "undefined";
}

std::optional<ResultState> parse_result_state(std::string_view text) {
  for (auto s : {ResultState::Optimal, ResultState::Suboptimal,
                 ResultState::Unsatisfiable, ResultState::Unsolved,
                 ResultState::Undefined})
    if (text == to_string(s))
      return s;
  return std::nullopt;
}

} // namespace ctw
