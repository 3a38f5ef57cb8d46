#include <charconv>
#include <sstream>

#include "ctw/error.hpp"
#include "ctw/io.hpp"

namespace ctw::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
      ++i;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r')
      ++i;
    if (i > start)
      out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::optional<long long> to_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    return std::nullopt;
  return v;
}

} // namespace

std::optional<std::vector<Position>> SolutionFile::pfc() const {
  if (order == SequenceOrder::Pfc)
    return sequence;
  if (!is_bijection(sequence))
    return std::nullopt;
  std::vector<Position> out(sequence.size());
  for (std::size_t x = 0; x < sequence.size(); ++x)
    out[sequence[x] - 1] = static_cast<Position>(x + 1);
  return out;
}

SolutionFile parse_solution(std::string_view text) {
  SolutionFile sol;
  bool have_sequence = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    ++line_no;
    auto line = text.substr(start, end - start);
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected 'key: value'", line_no, 1);
    const auto key = trim(line.substr(0, colon));
    const auto value = trim(line.substr(colon + 1));

    if (key == "instance") {
      sol.instance_id = std::string(value);
    } else if (key == "order") {
      if (value == "cfp")
        sol.order = SequenceOrder::Cfp;
      else if (value == "pfc")
        sol.order = SequenceOrder::Pfc;
      else
        throw ParseError("order must be 'cfp' or 'pfc'", line_no,
                         static_cast<int>(colon + 2));
    } else if (key == "sequence") {
      if (have_sequence)
        throw ParseError("sequence given twice", line_no, 1);
      have_sequence = true;
      const auto ws = words(value);
      for (std::size_t i = 0; i < ws.size(); ++i) {
        const auto v = to_int(ws[i]);
        if (!v || *v < 1 || *v > 2147483647LL)
          throw ParseError("sequence entry " + std::to_string(i + 1) + " ('" +
                               std::string(ws[i]) +
                               "') is not a positive integer",
                           line_no, 1);
        sol.sequence.push_back(static_cast<int>(*v));
      }
    } else if (key == "claimed") {
      SolutionFile::Claim claim;
      for (auto w : words(value)) {
        const auto eq = w.find('=');
        const auto v = eq == std::string_view::npos
                           ? std::nullopt
                           : to_int(w.substr(eq + 1));
        if (!v || *v < 0)
          throw ParseError("malformed claim '" + std::string(w) + "'",
                           line_no, 1);
        const auto name = w.substr(0, eq);
        if (name == "S")
          claim.S = *v;
        else if (name == "M")
          claim.M = *v;
        else if (name == "L")
          claim.L = *v;
        else if (name == "N")
          claim.N = *v;
        else if (name == "objective")
          claim.objective = *v;
        else
          throw ParseError("unknown claim field '" + std::string(name) + "'",
                           line_no, 1);
      }
      sol.claimed = claim;
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no, 1);
    }
  }
  if (!have_sequence)
    throw ParseError("missing 'sequence' line");
  return sol;
}

std::string emit_solution(std::string_view instance_id, const Permutation &perm,
                          const std::optional<CostBreakdown> &costs) {
  std::ostringstream out;
  out << "instance: " << instance_id << "\n";
  out << "order: cfp\n";
  out << "sequence:";
  for (JobId j : perm.cfp())
    out << ' ' << j;
  out << "\n";
  if (costs)
    out << "claimed: S=" << costs->S << " M=" << costs->M << " L=" << costs->L
        << " N=" << costs->N << " objective=" << costs->objective << "\n";
  return out.str();
}

} // namespace ctw::io
