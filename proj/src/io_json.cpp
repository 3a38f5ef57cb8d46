#include <json.hpp>

#include "ctw/error.hpp"
#include "ctw/io.hpp"

namespace ctw::io {

using nlohmann::json;

namespace {

const json &field(const json &obj, const char *name) {
  auto it = obj.find(name);
  if (it == obj.end())
    throw ParseError(std::string("/") + name + ": missing required field");
  return *it;
}

int as_int(const json &v, const std::string &path) {
  if (!v.is_number_integer())
    throw ParseError(path + ": expected an integer");
  const auto x = v.get<long long>();
  if (x < -2147483647LL || x > 2147483647LL)
    throw ParseError(path + ": integer out of range");
  return static_cast<int>(x);
}

std::vector<std::vector<int>> tuples(const json &obj, const char *name,
                                     std::size_t arity) {
  const auto &arr = field(obj, name);
  const std::string base = std::string("/") + name;
  if (!arr.is_array())
    throw ParseError(base + ": expected an array");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto path = base + "/" + std::to_string(i);
    const auto &row = arr[i];
    if (arity == 0) {
      out.push_back({as_int(row, path)});
      continue;
    }
    if (!row.is_array() || row.size() != arity)
      throw ParseError(path + ": expected an array of " +
                       std::to_string(arity) + " integers");
    std::vector<int> t;
    for (std::size_t j = 0; j < arity; ++j)
      t.push_back(as_int(row[j], path + "/" + std::to_string(j)));
    out.push_back(std::move(t));
  }
  return out;
}

} // namespace

Instance parse_json(std::string_view text, std::vector<std::string> *warnings) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw ParseError("/: expected an object");

  const auto &tag = field(doc, "format");
  if (!tag.is_string() || tag.get<std::string>() != kJsonFormatTag)
    throw ParseError("/format: expected \"" + std::string(kJsonFormatTag) +
                     "\"");
  const int version = as_int(field(doc, "version"), "/version");
  if (version != kJsonVersion)
    throw ParseError("/version: unsupported version " +
                     std::to_string(version));

  InstanceData data;
  data.k = as_int(field(doc, "k"), "/k");
  data.b = as_int(field(doc, "b"), "/b");
  for (const auto &t : tuples(doc, "atomic", 2))
    data.atomic.push_back({t[0], t[1]});
  for (const auto &t : tuples(doc, "soft_atomic", 2))
    data.soft_atomic.push_back({t[0], t[1]});
  for (const auto &t : tuples(doc, "disjunctive", 4))
    data.disjunctive.push_back({t[0], t[1], t[2], t[3]});
  for (const auto &t : tuples(doc, "direct_successors", 0))
    data.direct_successors.push_back(t[0]);

  try {
    return Instance(std::move(data), warnings);
  } catch (const InstanceError &e) {
    throw ParseError(e.what());
  }
}

std::string emit_json(const Instance &inst) {
  const auto canon = inst.canonical();
  const auto &d = canon.data();
  json doc;
  doc["format"] = kJsonFormatTag;
  doc["version"] = kJsonVersion;
  doc["k"] = d.k;
  doc["b"] = d.b;
  auto pairs = [](const std::vector<AtomicConstraint> &cs) {
    json arr = json::array();
    for (const auto &c : cs)
      arr.push_back({c.before, c.after});
    return arr;
  };
  doc["atomic"] = pairs(d.atomic);
  doc["soft_atomic"] = pairs(d.soft_atomic);
  json disj = json::array();
  for (const auto &c : d.disjunctive)
    disj.push_back(
        {c.first_before, c.first_after, c.second_before, c.second_after});
  doc["disjunctive"] = disj;
  doc["direct_successors"] = d.direct_successors;
  return doc.dump(2) + "\n";
}

} // namespace ctw::io
