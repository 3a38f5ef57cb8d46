#include "ctw/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <type_traits>

#include "ctw/error.hpp"

namespace ctw {

namespace {

std::string show(const AtomicConstraint &c) {
  return "<" + std::to_string(c.before) + "," + std::to_string(c.after) + ">";
}

std::string show(const DisjunctiveConstraint &d) {
  std::ostringstream out;
  out << '<' << d.first_before << ',' << d.first_after << ','
      << d.second_before << ',' << d.second_after << '>';
  return out.str();
}

void check_job(JobId j, int k, const std::string &where) {
  if (j < 1 || j > k)
    throw InstanceError(where + ": job " + std::to_string(j) +
                        " outside 1.." + std::to_string(k));
}

template <typename T>
void dedup(std::vector<T> &items, const char *list_name,
           std::vector<std::string> *warnings) {
  std::set<T> seen;
  std::vector<T> kept;
  kept.reserve(items.size());
  for (const auto &item : items) {
    if (seen.insert(item).second) {
      kept.push_back(item);
    } else if (warnings) {
      if constexpr (std::is_same_v<T, JobId>)
        warnings->push_back(std::string(list_name) + ": duplicate entry " +
                            std::to_string(item) + " dropped");
      else
        warnings->push_back(std::string(list_name) + ": duplicate entry " +
                            show(item) + " dropped");
    }
  }
  items = std::move(kept);
}

template <typename T> std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

JobId partner(JobId i, int b) {
  if (i < 1 || i > 2 * b)
    throw InstanceError("job " + std::to_string(i) +
                        " is not a two-sided cable end (b=" +
                        std::to_string(b) + ")");
  return i <= b ? i + b : i - b;
}

Instance::Instance(InstanceData data, std::vector<std::string> *warnings)
    : data_(std::move(data)) {
  const int k = data_.k;
  const int b = data_.b;
  if (b < 0)
    throw InstanceError("b must be non-negative, got " + std::to_string(b));
  if (k < 2 * b)
    throw InstanceError("k=" + std::to_string(k) + " is smaller than 2b=" +
                        std::to_string(2 * b));

  for (const auto &c : data_.atomic) {
    check_job(c.before, k, "atomic constraint " + show(c));
    check_job(c.after, k, "atomic constraint " + show(c));
    if (c.before == c.after)
      throw InstanceError("atomic constraint " + show(c) +
                          ": before equals after");
  }
  for (const auto &c : data_.soft_atomic) {
    check_job(c.before, k, "soft atomic constraint " + show(c));
    check_job(c.after, k, "soft atomic constraint " + show(c));
    if (c.before == c.after)
      throw InstanceError("soft atomic constraint " + show(c) +
                          ": before equals after");
  }
  for (const auto &d : data_.disjunctive) {
    const auto where = "disjunctive constraint " + show(d);
    check_job(d.first_before, k, where);
    check_job(d.first_after, k, where);
    check_job(d.second_before, k, where);
    check_job(d.second_after, k, where);
    if (d.first_before == d.first_after || d.second_before == d.second_after)
      throw InstanceError(where + ": a disjunct has before equal to after");
  }
  for (JobId i : data_.direct_successors) {
    if (i < 1 || i > 2 * b)
      throw InstanceError("direct successor " + std::to_string(i) +
                          " is not a two-sided cable end (1.." +
                          std::to_string(2 * b) + ")");
  }

  dedup(data_.atomic, "AtomicConstraints", warnings);
  dedup(data_.soft_atomic, "SoftAtomicConstraints", warnings);
  dedup(data_.disjunctive, "DisjunctiveConstraints", warnings);
  dedup(data_.direct_successors, "DirectSuccessors", warnings);

  std::set<AtomicConstraint> hard(data_.atomic.begin(), data_.atomic.end());
  for (const auto &c : data_.soft_atomic)
    if (hard.contains(c))
      throw InstanceError("constraint " + show(c) +
                          " is both hard and soft atomic");
}

Instance Instance::canonical() const {
  Instance out;
  out.data_ = data_;
  std::sort(out.data_.atomic.begin(), out.data_.atomic.end());
  std::sort(out.data_.soft_atomic.begin(), out.data_.soft_atomic.end());
  std::sort(out.data_.disjunctive.begin(), out.data_.disjunctive.end());
  std::sort(out.data_.direct_successors.begin(),
            out.data_.direct_successors.end());
  return out;
}

bool Instance::operator==(const Instance &other) const {
  return k() == other.k() && b() == other.b() &&
         sorted(data_.atomic) == sorted(other.data_.atomic) &&
         sorted(data_.soft_atomic) == sorted(other.data_.soft_atomic) &&
         sorted(data_.disjunctive) == sorted(other.data_.disjunctive) &&
         sorted(data_.direct_successors) ==
             sorted(other.data_.direct_successors);
}

bool is_bijection(std::span<const int> values) {
  const auto n = values.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v])
      return false;
    seen[v] = true;
  }
  return true;
}

Permutation Permutation::from_cfp(std::vector<JobId> cfp) {
  if (!is_bijection(cfp))
    throw InstanceError("sequence is not a permutation of 1.." +
                        std::to_string(cfp.size()));
  Permutation p;
  p.pfc_.resize(cfp.size());
  for (std::size_t x = 0; x < cfp.size(); ++x)
    p.pfc_[cfp[x] - 1] = static_cast<Position>(x + 1);
  p.cfp_ = std::move(cfp);
  return p;
}

Permutation Permutation::from_pfc(std::vector<Position> pfc) {
  if (!is_bijection(pfc))
    throw InstanceError("positions are not a permutation of 1.." +
                        std::to_string(pfc.size()));
  Permutation p;
  p.cfp_.resize(pfc.size());
  for (std::size_t j = 0; j < pfc.size(); ++j)
    p.cfp_[pfc[j] - 1] = static_cast<JobId>(j + 1);
  p.pfc_ = std::move(pfc);
  return p;
}

Permutation Permutation::identity(int k) {
  std::vector<JobId> cfp(k);
  for (int i = 0; i < k; ++i)
    cfp[i] = i + 1;
  return from_cfp(std::move(cfp));
}

const char *to_string(ViolationKind kind) {
  switch (kind) {
  case ViolationKind::NotBijective:
    return "not_bijective";
  case ViolationKind::Atomic:
    return "atomic";
  case ViolationKind::Disjunctive:
    return "disjunctive";
  case ViolationKind::DirectSuccessor:
    return "direct_successor";
  }
  return "unknown";
}

std::vector<Violation> validate_pfc(const Instance &inst,
                                    std::span<const Position> pfc) {
  if (static_cast<int>(pfc.size()) != inst.k())
    throw InstanceError("permutation has length " +
                        std::to_string(pfc.size()) + " but instance has k=" +
                        std::to_string(inst.k()));

  std::vector<Violation> out;
  if (!is_bijection(pfc)) {
    std::vector<int> owner(pfc.size() + 1, 0);
    for (std::size_t j = 0; j < pfc.size(); ++j) {
      const int x = pfc[j];
      if (x < 1 || x > inst.k()) {
        out.push_back({ViolationKind::NotBijective, j + 1,
                       "job " + std::to_string(j + 1) + " has position " +
                           std::to_string(x) + " outside 1.." +
                           std::to_string(inst.k())});
        return out;
      }
      if (owner[x] != 0) {
        out.push_back({ViolationKind::NotBijective, j + 1,
                       "jobs " + std::to_string(owner[x]) + " and " +
                           std::to_string(j + 1) + " share position " +
                           std::to_string(x)});
        return out;
      }
      owner[x] = static_cast<int>(j + 1);
    }
  }

  auto pos = [&](JobId j) { return pfc[j - 1]; };
  const auto atomic = inst.atomic();
  for (std::size_t i = 0; i < atomic.size(); ++i) {
    const auto &c = atomic[i];
    if (!(pos(c.before) < pos(c.after)))
      out.push_back({ViolationKind::Atomic, i,
                     std::to_string(c.before) + " must precede " +
                         std::to_string(c.after)});
  }
  const auto disj = inst.disjunctive();
  for (std::size_t i = 0; i < disj.size(); ++i) {
    const auto &d = disj[i];
    if (!(pos(d.first_before) < pos(d.first_after) ||
          pos(d.second_before) < pos(d.second_after)))
      out.push_back({ViolationKind::Disjunctive, i,
                     "neither " + std::to_string(d.first_before) + " before " +
                         std::to_string(d.first_after) + " nor " +
                         std::to_string(d.second_before) + " before " +
                         std::to_string(d.second_after)});
  }
  const auto ds = inst.direct_successors();
  for (std::size_t n = 0; n < ds.size(); ++n) {
    const JobId i = ds[n];
    const JobId j = inst.partner(i);
    if (!(pos(j) == pos(i) + 1 || pos(j) < pos(i)))
      out.push_back({ViolationKind::DirectSuccessor, n,
                     std::to_string(j) + " must directly follow or precede " +
                         std::to_string(i)});
  }
  return out;
}

std::vector<Violation> validate(const Instance &inst, const Permutation &perm) {
  return validate_pfc(inst, perm.pfc());
}

namespace {

void check_shape(const Instance &inst, const Permutation &perm) {
  if (perm.size() != inst.k())
    throw InstanceError("permutation has length " +
                        std::to_string(perm.size()) + " but instance has k=" +
                        std::to_string(inst.k()));
}

int gap(const Permutation &perm, JobId i, int b) {
  return std::abs(perm.position_of(i) - perm.position_of(i + b));
}

} // namespace

std::int64_t cost_S(const Instance &inst, const Permutation &perm) {
  check_shape(inst, perm);
  std::int64_t s = 0;
  for (JobId i = 1; i <= inst.b(); ++i)
    if (gap(perm, i, inst.b()) > 1)
      ++s;
  return s;
}

std::int64_t cost_M(const Instance &inst, const Permutation &perm) {
  check_shape(inst, perm);
  if (inst.b() == 0)
    return 0;
  // Each pair adds one to every position strictly inside its span.
  std::vector<int> delta(inst.k() + 2, 0);
  for (JobId i = 1; i <= inst.b(); ++i) {
    const Position a = perm.position_of(i), c = perm.position_of(i + inst.b());
    const Position lo = std::min(a, c), hi = std::max(a, c);
    if (hi - lo > 1) {
      delta[lo + 1] += 1;
      delta[hi] -= 1;
    }
  }
  std::int64_t best = 0, running = 0;
  for (Position x = 1; x <= inst.k(); ++x) {
    running += delta[x];
    best = std::max(best, running);
  }
  return best;
}

std::int64_t cost_L(const Instance &inst, const Permutation &perm) {
  check_shape(inst, perm);
  std::int64_t best = 0;
  for (JobId i = 1; i <= inst.b(); ++i)
    best = std::max<std::int64_t>(best, gap(perm, i, inst.b()) - 1);
  return best;
}

std::int64_t cost_N(const Instance &inst, const Permutation &perm) {
  check_shape(inst, perm);
  std::int64_t n = 0;
  for (const auto &c : inst.soft_atomic())
    if (perm.position_of(c.before) > perm.position_of(c.after))
      ++n;
  return n;
}

std::int64_t edge_cost_S(const Instance &inst, const Permutation &perm) {
  check_shape(inst, perm);
  std::int64_t s = 0;
  for (Position x = 1; x < inst.k(); ++x) {
    const JobId j = perm.job_at(x);
    if (!inst.is_two_sided(j))
      continue;
    if (perm.position_of(inst.partner(j)) > x + 1)
      ++s;
  }
  return s;
}

std::int64_t objective(std::int64_t S, std::int64_t M, std::int64_t L,
                       std::int64_t N, std::int64_t k) {
  if (S < 0 || M < 0 || L < 0 || N < 0 || k < 0)
    throw InstanceError("objective terms must be non-negative");
  std::int64_t k2, k3, a, b, c, sum;
  if (__builtin_mul_overflow(k, k, &k2) || __builtin_mul_overflow(k2, k, &k3) ||
      __builtin_mul_overflow(k3, S, &a) || __builtin_mul_overflow(k2, M, &b) ||
      __builtin_mul_overflow(k, L, &c) || __builtin_add_overflow(a, b, &sum) ||
      __builtin_add_overflow(sum, c, &sum) ||
      __builtin_add_overflow(sum, N, &sum))
    throw OverflowError("objective overflows 64-bit range for k=" +
                        std::to_string(k));
  return sum;
}

CostBreakdown evaluate(const Instance &inst, const Permutation &perm) {
  CostBreakdown c;
  c.S = cost_S(inst, perm);
  c.M = cost_M(inst, perm);
  c.L = cost_L(inst, perm);
  c.N = cost_N(inst, perm);
  c.objective = objective(c.S, c.M, c.L, c.N, inst.k());
  return c;
}

DiGraph hard_atomic_graph(const Instance &inst) {
  DiGraph g(inst.k());
  for (const auto &c : inst.atomic())
    g.add_edge(c.before, c.after);
  return g;
}

} // namespace ctw
