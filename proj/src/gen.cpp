#include "ctw/gen.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ctw/error.hpp"

namespace ctw::gen {

namespace {

/// mt19937_64 is fully specified by the standard, unlike the distributions,
/// so the draws below stay byte-identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool chance(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }
  template <typename T> void shuffle(std::vector<T> &v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

private:
  std::mt19937_64 engine_;
};

} // namespace

std::optional<GenMode> parse_mode(std::string_view text) {
  if (text == "satisfiable")
    return GenMode::Satisfiable;
  if (text == "unsatisfiable")
    return GenMode::Unsatisfiable;
  if (text == "ds-only")
    return GenMode::DsOnly;
  if (text == "atomic-only")
    return GenMode::AtomicOnly;
  return std::nullopt;
}

const char *to_string(GenMode mode) {
  switch (mode) {
  case GenMode::Satisfiable:
    return "satisfiable";
  case GenMode::Unsatisfiable:
    return "unsatisfiable";
  case GenMode::DsOnly:
    return "ds-only";
  case GenMode::AtomicOnly:
    return "atomic-only";
  }
  return "satisfiable";
}

Generated generate(const GenParams &params) {
  const int b = params.b;
  const int n = params.n;
  if (b < 0 || n < 0)
    throw PreconditionError("b and n must be non-negative");
  const int k = 2 * b + n;
  const double p_soft =
      params.p_soft < 0 ? (k > 0 ? 1.0 / k : 0.0) : params.p_soft;
  for (double p : {params.p_atomic, p_soft, params.p_disjunctive})
    if (!(p >= 0.0 && p <= 1.0))
      throw PreconditionError("densities must lie in [0, 1]");
  if (params.ds_count < 0 || params.ds_count > 2 * b)
    throw PreconditionError("ds_count must lie in 0..2b");
  if (params.mode == GenMode::AtomicOnly && (b != 0 || params.ds_count != 0))
    throw PreconditionError("atomic-only instances need b = 0");
  if (params.mode == GenMode::Unsatisfiable && k < 2)
    throw PreconditionError("an unsatisfiable instance needs k >= 2");

  Rng rng(params.seed);
  auto other = [b](JobId j) { return j <= b ? j + b : j - b; };

  // Direct successor ends.
  std::vector<JobId> ends(2 * b);
  for (int i = 0; i < 2 * b; ++i)
    ends[i] = i + 1;
  for (int i = 0; i < params.ds_count; ++i)
    std::swap(ends[i], ends[i + rng.below(2 * b - i)]);
  std::vector<JobId> ds(ends.begin(), ends.begin() + params.ds_count);
  std::vector<bool> is_ds(k + 1, false);
  for (JobId e : ds)
    is_ds[e] = true;

  // Plant: pairs with both ends constrained travel as one adjacent unit.
  std::vector<std::vector<JobId>> units;
  for (JobId j = 1; j <= k; ++j) {
    if (j <= b && is_ds[j] && is_ds[j + b]) {
      units.push_back(rng.chance(0.5) ? std::vector<JobId>{j, j + b}
                                      : std::vector<JobId>{j + b, j});
    } else if (j > b && j <= 2 * b && is_ds[j] && is_ds[j - b]) {
      continue;
    } else {
      units.push_back({j});
    }
  }
  rng.shuffle(units);
  std::vector<JobId> cfp;
  for (const auto &u : units)
    cfp.insert(cfp.end(), u.begin(), u.end());
  std::vector<Position> pos(k + 1);
  for (int x = 0; x < k; ++x)
    pos[cfp[x]] = x + 1;
  for (JobId e : ds) {
    const JobId f = other(e);
    if (pos[f] > pos[e] + 1) {
      std::swap(cfp[pos[e] - 1], cfp[pos[f] - 1]);
      std::swap(pos[e], pos[f]);
    }
  }
  auto before = [&](JobId u, JobId v) { return pos[u] < pos[v]; };

  InstanceData data;
  data.k = k;
  data.b = b;
  data.direct_successors = ds;

  if (params.mode != GenMode::DsOnly) {
    std::set<AtomicConstraint> hard;
    for (int x = 0; x < k; ++x)
      for (int y = x + 1; y < k; ++y)
        if (rng.chance(params.p_atomic))
          hard.insert({cfp[x], cfp[y]});

    if (params.mode == GenMode::Unsatisfiable) {
      const int len = 2 + static_cast<int>(rng.below(std::min(k, 4) - 1));
      std::vector<JobId> jobs(k);
      for (int i = 0; i < k; ++i)
        jobs[i] = i + 1;
      for (int i = 0; i < len; ++i)
        std::swap(jobs[i], jobs[i + rng.below(k - i)]);
      for (int i = 0; i < len; ++i)
        hard.insert({jobs[i], jobs[(i + 1) % len]});
    }

    std::set<AtomicConstraint> soft;
    std::set<DisjunctiveConstraint> disj;
    if (params.mode != GenMode::AtomicOnly) {
      for (JobId u = 1; u <= k; ++u)
        for (JobId v = u + 1; v <= k; ++v) {
          if (!rng.chance(p_soft))
            continue;
          const AtomicConstraint c =
              rng.chance(0.5) ? AtomicConstraint{u, v} : AtomicConstraint{v, u};
          if (!hard.contains(c))
            soft.insert(c);
        }

      for (JobId i = 1; i <= b; ++i) {
        const JobId j = i + b;
        for (JobId l = 1; l <= k; ++l) {
          if (l == i || l == j || !rng.chance(params.p_disjunctive))
            continue;
          DisjunctiveConstraint d;
          if (rng.chance(0.5))
            d = {l, i, l, j}; // l before either end
          else if (rng.chance(0.5))
            d = {l, i, j, l}; // l before i, or j before l
          else
            d = {l, j, i, l};
          if (before(d.first_before, d.first_after) ||
              before(d.second_before, d.second_after))
            disj.insert(d);
        }
      }
    }
    data.atomic.assign(hard.begin(), hard.end());
    data.soft_atomic.assign(soft.begin(), soft.end());
    data.disjunctive.assign(disj.begin(), disj.end());
  }
  std::sort(data.direct_successors.begin(), data.direct_successors.end());

  return {Instance(std::move(data)), Permutation::from_cfp(std::move(cfp))};
}

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + index + 1;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string entry_id(const char *prefix, int i) {
  std::string digits = std::to_string(i);
  return prefix + std::string(digits.size() < 3 ? 3 - digits.size() : 0, '0') +
         digits;
}

} // namespace

std::vector<SuiteEntry> small_suite(std::uint64_t seed, int count) {
  std::vector<SuiteEntry> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(mix(seed, static_cast<std::uint64_t>(i)));
    GenParams p;
    p.seed = mix(seed ^ 0x5EEDULL, static_cast<std::uint64_t>(i));
    const int k = 3 + static_cast<int>(rng.below(6)); // 3..8
    switch (i % 10) {
    case 9:
      p.mode = GenMode::Unsatisfiable;
      break;
    case 8:
      p.mode = GenMode::DsOnly;
      break;
    case 7:
      p.mode = GenMode::AtomicOnly;
      break;
    default:
      p.mode = GenMode::Satisfiable;
    }
    if (p.mode == GenMode::AtomicOnly)
      p.b = 0;
    else if (p.mode == GenMode::DsOnly)
      p.b = 1 + static_cast<int>(rng.below(k / 2));
    else
      p.b = static_cast<int>(rng.below(k / 2 + 1));
    p.n = k - 2 * p.b;
    p.p_atomic = 0.05 + 0.25 * static_cast<double>(rng.below(5)) / 4.0;
    p.p_soft = 0.1 + 0.1 * static_cast<double>(rng.below(3));
    p.p_disjunctive = 0.1 + 0.2 * static_cast<double>(rng.below(3));
    p.ds_count = p.mode == GenMode::AtomicOnly
                     ? 0
                     : static_cast<int>(rng.below(2 * p.b + 1));
    out.push_back({entry_id("s", i), p});
  }
  return out;
}

std::vector<SuiteEntry> large_suite(std::uint64_t seed, int count, int k_min,
                                    int k_max) {
  if (k_min < 2 || k_max < k_min)
    throw PreconditionError("large suite needs 2 <= k_min <= k_max");
  std::vector<SuiteEntry> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(mix(seed, 1000000 + static_cast<std::uint64_t>(i)));
    GenParams p;
    p.seed = mix(seed ^ 0x1A46EULL, static_cast<std::uint64_t>(i));
    const int k = k_min + static_cast<int>(rng.below(k_max - k_min + 1));
    p.b = k / 2 - static_cast<int>(rng.below(k / 8 + 1));
    p.n = k - 2 * p.b;
    p.p_atomic = 4.0 / k;
    p.p_soft = 1.0 / k;
    p.p_disjunctive = 1.0 / k;
    p.ds_count = p.b / 4;
    p.mode = GenMode::Satisfiable;
    out.push_back({entry_id("l", i), p});
  }
  return out;
}

} // namespace ctw::gen
