#ifndef CTW_TESTS_SUPPORT_HPP
#define CTW_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ctw/core.hpp"

namespace ctw::test {

inline std::filesystem::path fixture(const std::string &name) {
  return std::filesystem::path(CTW_FIXTURE_DIR) / name;
}

/// k=5, b=2: pairs <1,3>, <2,4>, one-sided job 5.
inline Instance example(std::vector<AtomicConstraint> soft = {}) {
  InstanceData d;
  d.k = 5;
  d.b = 2;
  d.atomic = {{3, 4}, {4, 1}, {5, 4}};
  d.soft_atomic = std::move(soft);
  d.disjunctive = {{2, 5, 2, 1}};
  d.direct_successors = {4};
  return Instance(std::move(d));
}

inline Permutation cfp(std::vector<JobId> jobs) {
  return Permutation::from_cfp(std::move(jobs));
}

/// Hand-rolled draws on top of the fully specified mt19937_64.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  std::int64_t uniform64(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(engine_() %
                                          static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }
  template <typename T> void shuffle(std::vector<T> &v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[engine_() % i]);
  }

private:
  std::mt19937_64 engine_;
};

inline Permutation random_permutation(Rng &rng, int k) {
  std::vector<JobId> jobs(k);
  for (int i = 0; i < k; ++i)
    jobs[i] = i + 1;
  rng.shuffle(jobs);
  return Permutation::from_cfp(std::move(jobs));
}

/// Arbitrary instance, not necessarily satisfiable. Densities are per
/// candidate constraint.
inline Instance random_instance(Rng &rng, int k_min, int k_max,
                                double p_atomic = 0.1, double p_soft = 0.1,
                                double p_disj = 0.05, double p_ds = 0.3) {
  InstanceData d;
  d.k = rng.uniform(k_min, k_max);
  d.b = rng.uniform(0, d.k / 2);
  std::set<AtomicConstraint> hard;
  for (JobId i = 1; i <= d.k; ++i)
    for (JobId j = 1; j <= d.k; ++j)
      if (i != j && rng.chance(p_atomic))
        hard.insert({i, j});
  std::set<AtomicConstraint> soft;
  for (JobId i = 1; i <= d.k; ++i)
    for (JobId j = 1; j <= d.k; ++j)
      if (i != j && rng.chance(p_soft) && !hard.contains({i, j}))
        soft.insert({i, j});
  std::set<DisjunctiveConstraint> disj;
  if (d.k >= 2)
    for (int t = 0; t < d.k * d.k; ++t) {
      if (!rng.chance(p_disj))
        continue;
      DisjunctiveConstraint c{rng.uniform(1, d.k), rng.uniform(1, d.k),
                              rng.uniform(1, d.k), rng.uniform(1, d.k)};
      if (c.first_before != c.first_after && c.second_before != c.second_after)
        disj.insert(c);
    }
  for (JobId e = 1; e <= 2 * d.b; ++e)
    if (rng.chance(p_ds))
      d.direct_successors.push_back(e);
  d.atomic.assign(hard.begin(), hard.end());
  d.soft_atomic.assign(soft.begin(), soft.end());
  d.disjunctive.assign(disj.begin(), disj.end());
  return Instance(std::move(d));
}

} // namespace ctw::test

#endif
