#include <doctest.h>

#include "ctw/error.hpp"
#include "ctw/oracle.hpp"
#include "support.hpp"

using namespace ctw;
using test::cfp;

TEST_CASE("census of the worked example") {
  const auto r = oracle::enumerate(test::example());
  CHECK(r.enumerated == 120);
  CHECK(r.valid_count == 8);
  REQUIRE(r.optimal_objective);
  CHECK(*r.optimal_objective == 160);
  // Exhaustive: (3,5,4,2,1) is valid but has L=3 and costs 165.
  REQUIRE(r.optimal_solutions.size() == 2);
  CHECK(r.optimal_solutions[0] == cfp({5, 3, 2, 4, 1}));
  CHECK(r.optimal_solutions[1] == cfp({5, 3, 4, 2, 1}));
  CHECK(evaluate(test::example(), cfp({3, 5, 4, 2, 1})).objective == 165);
}

TEST_CASE("a soft constraint moves the optimum") {
  // (5,3,2,4,1) now violates 4 before 2 and drops out.
  const auto r = oracle::enumerate(test::example({{4, 2}}));
  CHECK(r.valid_count == 8);
  CHECK(*r.optimal_objective == 160);
  REQUIRE(r.optimal_solutions.size() == 1);
  CHECK(r.optimal_solutions[0] == cfp({5, 3, 4, 2, 1}));
}

TEST_CASE("contradictory hard constraints") {
  const Instance inst({.k = 2, .b = 0, .atomic = {{1, 2}, {2, 1}}});
  const auto r = oracle::enumerate(inst);
  CHECK(r.valid_count == 0);
  CHECK_FALSE(r.optimal_objective);
  CHECK(r.optimal_solutions.empty());
  CHECK(r.enumerated == 2);
}

TEST_CASE("degenerate instances") {
  const auto zero = oracle::enumerate(Instance({.k = 0, .b = 0}));
  CHECK(zero.valid_count == 1);
  CHECK(zero.optimal_objective == 0);
  const auto one = oracle::enumerate(Instance({.k = 1, .b = 0}));
  CHECK(one.valid_count == 1);
  CHECK(one.optimal_solutions.at(0) == cfp({1}));
}

TEST_CASE("oracle refuses large k") {
  CHECK_THROWS_AS(oracle::enumerate(Instance({.k = 11, .b = 0})), LimitError);
  CHECK_THROWS_AS(oracle::enumerate(Instance({.k = 5, .b = 0}), 4), LimitError);
}

TEST_CASE("oracle counts agree with a direct census") {
  test::Rng rng(7);
  for (int t = 0; t < 30; ++t) {
    const auto inst = test::random_instance(rng, 1, 6, 0.15, 0.1, 0.1);
    std::vector<JobId> jobs(inst.k());
    for (int i = 0; i < inst.k(); ++i)
      jobs[i] = i + 1;
    std::int64_t valid = 0;
    std::optional<std::int64_t> best;
    do {
      const auto p = cfp(jobs);
      if (!validate(inst, p).empty())
        continue;
      ++valid;
      const auto o = evaluate(inst, p).objective;
      best = best ? std::min(*best, o) : o;
    } while (std::next_permutation(jobs.begin(), jobs.end()));
    const auto r = oracle::enumerate(inst);
    CHECK(r.valid_count == valid);
    CHECK(r.optimal_objective == best);
    for (const auto &p : r.optimal_solutions)
      CHECK(evaluate(inst, p).objective == *best);
  }
}

TEST_CASE("brute force maximum acyclic subgraph") {
  DiGraph cycle(3);
  cycle.add_edge(1, 2);
  cycle.add_edge(2, 3);
  cycle.add_edge(3, 1);
  CHECK(oracle::brute_mas(cycle) == 2);

  DiGraph dag(4);
  dag.add_edge(1, 2);
  dag.add_edge(1, 3);
  dag.add_edge(3, 4);
  dag.add_edge(2, 4);
  CHECK(oracle::brute_mas(dag) == 4);

  DiGraph complete(3);
  for (int v = 1; v <= 3; ++v)
    for (int w = 1; w <= 3; ++w)
      if (v != w)
        complete.add_edge(v, w);
  CHECK(complete.edge_count() == 6);
  CHECK(oracle::brute_mas(complete) == 3);

  CHECK(oracle::brute_mas(DiGraph(0)) == 0);
  CHECK_THROWS_AS(oracle::brute_mas(DiGraph(11)), LimitError);
}
