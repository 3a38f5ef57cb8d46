#include <doctest.h>

#include <limits>

#include "ctw/error.hpp"
#include "support.hpp"

using namespace ctw;
using test::cfp;
using test::example;

TEST_CASE("partner pairs i with i+b") {
  CHECK(partner(1, 2) == 3);
  CHECK(partner(4, 2) == 2);
  CHECK_THROWS_AS(partner(5, 2), InstanceError);
  CHECK_THROWS_AS(partner(0, 2), InstanceError);
  for (int b = 1; b < 6; ++b)
    for (JobId i = 1; i <= 2 * b; ++i)
      CHECK(partner(partner(i, b), b) == i);
}

TEST_CASE("instance construction checks invariants") {
  auto make = [](InstanceData d) { return Instance(std::move(d)); };
  CHECK_THROWS_AS(make({.k = 3, .b = 2}), InstanceError);
  CHECK_THROWS_AS(make({.k = 2, .b = -1}), InstanceError);
  CHECK_THROWS_AS(make({.k = 3, .b = 0, .atomic = {{1, 4}}}), InstanceError);
  CHECK_THROWS_AS(make({.k = 3, .b = 0, .atomic = {{2, 2}}}), InstanceError);
  CHECK_THROWS_AS(make({.k = 3, .b = 0, .atomic = {{0, 2}}}), InstanceError);
  CHECK_THROWS_AS(make({.k = 3, .b = 1, .direct_successors = {3}}),
                  InstanceError);
  CHECK_THROWS_AS(make({.k = 3,
                        .b = 0,
                        .atomic = {{1, 2}},
                        .soft_atomic = {{1, 2}}}),
                  InstanceError);
  CHECK_THROWS_AS(make({.k = 4, .b = 1, .disjunctive = {{1, 1, 2, 3}}}),
                  InstanceError);
  CHECK_NOTHROW(make({.k = 0, .b = 0}));
  CHECK_NOTHROW(make({.k = 2, .b = 0, .atomic = {{1, 2}}, .soft_atomic = {{2, 1}}}));
}

TEST_CASE("duplicates are dropped with a warning") {
  std::vector<std::string> warnings;
  const Instance inst({.k = 3,
                       .b = 1,
                       .atomic = {{1, 2}, {3, 1}, {1, 2}},
                       .direct_successors = {1, 1}},
                      &warnings);
  CHECK(inst.atomic().size() == 2);
  CHECK(inst.atomic()[0] == AtomicConstraint{1, 2});
  CHECK(inst.atomic()[1] == AtomicConstraint{3, 1});
  CHECK(inst.direct_successors().size() == 1);
  CHECK(warnings.size() == 2);
}

TEST_CASE("instance equality ignores list order") {
  const Instance a({.k = 3, .b = 0, .atomic = {{1, 2}, {2, 3}}});
  const Instance b({.k = 3, .b = 0, .atomic = {{2, 3}, {1, 2}}});
  const Instance c({.k = 3, .b = 0, .atomic = {{1, 2}}});
  CHECK(a == b);
  CHECK_FALSE(a == c);
  CHECK(b.canonical().atomic()[0] == AtomicConstraint{1, 2});
}

TEST_CASE("permutation factories") {
  const auto p = cfp({5, 3, 4, 2, 1});
  CHECK(p.position_of(5) == 1);
  CHECK(p.position_of(1) == 5);
  CHECK(p.job_at(3) == 4);
  CHECK(Permutation::from_pfc({5, 4, 2, 3, 1}) == p);
  CHECK(Permutation::identity(3) == cfp({1, 2, 3}));
  CHECK(Permutation::identity(0).size() == 0);
  CHECK_THROWS_AS(cfp({1, 1, 2}), InstanceError);
  CHECK_THROWS_AS(cfp({0, 1}), InstanceError);
  CHECK_THROWS_AS(cfp({1, 3}), InstanceError);
  CHECK(is_bijection(std::vector<int>{2, 1, 3}));
  CHECK_FALSE(is_bijection(std::vector<int>{2, 2, 3}));
  CHECK(is_bijection(std::vector<int>{}));
}

TEST_CASE("validate on the worked example") {
  const auto inst = example();
  CHECK(validate(inst, cfp({5, 3, 4, 2, 1})).empty());

  const auto v = validate(inst, cfp({1, 2, 3, 4, 5}));
  REQUIRE_FALSE(v.empty());
  bool found = false;
  for (const auto &x : v)
    if (x.kind == ViolationKind::Atomic && inst.atomic()[x.index] == AtomicConstraint{4, 1})
      found = true;
  CHECK(found);

  // 4 placed, then 5 in between before 2: direct successor broken.
  const auto ds = validate(inst, cfp({3, 5, 4, 1, 2}));
  bool ds_found = false;
  for (const auto &x : ds)
    ds_found |= x.kind == ViolationKind::DirectSuccessor;
  CHECK(ds_found);

  // 5 and 1 both before 2: the disjunction fails.
  const auto dj = validate(inst, cfp({5, 3, 4, 1, 2}));
  bool dj_found = false;
  for (const auto &x : dj)
    dj_found |= x.kind == ViolationKind::Disjunctive;
  CHECK(dj_found);

  CHECK_THROWS_AS(validate(inst, cfp({1, 2, 3})), InstanceError);
}

TEST_CASE("validate degenerate sizes") {
  const Instance empty({.k = 0, .b = 0});
  CHECK(validate(empty, Permutation::identity(0)).empty());
  const Instance one({.k = 1, .b = 0});
  CHECK(validate(one, Permutation::identity(1)).empty());
}

TEST_CASE("validate_pfc reports malformed input") {
  const auto inst = example();
  const std::vector<Position> dup{1, 1, 2, 3, 4};
  const auto v = validate_pfc(inst, dup);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::NotBijective);
  CHECK(validate_pfc(inst, std::vector<Position>{5, 4, 2, 3, 1}).empty());
  CHECK_THROWS_AS(validate_pfc(inst, std::vector<Position>{1, 2}), InstanceError);
}

TEST_CASE("soft constraints never make a permutation invalid") {
  const auto inst = example({{1, 5}, {2, 3}});
  CHECK(validate(inst, cfp({5, 3, 4, 2, 1})).empty());
  CHECK(cost_N(inst, cfp({5, 3, 4, 2, 1})) == 2);
}

TEST_CASE("criteria on the worked example") {
  const auto inst = example();
  const auto p = cfp({5, 3, 4, 2, 1});
  CHECK(cost_S(inst, p) == 1);
  CHECK(cost_M(inst, p) == 1);
  CHECK(cost_L(inst, p) == 2);
  CHECK(cost_N(inst, p) == 0);
  CHECK(edge_cost_S(inst, p) == 1);
  const auto c = evaluate(inst, p);
  CHECK(c == CostBreakdown{1, 1, 2, 0, 160});
}

TEST_CASE("criteria on small hand cases") {
  const Instance two_pairs({.k = 4, .b = 2});
  CHECK(cost_S(two_pairs, cfp({1, 3, 2, 4})) == 0);
  CHECK(cost_L(two_pairs, cfp({1, 3, 2, 4})) == 0);
  CHECK(edge_cost_S(two_pairs, cfp({1, 3, 2, 4})) == 0);
  CHECK(cost_M(two_pairs, cfp({1, 3, 2, 4})) == 0);
  // Job 2 sits inside <1,3>, job 3 inside <2,4>; nothing inside both.
  CHECK(cost_M(two_pairs, cfp({1, 2, 3, 4})) == 1);
  CHECK(cost_S(two_pairs, cfp({1, 2, 3, 4})) == 2);
  CHECK(cost_L(two_pairs, cfp({1, 2, 3, 4})) == 1);
  // Nested: 2 and 4 inside <1,3>, and 2,4 adjacent.
  CHECK(cost_M(two_pairs, cfp({1, 2, 4, 3})) == 1);
  CHECK(cost_L(two_pairs, cfp({1, 2, 4, 3})) == 2);

  const Instance no_pairs({.k = 3, .b = 0});
  for (const auto &p : {cfp({1, 2, 3}), cfp({3, 1, 2})}) {
    CHECK(cost_S(no_pairs, p) == 0);
    CHECK(cost_M(no_pairs, p) == 0);
    CHECK(cost_L(no_pairs, p) == 0);
  }

  const Instance soft({.k = 2, .b = 0, .soft_atomic = {{1, 2}}});
  CHECK(cost_N(soft, cfp({2, 1})) == 1);
  CHECK(cost_N(soft, cfp({1, 2})) == 0);
  const Instance both({.k = 2, .b = 0, .soft_atomic = {{1, 2}, {2, 1}}});
  CHECK(cost_N(both, cfp({1, 2})) == 1);
  CHECK(cost_N(both, cfp({2, 1})) == 1);
}

TEST_CASE("M counts every job, one-sided ones included") {
  // Only the one-sided job 3 sits inside the pair.
  const Instance inst({.k = 3, .b = 1});
  CHECK(cost_M(inst, cfp({1, 3, 2})) == 1);
  CHECK(cost_M(inst, cfp({1, 2, 3})) == 0);
}

TEST_CASE("objective weighting") {
  CHECK(objective(1, 1, 2, 1, 5) == 161);
  CHECK(objective(1, 1, 2, 0, 5) == 160);
  CHECK(objective(0, 0, 0, 0, 7) == 0);
  CHECK(objective(0, 0, 0, 0, 0) == 0);
  CHECK(objective(1000, 1000, 1000, 1000000, 1000) ==
        1000LL * 1000 * 1000 * 1000 + 1000LL * 1000 * 1000 + 1000LL * 1000 +
            1000000);
  CHECK_THROWS_AS(objective(-1, 0, 0, 0, 5), InstanceError);
  CHECK_THROWS_AS(objective(0, 0, 0, 0, -1), InstanceError);
  CHECK_THROWS_AS(objective(1, 0, 0, 0, 3000000), OverflowError);
  CHECK_THROWS_AS(objective(std::numeric_limits<std::int64_t>::max(), 0, 0, 0, 2),
                  OverflowError);
  CHECK_THROWS_AS(objective(0, 0, 1, std::numeric_limits<std::int64_t>::max(), 2),
                  OverflowError);
}

TEST_CASE("hard atomic graph") {
  const auto g = hard_atomic_graph(example());
  CHECK(g.vertex_count() == 5);
  CHECK(g.edges() == std::set<Edge>{{3, 4}, {4, 1}, {5, 4}});
  const auto path = hard_atomic_graph(Instance({.k = 3, .b = 0, .atomic = {{1, 2}, {2, 3}}}));
  CHECK(path.edge_count() == 2);
  CHECK(path.has_edge(1, 2));
  CHECK(path.has_edge(2, 3));
  CHECK(hard_atomic_graph(Instance({.k = 4, .b = 0})).edge_count() == 0);
}

TEST_CASE("digraph basics") {
  DiGraph g(3);
  g.add_edge(1, 2);
  g.add_edge(1, 2);
  g.add_edge(3, 1);
  CHECK(g.edge_count() == 2);
  CHECK_THROWS(g.add_edge(2, 2));
  CHECK_THROWS(g.add_edge(0, 2));
  CHECK_THROWS(g.add_edge(1, 4));
  const auto succ = g.successors();
  CHECK(succ[1] == std::vector<int>{2});
  const auto pred = g.predecessors();
  CHECK(pred[1] == std::vector<int>{3});
}
