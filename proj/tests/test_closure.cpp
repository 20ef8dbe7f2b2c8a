#include <doctest.h>

#include <cstdlib>
#include <set>

#include "chainrr/closure.hpp"
#include "chainrr/generators.hpp"
#include "helpers.hpp"

using namespace chainrr;
using chainrr::testing::all_contexts;
using chainrr::testing::ctx;
using chainrr::testing::map;

TEST_SUITE_BEGIN("closure");

TEST_CASE("semigroup enumeration") {
  auto c2 = ctx(2, {1, 2});
  CHECK(enumerate_t(c2).size() == 4);
  auto o = enumerate_o(c2);
  CHECK(o.size() == 3);
  CHECK(o.contains(map(c2, {1, 1})));
  CHECK(o.contains(map(c2, {1, 2})));
  CHECK(o.contains(map(c2, {2, 2})));
  CHECK(enumerate_op(c2).size() == 4);

  CHECK(enumerate_t(ctx(4, {2, 3})).size() == 16);
  CHECK(enumerate_t(ctx(5, {1, 3, 5})).size() == 243);
}

TEST_CASE("budget refusal") {
  Budget tiny;
  tiny.max_universe = 100;
  CHECK_THROWS_AS(enumerate_t(ctx(5, {1, 3, 5}), tiny), Error);
  try {
    enumerate_t(ctx(5, {1, 3, 5}), tiny);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("closure saturates") {
  auto c2 = ctx(2, {1, 2});
  auto closed = closure({map(c2, {2, 1})});
  CHECK(closed.size() == 2);
  CHECK(closed.contains(map(c2, {2, 1})));
  CHECK(closed.contains(map(c2, {1, 2})));

  auto c = ctx(4, {2, 3});
  auto op = enumerate_op(c);
  auto gens = enumerate_o(c).elements();
  for (const auto& t : canonical_a(c).elements) {
    gens.push_back(t);
  }
  CHECK(closure(gens) == op);
  CHECK(closure_equals(gens, op));

  auto t_all = enumerate_t(c);
  auto gens2 = op.elements();
  for (const auto& t : canonical_b_t_mod_op(c).set.elements) {
    gens2.push_back(t);
  }
  CHECK(closure_equals(gens2, t_all));
}

TEST_CASE("closure is idempotent, monotone, and verified closed") {
  auto c = ctx(4, {1, 3});
  auto eta = build_eta(c);
  auto alpha = map(c, {1, 3, 3, 1});
  auto small = closure({eta});
  auto large = closure({eta, alpha});
  CHECK(closure(small.elements()) == small);
  for (auto code : small.codes()) {
    CHECK(large.contains(code));
  }
  // saturation verification pass: every pairwise product stays inside
  for (const auto& f : large.elements()) {
    for (const auto& g : large.elements()) {
      CHECK(large.contains(compose(f, g)));
    }
  }
  CHECK(large.closed_under_composition());
}

TEST_CASE("progress hook fires on long runs") {
  auto c = ctx(6, {1, 3, 4, 6});
  std::size_t calls = 0;
  auto gens = enumerate_o(c).elements();
  for (const auto& t : canonical_a(c).elements) {
    gens.push_back(t);
  }
  for (const auto& t : canonical_b_t_mod_op(c).set.elements) {
    gens.push_back(t);
  }
  auto closed = closure(gens, Budget::from_env(), [&](std::size_t, std::size_t) { ++calls; });
  CHECK(closed.size() == 4096);
  CHECK(calls > 0);
}

TEST_CASE("Y-map closure and permutation coverage") {
  auto c = ctx(3, {2, 3});
  YMap swap(c, {3, 2});
  auto closed = ymap_monoid_closure({swap});
  CHECK(closed.size() == 2);
  CHECK(contains_all_permutations(c, closed));

  auto c135 = ctx(5, {1, 3, 5});
  auto eta_r = restrict_to_y(build_eta(c135));
  auto cyclic = ymap_monoid_closure({eta_r});
  CHECK(cyclic.size() == 3);
  CHECK_FALSE(contains_all_permutations(c135, cyclic));

  YMap transposition(c135, {3, 1, 5});
  auto full = ymap_monoid_closure({eta_r, transposition});
  CHECK(contains_all_permutations(c135, full));
  CHECK(full.size() == 6);
}

TEST_CASE("relative generation") {
  auto c = ctx(4, {2, 3});
  auto op = enumerate_op(c);
  auto o = enumerate_o(c);
  auto t_all = enumerate_t(c);
  CHECK(is_relative_generating(op, o, canonical_a(c).elements));
  CHECK_FALSE(is_relative_generating(op, o, {}));
  CHECK(is_relative_generating(t_all, op, canonical_b_t_mod_op(c).set.elements));
}

TEST_CASE("budget override from the environment") {
  setenv("CHAINRR_MAX_UNIVERSE", "100", 1);
  CHECK(Budget::from_env().max_universe == 100);
  unsetenv("CHAINRR_MAX_UNIVERSE");
  CHECK(Budget::from_env().max_universe == 10'000'000);
}

TEST_CASE("inclusions between the three semigroups") {
  for (const auto& c : all_contexts(6)) {
    auto o = enumerate_o(c);
    auto op = enumerate_op(c);
    auto t_all = enumerate_t(c);
    for (auto code : o.codes()) {
      CHECK(op.contains(code));
    }
    for (auto code : op.codes()) {
      CHECK(t_all.contains(code));
    }
  }
}

TEST_CASE("bounded minimal relative rank search") {
  auto c = ctx(4, {2, 3});
  auto op = enumerate_op(c);
  auto o = enumerate_o(c);
  std::vector<Transformation> pool;
  for (const auto& t : op.elements()) {
    if (!o.contains(t)) {
      pool.push_back(t);
    }
  }
  auto result = brute_min_relrank(op, o, pool, 5, RelrankTask::OpOverO);
  CHECK(result.rank == 3);
  CHECK(is_relative_generating(op, o, result.witness));

  auto c14 = ctx(4, {1, 4});
  auto op14 = enumerate_op(c14);
  auto o14 = enumerate_o(c14);
  std::vector<Transformation> pool14;
  for (const auto& t : op14.elements()) {
    if (!o14.contains(t)) {
      pool14.push_back(t);
    }
  }
  CHECK(brute_min_relrank(op14, o14, pool14, 6, RelrankTask::OpOverO).rank == 4);

  auto t_all = enumerate_t(c);
  std::vector<Transformation> pool_t;
  for (const auto& t : t_all.elements()) {
    if (!op.contains(t)) {
      pool_t.push_back(t);
    }
  }
  CHECK(brute_min_relrank(t_all, op, pool_t, 3, RelrankTask::TOverOp).rank == 1);

  CHECK_THROWS_AS(brute_min_relrank(op, o, pool, 2, RelrankTask::OpOverO), Error);
  try {
    brute_min_relrank(op, o, pool, 2, RelrankTask::OpOverO);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoWitnessWithinBound);
  }
}

TEST_SUITE_END();
