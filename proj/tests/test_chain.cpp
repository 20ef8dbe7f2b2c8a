#include <doctest.h>

#include <random>

#include "chainrr/closure.hpp"
#include "chainrr/partition.hpp"
#include "helpers.hpp"

using namespace chainrr;
using chainrr::testing::all_contexts;
using chainrr::testing::ctx;
using chainrr::testing::map;

TEST_SUITE_BEGIN("chain");

TEST_CASE("transformation construction validates range and length") {
  auto c = ctx(4, {2, 3});
  CHECK(map(c, {2, 3, 2, 2}).images() == std::vector<int>{2, 3, 2, 2});
  CHECK_THROWS_AS_MESSAGE(map(c, {1, 3, 2, 2}), Error, "1 is outside Y");
  CHECK_THROWS_AS(map(c, {2, 3, 2}), Error);
  try {
    map(c, {1, 3, 2, 2});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RangeViolation);
  }
  try {
    map(c, {2, 3});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LengthMismatch);
  }
  auto c2 = ctx(2, {1, 2});
  CHECK(map(c2, {1, 2}).rank() == 2);
}

TEST_CASE("composition applies the left factor first") {
  auto c = ctx(4, {2, 3});
  auto f = map(c, {2, 3, 3, 2});
  auto g = map(c, {2, 3, 2, 2});
  CHECK(compose(f, g) == map(c, {3, 2, 2, 3}));

  auto c2 = ctx(2, {1, 2});
  auto id = map(c2, {1, 2});
  auto h = map(c2, {2, 1});
  CHECK(compose(id, h) == h);
  CHECK(compose(h, id) == h);

  auto constant = map(c, {2, 2, 2, 2});
  CHECK(compose(constant, g) == map(c, {3, 3, 3, 3}));
  CHECK_THROWS_AS(compose(f, map(ctx(4, {2, 4}), {2, 2, 2, 2})), Error);
}

TEST_CASE("restriction to Y") {
  auto c = ctx(4, {2, 3});
  auto eta_like = map(c, {2, 3, 2, 2});
  auto r = restrict_to_y(eta_like);
  CHECK(r.images_on_y() == std::vector<int>{3, 2});
  CHECK(r.is_permutation());

  auto o_map = map(c, {2, 2, 3, 3});
  CHECK(restrict_to_y(o_map).is_identity());

  auto constant = map(c, {2, 2, 2, 2});
  CHECK_FALSE(restrict_to_y(constant).is_permutation());
}

TEST_CASE("kernels group equal images with canonical labels") {
  auto c = ctx(4, {2, 3});
  CHECK(kernel(map(c, {2, 3, 2, 2})) ==
        Partition::from_blocks(4, {{1, 3, 4}, {2}}));
  auto c2 = ctx(3, {1, 2, 3});
  CHECK(kernel(map(c2, {1, 2, 3})).block_count() == 3);
  CHECK(kernel(map(c, {2, 2, 2, 2})) == Partition::from_blocks(4, {{1, 2, 3, 4}}));
}

TEST_CASE("order and orientation predicates") {
  auto c = ctx(4, {2, 3});
  CHECK(is_order_preserving(map(c, {2, 2, 3, 3})));
  CHECK_FALSE(is_order_preserving(map(c, {2, 3, 2, 2})));
  CHECK(is_order_preserving(map(c, {2, 2, 2, 2})));

  CHECK(is_orientation_preserving(map(c, {2, 3, 2, 2})));
  CHECK_FALSE(is_orientation_preserving(map(c, {3, 2, 3, 2})));
  CHECK(is_orientation_preserving(map(c, {2, 2, 3, 3})));

  CHECK(is_orientation_preserving_oracle(map(c, {2, 3, 2, 2})));
  CHECK_FALSE(is_orientation_preserving_oracle(map(c, {3, 2, 3, 2})));
  CHECK(is_orientation_preserving_oracle(map(c, {2, 2, 2, 2})));
}

TEST_CASE("descent criterion matches the cut-scan oracle exhaustively") {
  for (const auto& c : all_contexts(4)) {
    for (const auto& f : enumerate_t(c).elements()) {
      CAPTURE(f.images());
      CHECK(is_orientation_preserving(f) == is_orientation_preserving_oracle(f));
    }
  }
}

TEST_CASE("composition is associative") {
  for (const auto& c : all_contexts(3)) {
    auto all = enumerate_t(c).elements();
    for (const auto& f : all) {
      for (const auto& g : all) {
        for (const auto& h : all) {
          CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
        }
      }
    }
  }
  // random triples on larger chains
  std::mt19937 rng(20240817);
  for (const auto& c : {ctx(6, {1, 3, 4}), ctx(7, {2, 3, 5, 7})}) {
    auto universe = static_cast<std::uint64_t>(1);
    for (int i = 0; i < c.n(); ++i) universe *= static_cast<std::uint64_t>(c.m());
    std::uniform_int_distribution<std::uint64_t> dist(0, universe - 1);
    for (int trial = 0; trial < 200; ++trial) {
      auto f = Transformation::from_code(c, dist(rng));
      auto g = Transformation::from_code(c, dist(rng));
      auto h = Transformation::from_code(c, dist(rng));
      CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
  }
}

TEST_CASE("rank does not grow under composition") {
  std::mt19937 rng(7);
  auto c = ctx(6, {2, 4, 5, 6});
  std::uniform_int_distribution<std::uint64_t> dist(0, (4ull * 4 * 4 * 4 * 4 * 4) - 1);
  for (int trial = 0; trial < 500; ++trial) {
    auto f = Transformation::from_code(c, dist(rng));
    auto g = Transformation::from_code(c, dist(rng));
    CHECK(compose(f, g).rank() <= std::min(f.rank(), g.rank()));
  }
}

TEST_CASE("restriction is a homomorphism") {
  for (const auto& c : all_contexts(4)) {
    auto all = enumerate_t(c).elements();
    for (const auto& f : all) {
      for (const auto& g : all) {
        CHECK(restrict_to_y(compose(f, g)) == compose(restrict_to_y(f), restrict_to_y(g)));
      }
    }
  }
}

TEST_CASE("order-preserving restrictions are the identity or not a permutation") {
  for (const auto& c : all_contexts(6)) {
    for (const auto& beta : enumerate_o(c).elements()) {
      auto r = restrict_to_y(beta);
      CHECK((r.is_identity() || !r.is_permutation()));
    }
  }
}

TEST_CASE("codes round-trip") {
  auto c = ctx(5, {1, 3, 5});
  for (std::uint64_t code = 0; code < 243; ++code) {
    CHECK(Transformation::from_code(c, code).code() == code);
  }
}

TEST_SUITE_END();
