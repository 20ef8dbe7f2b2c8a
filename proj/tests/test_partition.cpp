#include <doctest.h>

#include <map>
#include <set>

#include "chainrr/closure.hpp"
#include "chainrr/literals.hpp"
#include "chainrr/partition.hpp"
#include "helpers.hpp"

using namespace chainrr;
using chainrr::testing::all_contexts;

namespace {

// Independent counting oracles, kept away from the library implementations.
std::uint64_t pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j) {
      row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j) - 1];
    }
  }
  return row[static_cast<std::size_t>(k)];
}

std::uint64_t stirling_rec(int n, int m, std::map<std::pair<int, int>, std::uint64_t>& memo) {
  if (m == 0) return n == 0 ? 1 : 0;
  if (n == 0 || m > n) return 0;
  auto key = std::make_pair(n, m);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::uint64_t value = static_cast<std::uint64_t>(m) * stirling_rec(n - 1, m, memo) +
                        stirling_rec(n - 1, m - 1, memo);
  memo[key] = value;
  return value;
}

std::uint64_t stirling_oracle(int n, int m) {
  std::map<std::pair<int, int>, std::uint64_t> memo;
  return stirling_rec(n, m, memo);
}

}  // namespace

TEST_SUITE_BEGIN("partition");

TEST_CASE("classification of the three families") {
  CHECK(classify(parse_partition(4, "1,2|3,4")) == PartitionClass{FamilyTag::Q, 2});
  CHECK(classify(parse_partition(4, "1,4|2,3")) == PartitionClass{FamilyTag::P, 2});
  CHECK(classify(parse_partition(4, "1,3|2,4")) == PartitionClass{FamilyTag::R, 2});
  // one-block partition counts as interval-shaped
  CHECK(classify(parse_partition(4, "1,2,3,4")) == PartitionClass{FamilyTag::Q, 1});
  // non-convex far block without both endpoints
  CHECK(classify(parse_partition(5, "1|2,4|3,5")).tag == FamilyTag::R);
  // endpoints block with two gaps
  CHECK(classify(parse_partition(5, "1,3,5|2|4")).tag == FamilyTag::R);
}

TEST_CASE("convexity") {
  CHECK(is_convex({2, 3, 4}));
  CHECK_FALSE(is_convex({1, 3}));
  CHECK(is_convex({5}));
}

TEST_CASE("interval partitions enumerate by cut vectors") {
  auto q = enumerate_q(3, 2);
  REQUIRE(q.size() == 2);
  CHECK(format_partition(q[0]) == "1|2,3");
  CHECK(format_partition(q[1]) == "1,2|3");
  CHECK(enumerate_q(4, 1).size() == 1);
  CHECK(enumerate_q(5, 2).size() == 4);
}

TEST_CASE("endpoints-joined partitions enumerate by merging outer pieces") {
  auto p = enumerate_p(4, 2);
  REQUIRE(p.size() == 3);
  for (const auto& x : p) {
    CHECK(classify(x) == PartitionClass{FamilyTag::P, 2});
  }
  // cut-vector order is part of the interface: golden listing
  CHECK(format_partition(p[0]) == "1,3,4|2");
  CHECK(format_partition(p[1]) == "1,4|2,3");
  CHECK(format_partition(p[2]) == "1,2,4|3");
  CHECK(enumerate_p(5, 2).size() == 6);
  auto single = enumerate_p(4, 3);
  REQUIRE(single.size() == 1);
  CHECK(format_partition(single[0]) == "1,4|2|3");
  CHECK_THROWS_AS(enumerate_p(4, 1), Error);
  CHECK_THROWS_AS(enumerate_p(4, 4), Error);
}

TEST_CASE("set partitions enumerate by restricted growth strings") {
  CHECK(enumerate_all(4, 2).size() == 7);
  CHECK(enumerate_all(3, 3).size() == 1);
  CHECK(enumerate_all(5, 3).size() == 25);
  // lexicographic growth-string order, first and last items pinned
  auto all = enumerate_all(4, 2);
  CHECK(format_partition(all.front()) == "1,2,3|4");
  CHECK(format_partition(all.back()) == "1|2,3,4");
}

TEST_CASE("remaining family is the classified complement") {
  auto r = enumerate_r(4, 2);
  REQUIRE(r.size() == 1);
  CHECK(format_partition(r[0]) == "1,3|2,4");
  CHECK(enumerate_r(3, 2).empty());
  CHECK(enumerate_r(5, 3).size() == 15);
}

TEST_CASE("counting identities against independent recurrences") {
  for (int n = 1; n <= 9; ++n) {
    for (int l = 1; l <= n; ++l) {
      CAPTURE(n);
      CAPTURE(l);
      CHECK(enumerate_q(n, l).size() == pascal(n - 1, l - 1));
      CHECK(enumerate_all(n, l).size() == stirling_oracle(n, l));
      std::size_t p_count = (2 <= l && l <= n - 1) ? enumerate_p(n, l).size() : 0;
      if (2 <= l && l <= n - 1) {
        CHECK(p_count == pascal(n - 1, l));
      }
      CHECK(enumerate_r(n, l).size() ==
            stirling_oracle(n, l) - pascal(n - 1, l - 1) - p_count);
    }
    // at l = m the remaining-family count collapses by the Pascal rule
    for (int m = 2; m < n; ++m) {
      CHECK(enumerate_r(n, m).size() == stirling_oracle(n, m) - pascal(n, m));
    }
  }
}

TEST_CASE("the three streams partition the set-partition stream") {
  for (int n = 1; n <= 6; ++n) {
    for (int l = 1; l <= n; ++l) {
      std::set<std::string> q_set, p_set, r_set, all_set;
      for (const auto& x : enumerate_q(n, l)) q_set.insert(format_partition(x));
      if (2 <= l && l <= n - 1) {
        for (const auto& x : enumerate_p(n, l)) p_set.insert(format_partition(x));
      }
      for (const auto& x : enumerate_r(n, l)) r_set.insert(format_partition(x));
      for (const auto& x : enumerate_all(n, l)) all_set.insert(format_partition(x));
      CHECK(q_set.size() + p_set.size() + r_set.size() == all_set.size());
      std::set<std::string> united = q_set;
      united.insert(p_set.begin(), p_set.end());
      united.insert(r_set.begin(), r_set.end());
      CHECK(united == all_set);
      for (const auto& x : enumerate_q(n, l)) CHECK(classify(x).tag == FamilyTag::Q);
      for (const auto& x : enumerate_r(n, l)) CHECK(classify(x).tag == FamilyTag::R);
    }
  }
}

TEST_CASE("binomial and stirling values") {
  CHECK(binomial(4, 2) == 6);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 3) == 25);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(3, 5), Error);
  CHECK_THROWS_AS(stirling2(70, 35), Error);  // overflow must error, not wrap
  try {
    stirling2(70, 35);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
}

TEST_CASE("refinement into the endpoints-joined family") {
  auto p = parse_partition(5, "1,4,5|2,3");
  auto refined = refine_to_p(p, 3);
  CHECK(refined.refines(p));
  CHECK(classify(refined) == PartitionClass{FamilyTag::P, 3});

  auto fixed = parse_partition(4, "1,4|2,3");
  CHECK(refine_to_p(fixed, 2) == fixed);

  auto whole = parse_partition(4, "1,2,3,4");
  auto from_whole = refine_to_p(whole, 2);
  CHECK(from_whole.refines(whole));
  CHECK(classify(from_whole) == PartitionClass{FamilyTag::P, 2});

  CHECK_THROWS_AS(refine_to_p(parse_partition(4, "1,2|3,4"), 2), Error);
}

TEST_CASE("refinement contract holds across the family") {
  for (int n = 3; n <= 6; ++n) {
    for (int i = 2; i <= n - 1; ++i) {
      for (const auto& p : enumerate_p(n, i)) {
        for (int m = i; m <= n - 1; ++m) {
          auto refined = refine_to_p(p, m);
          CAPTURE(format_partition(p));
          CAPTURE(m);
          CHECK(refined.refines(p));
          CHECK(classify(refined) == PartitionClass{FamilyTag::P, m});
        }
      }
    }
  }
}

TEST_CASE("orientation-preserving maps have structured kernels") {
  for (const auto& c : all_contexts(6)) {
    for (const auto& f : enumerate_t(c).elements()) {
      auto tag = classify(kernel(f)).tag;
      if (is_orientation_preserving(f)) {
        CHECK(tag != FamilyTag::R);
      }
      if (tag == FamilyTag::R) {
        CHECK_FALSE(is_orientation_preserving(f));
      }
    }
  }
}

TEST_SUITE_END();
