#pragma once

// Partitions of the chain {1..n} with canonical first-occurrence labeling,
// classification into the interval / endpoints-joined / remaining families,
// enumeration in fixed orders, and exact counting.

#include <cstdint>
#include <vector>

#include "chainrr/chain.hpp"

namespace chainrr {

class Partition {
 public:
  // labels[x-1] assigns block labels; any labeling is accepted and
  // renumbered canonically by order of first occurrence (labels 0..l-1).
  Partition(int n, std::vector<int> labels);

  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int n() const noexcept { return n_; }
  int block_count() const noexcept { return block_count_; }
  // Canonical 0-based label of x; label order equals order of block minima.
  int label_of(int x) const { return labels_[static_cast<std::size_t>(x) - 1]; }
  // Blocks sorted by minimum element, elements ascending.
  std::vector<std::vector<int>> blocks() const;
  // True iff every block of *this lies inside a block of coarser.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  int n_;
  int block_count_;
  std::vector<int> labels_;
};

enum class FamilyTag { Q, P, R };

struct PartitionClass {
  FamilyTag tag;
  int l;  // block count

  friend bool operator==(const PartitionClass&, const PartitionClass&) = default;
};

const char* to_string(FamilyTag tag);

// Q: all blocks are intervals.  P: the block containing 1 also contains n and
// splits as prefix|gap|suffix, all other blocks intervals.  R: everything
// else.  The one-block partition {X} classifies as Q.
PartitionClass classify(const Partition& p);

// True iff s (subset of 1..n, any order, no duplicates) is an interval.
bool is_convex(const std::vector<int>& s);

// Kernel of f: blocks are the nonempty preimage sets.
Partition kernel(const Transformation& f);

// All partitions into l ordered intervals; cut vectors in lexicographic
// order; count C(n-1, l-1).
std::vector<Partition> enumerate_q(int n, int l);

// All partitions whose first block joins a prefix and a suffix around l-1
// middle intervals; built by merging the outer parts of the l+1 interval
// partitions, cut vectors lexicographic; count C(n-1, l).  Requires
// 2 <= l <= n-1 (InvalidArity otherwise; the family is empty there).
std::vector<Partition> enumerate_p(int n, int l);

// All set partitions into exactly l blocks, restricted-growth strings in
// lexicographic order; count S(n, l).
std::vector<Partition> enumerate_all(int n, int l);

// enumerate_all filtered to class R; count S(n,l) - C(n-1,l-1) - C(n-1,l).
std::vector<Partition> enumerate_r(int n, int l);

// Exact; throws Overflow instead of wrapping.
std::uint64_t binomial(int n, int k);
std::uint64_t stirling2(int n, int m);

// Deterministic refinement of p into a member of the P family with target_m
// blocks: view p as its interval pieces (the endpoints block split into
// prefix and suffix), repeatedly cut the leftmost piece of size >= 2 at its
// left end until target_m + 1 pieces exist, then re-join first and last.
Partition refine_to_p(const Partition& p, int target_m);

}  // namespace chainrr
