#include "chainrr/partition.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

namespace chainrr {

namespace {

// The prefix|gap|suffix shape test: elems (sorted) must run 1..c, skip at
// least one point, then run d..n.  Returns {c, d} on success.
std::optional<std::pair<int, int>> prefix_suffix_split(const std::vector<int>& elems, int n) {
  if (elems.front() != 1 || elems.back() != n) {
    return std::nullopt;
  }
  std::size_t gap_at = 0;
  for (std::size_t i = 1; i < elems.size(); ++i) {
    if (elems[i] != elems[i - 1] + 1) {
      if (gap_at != 0) {
        return std::nullopt;  // more than one gap
      }
      gap_at = i;
    }
  }
  if (gap_at == 0) {
    return std::nullopt;  // convex, no gap
  }
  return std::make_pair(elems[gap_at - 1], elems[gap_at]);
}

void collect_combinations(int lo, int hi, int k, std::vector<int>& cur,
                          const std::function<void(const std::vector<int>&)>& emit) {
  if (k == 0) {
    emit(cur);
    return;
  }
  for (int v = lo; v <= hi - k + 1; ++v) {
    cur.push_back(v);
    collect_combinations(v + 1, hi, k - 1, cur, emit);
    cur.pop_back();
  }
}

Partition from_cuts(int n, const std::vector<int>& cuts) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  int label = 0;
  std::size_t next_cut = 0;
  for (int x = 1; x <= n; ++x) {
    labels[static_cast<std::size_t>(x) - 1] = label;
    if (next_cut < cuts.size() && x == cuts[next_cut]) {
      ++label;
      ++next_cut;
    }
  }
  return Partition(n, std::move(labels));
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    fail(ErrorKind::Overflow, "count exceeds 64-bit range");
  }
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    fail(ErrorKind::Overflow, "count exceeds 64-bit range");
  }
  return r;
}

}  // namespace

Partition::Partition(int n, std::vector<int> labels) : n_(n), labels_(std::move(labels)) {
  if (n_ < 1) {
    fail(ErrorKind::RangeViolation, "partition ground set must be nonempty");
  }
  if (static_cast<int>(labels_.size()) != n_) {
    fail(ErrorKind::LengthMismatch, "label sequence has length " +
                                        std::to_string(labels_.size()) + ", expected " +
                                        std::to_string(n_));
  }
  // Renumber by first occurrence.
  std::vector<std::pair<int, int>> remap;  // (original label, canonical)
  int next = 0;
  for (int& lab : labels_) {
    int canonical = -1;
    for (const auto& [orig, canon] : remap) {
      if (orig == lab) {
        canonical = canon;
        break;
      }
    }
    if (canonical == -1) {
      canonical = next++;
      remap.emplace_back(lab, canonical);
    }
    lab = canonical;
  }
  block_count_ = next;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      fail(ErrorKind::RangeViolation, "partition block must be nonempty");
    }
    for (int x : blocks[b]) {
      if (x < 1 || x > n) {
        fail(ErrorKind::RangeViolation, "element " + std::to_string(x) + " outside 1.." +
                                            std::to_string(n));
      }
      if (labels[static_cast<std::size_t>(x) - 1] != -1) {
        fail(ErrorKind::RangeViolation, "element " + std::to_string(x) + " appears twice");
      }
      labels[static_cast<std::size_t>(x) - 1] = static_cast<int>(b);
    }
  }
  for (int x = 1; x <= n; ++x) {
    if (labels[static_cast<std::size_t>(x) - 1] == -1) {
      fail(ErrorKind::RangeViolation, "element " + std::to_string(x) + " not covered");
    }
  }
  return Partition(n, std::move(labels));
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count_));
  for (int x = 1; x <= n_; ++x) {
    out[static_cast<std::size_t>(labels_[static_cast<std::size_t>(x) - 1])].push_back(x);
  }
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (n_ != coarser.n_) {
    fail(ErrorKind::ContextMismatch, "partitions over different ground sets");
  }
  // block label here -> block label in coarser, must be single-valued
  std::vector<int> image(static_cast<std::size_t>(block_count_), -1);
  for (int x = 1; x <= n_; ++x) {
    int mine = label_of(x);
    int theirs = coarser.label_of(x);
    if (image[static_cast<std::size_t>(mine)] == -1) {
      image[static_cast<std::size_t>(mine)] = theirs;
    } else if (image[static_cast<std::size_t>(mine)] != theirs) {
      return false;
    }
  }
  return true;
}

const char* to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Q: return "Q";
    case FamilyTag::P: return "P";
    case FamilyTag::R: return "R";
  }
  return "?";
}

bool is_convex(const std::vector<int>& s) {
  if (s.empty()) {
    fail(ErrorKind::RangeViolation, "convexity is defined for nonempty sets");
  }
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  return sorted.back() - sorted.front() + 1 == static_cast<int>(sorted.size());
}

PartitionClass classify(const Partition& p) {
  auto blocks = p.blocks();
  const int l = p.block_count();
  bool all_convex = true;
  for (const auto& b : blocks) {
    if (!is_convex(b)) {
      all_convex = false;
      break;
    }
  }
  if (all_convex) {
    return {FamilyTag::Q, l};
  }
  // First block is the one containing 1 (canonical label order).
  const auto& first = blocks.front();
  if (!prefix_suffix_split(first, p.n()).has_value()) {
    return {FamilyTag::R, l};
  }
  for (std::size_t b = 1; b < blocks.size(); ++b) {
    if (!is_convex(blocks[b])) {
      return {FamilyTag::R, l};
    }
  }
  return {FamilyTag::P, l};
}

Partition kernel(const Transformation& f) {
  std::vector<int> labels;
  labels.reserve(f.images().size());
  for (int v : f.images()) {
    labels.push_back(f.ctx().y_index(v));
  }
  return Partition(f.ctx().n(), std::move(labels));
}

std::vector<Partition> enumerate_q(int n, int l) {
  if (l < 1 || l > n) {
    fail(ErrorKind::InvalidArity, "interval partitions need 1 <= l <= n, got l=" +
                                      std::to_string(l) + " n=" + std::to_string(n));
  }
  std::vector<Partition> out;
  std::vector<int> cur;
  collect_combinations(1, n - 1, l - 1, cur,
                       [&](const std::vector<int>& cuts) { out.push_back(from_cuts(n, cuts)); });
  return out;
}

std::vector<Partition> enumerate_p(int n, int l) {
  if (l < 2 || l > n - 1) {
    fail(ErrorKind::InvalidArity, "endpoints-joined partitions need 2 <= l <= n-1, got l=" +
                                      std::to_string(l) + " n=" + std::to_string(n));
  }
  std::vector<Partition> out;
  std::vector<int> cur;
  collect_combinations(1, n - 1, l, cur, [&](const std::vector<int>& cuts) {
    // l+1 interval pieces; first and last joined into one block.
    std::vector<int> labels(static_cast<std::size_t>(n));
    int piece = 0;
    std::size_t next_cut = 0;
    for (int x = 1; x <= n; ++x) {
      labels[static_cast<std::size_t>(x) - 1] = (piece == l) ? 0 : piece;
      if (next_cut < cuts.size() && x == cuts[next_cut]) {
        ++piece;
        ++next_cut;
      }
    }
    out.emplace_back(n, std::move(labels));
  });
  return out;
}

std::vector<Partition> enumerate_all(int n, int l) {
  if (l < 1 || l > n) {
    fail(ErrorKind::InvalidArity, "set partitions need 1 <= l <= n, got l=" + std::to_string(l) +
                                      " n=" + std::to_string(n));
  }
  // Restricted growth strings in lexicographic order.
  std::vector<Partition> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int max_used) -> void {
    if (pos == n) {
      if (max_used + 1 == l) {
        out.emplace_back(n, rgs);
      }
      return;
    }
    // Pruning: remaining positions must be able to reach l labels.
    if (max_used + 1 + (n - pos) < l) {
      return;
    }
    for (int lab = 0; lab <= std::min(max_used + 1, l - 1); ++lab) {
      rgs[static_cast<std::size_t>(pos)] = lab;
      self(self, pos + 1, std::max(max_used, lab));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

std::vector<Partition> enumerate_r(int n, int l) {
  std::vector<Partition> out;
  for (auto& p : enumerate_all(n, l)) {
    if (classify(p).tag == FamilyTag::R) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    fail(ErrorKind::InvalidArity, "binomial needs 0 <= k <= n");
  }
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // Exact at every step: r * (n-k+i) is divisible by i.
    r = checked_mul(r, static_cast<std::uint64_t>(n - k + i)) / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t stirling2(int n, int m) {
  if (m < 1 || n < 1 || m > n) {
    fail(ErrorKind::InvalidArity, "stirling2 needs 1 <= m <= n");
  }
  // S(i,j) = j*S(i-1,j) + S(i-1,j-1), one row at a time.
  std::vector<std::uint64_t> row(static_cast<std::size_t>(m) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, m); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] = checked_add(
          checked_mul(static_cast<std::uint64_t>(j), row[static_cast<std::size_t>(j)]),
          row[static_cast<std::size_t>(j) - 1]);
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(m)];
}

Partition refine_to_p(const Partition& p, int target_m) {
  const int n = p.n();
  if (target_m < p.block_count() || target_m > n - 1) {
    fail(ErrorKind::InfeasibleRefinement, "target block count " + std::to_string(target_m) +
                                              " outside " + std::to_string(p.block_count()) +
                                              ".." + std::to_string(n - 1));
  }
  auto blocks = p.blocks();
  const auto& first = blocks.front();
  if (p.label_of(1) != p.label_of(n)) {
    fail(ErrorKind::InfeasibleRefinement, "1 and n lie in different blocks");
  }

  // Interval pieces: prefix of the endpoints block, the middle blocks, its
  // suffix.  For the one-block partition the split is {1} | {2..n}.
  std::vector<std::vector<int>> pieces;
  if (p.block_count() == 1) {
    pieces.push_back({1});
    std::vector<int> rest;
    for (int x = 2; x <= n; ++x) {
      rest.push_back(x);
    }
    pieces.push_back(std::move(rest));
  } else {
    auto split = prefix_suffix_split(first, n);
    if (!split.has_value()) {
      fail(ErrorKind::InfeasibleRefinement, "endpoints block is not a prefix-suffix union");
    }
    std::vector<int> prefix, suffix;
    for (int x : first) {
      (x <= split->first ? prefix : suffix).push_back(x);
    }
    std::vector<std::vector<int>> middles(blocks.begin() + 1, blocks.end());
    for (const auto& b : middles) {
      if (!is_convex(b)) {
        fail(ErrorKind::InfeasibleRefinement, "inner block is not an interval");
      }
    }
    std::sort(middles.begin(), middles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    pieces.push_back(std::move(prefix));
    for (auto& b : middles) {
      pieces.push_back(std::move(b));
    }
    pieces.push_back(std::move(suffix));
  }

  while (static_cast<int>(pieces.size()) < target_m + 1) {
    bool cut = false;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (pieces[i].size() >= 2) {
        std::vector<int> head = {pieces[i].front()};
        pieces[i].erase(pieces[i].begin());
        pieces.insert(pieces.begin() + static_cast<std::ptrdiff_t>(i), std::move(head));
        cut = true;
        break;
      }
    }
    if (!cut) {
      fail(ErrorKind::InfeasibleRefinement, "no piece left to cut");
    }
  }

  std::vector<std::vector<int>> result;
  std::vector<int> joined = pieces.front();
  joined.insert(joined.end(), pieces.back().begin(), pieces.back().end());
  result.push_back(std::move(joined));
  for (std::size_t i = 1; i + 1 < pieces.size(); ++i) {
    result.push_back(pieces[i]);
  }
  return Partition::from_blocks(n, result);
}

}  // namespace chainrr
