#pragma once

// Core value types: the chain context (n, Y), total transformations X -> Y
// with right-action composition (fg means apply f first), and maps on Y.
// All values are immutable after construction; every operation is pure.

#include <cstdint>
#include <vector>

#include "chainrr/error.hpp"

namespace chainrr {

// The pair (n, Y): domain chain {1 < ... < n} and range Y = {a_1 < ... < a_m}.
class ChainContext {
 public:
  ChainContext(int n, std::vector<int> y);

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(y_.size()); }
  const std::vector<int>& y() const noexcept { return y_; }

  // a_i for 1 <= i <= m.
  int y_at(int i) const;
  bool in_y(int value) const;
  // 1-based index of value in Y, 0 if absent.
  int y_index(int value) const;
  bool one_in_y() const noexcept { return y_.front() == 1; }
  bool n_in_y() const noexcept { return y_.back() == n_; }

  friend bool operator==(const ChainContext&, const ChainContext&) = default;

 private:
  int n_;
  std::vector<int> y_;
};

class YMap;

// A map X -> Y given by its image sequence, 1-based positions.
class Transformation {
 public:
  // Validates length (LengthMismatch) and membership of every image in Y
  // (RangeViolation).
  Transformation(ChainContext ctx, std::vector<int> images);

  const ChainContext& ctx() const noexcept { return ctx_; }
  const std::vector<int>& images() const noexcept { return images_; }
  // Image of x, 1 <= x <= n.
  int operator()(int x) const { return images_[static_cast<std::size_t>(x) - 1]; }
  int rank() const;

  // Dense mixed-radix encoding over Y-indices; bijective onto [0, m^n).
  std::uint64_t code() const;
  static Transformation from_code(const ChainContext& ctx, std::uint64_t code);

  friend bool operator==(const Transformation&, const Transformation&) = default;

 private:
  ChainContext ctx_;
  std::vector<int> images_;
};

// The restriction beta|_Y as a map Y -> Y, stored as the images of a_1..a_m.
class YMap {
 public:
  YMap(ChainContext ctx, std::vector<int> images_on_y);

  const ChainContext& ctx() const noexcept { return ctx_; }
  const std::vector<int>& images_on_y() const noexcept { return images_; }
  // Image of y, which must be a member of Y.
  int apply(int y) const;
  bool is_permutation() const;
  bool is_identity() const;
  std::uint64_t code() const;

  friend bool operator==(const YMap&, const YMap&) = default;

 private:
  ChainContext ctx_;
  std::vector<int> images_;
};

// (fg)[x] = g[f[x]]: f acts first.
Transformation compose(const Transformation& f, const Transformation& g);
YMap compose(const YMap& f, const YMap& g);

YMap restrict_to_y(const Transformation& f);
YMap y_identity(const ChainContext& ctx);

// True iff the image sequence is non-decreasing.
bool is_order_preserving(const Transformation& f);

// Descent criterion: d = 0 descents, or d = 1 and f[n] <= f[1].
bool is_orientation_preserving(const Transformation& f);

// Definitional check: exhaustive scan over cuts X = {1..c} | {c+1..n} with f
// non-decreasing on both parts and every second-part image below every
// first-part image.  Independent oracle for the descent criterion.
bool is_orientation_preserving_oracle(const Transformation& f);

}  // namespace chainrr
