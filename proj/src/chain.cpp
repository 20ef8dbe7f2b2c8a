#include "chainrr/chain.hpp"

#include <algorithm>
#include <string>

namespace chainrr {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RangeViolation: return "RangeViolation";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::InvalidArity: return "InvalidArity";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::WrongClass: return "WrongClass";
    case ErrorKind::InfeasibleRefinement: return "InfeasibleRefinement";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::ElementNotInOP: return "ElementNotInOP";
    case ErrorKind::NotInSubgroup: return "NotInSubgroup";
    case ErrorKind::UnknownRestriction: return "UnknownRestriction";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NoWitnessWithinBound: return "NoWitnessWithinBound";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

ChainContext::ChainContext(int n, std::vector<int> y) : n_(n), y_(std::move(y)) {
  if (n_ < 1) {
    fail(ErrorKind::RangeViolation, "chain size must be positive, got " + std::to_string(n_));
  }
  if (y_.empty()) {
    fail(ErrorKind::RangeViolation, "Y must be nonempty");
  }
  for (std::size_t i = 0; i < y_.size(); ++i) {
    if (y_[i] < 1 || y_[i] > n_) {
      fail(ErrorKind::RangeViolation,
           "Y value " + std::to_string(y_[i]) + " outside chain 1.." + std::to_string(n_));
    }
    if (i > 0 && y_[i] <= y_[i - 1]) {
      fail(ErrorKind::RangeViolation, "Y must be strictly increasing");
    }
  }
}

int ChainContext::y_at(int i) const {
  if (i < 1 || i > m()) {
    fail(ErrorKind::RangeViolation, "Y index " + std::to_string(i) + " out of 1.." + std::to_string(m()));
  }
  return y_[static_cast<std::size_t>(i) - 1];
}

bool ChainContext::in_y(int value) const {
  return std::binary_search(y_.begin(), y_.end(), value);
}

int ChainContext::y_index(int value) const {
  auto it = std::lower_bound(y_.begin(), y_.end(), value);
  if (it == y_.end() || *it != value) {
    return 0;
  }
  return static_cast<int>(it - y_.begin()) + 1;
}

Transformation::Transformation(ChainContext ctx, std::vector<int> images)
    : ctx_(std::move(ctx)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != ctx_.n()) {
    fail(ErrorKind::LengthMismatch, "image sequence has length " +
                                        std::to_string(images_.size()) + ", expected " +
                                        std::to_string(ctx_.n()));
  }
  for (int x = 1; x <= ctx_.n(); ++x) {
    int v = images_[static_cast<std::size_t>(x) - 1];
    if (!ctx_.in_y(v)) {
      fail(ErrorKind::RangeViolation, "image " + std::to_string(v) + " of " +
                                          std::to_string(x) + " is not in Y");
    }
  }
}

int Transformation::rank() const {
  std::vector<int> seen(static_cast<std::size_t>(ctx_.m()), 0);
  int count = 0;
  for (int v : images_) {
    int i = ctx_.y_index(v);
    if (!seen[static_cast<std::size_t>(i) - 1]) {
      seen[static_cast<std::size_t>(i) - 1] = 1;
      ++count;
    }
  }
  return count;
}

std::uint64_t Transformation::code() const {
  std::uint64_t code = 0;
  std::uint64_t radix = 1;
  auto m = static_cast<std::uint64_t>(ctx_.m());
  for (int v : images_) {
    code += static_cast<std::uint64_t>(ctx_.y_index(v) - 1) * radix;
    radix *= m;
  }
  return code;
}

Transformation Transformation::from_code(const ChainContext& ctx, std::uint64_t code) {
  std::vector<int> images(static_cast<std::size_t>(ctx.n()));
  auto m = static_cast<std::uint64_t>(ctx.m());
  for (int x = 1; x <= ctx.n(); ++x) {
    images[static_cast<std::size_t>(x) - 1] = ctx.y_at(static_cast<int>(code % m) + 1);
    code /= m;
  }
  return Transformation(ctx, std::move(images));
}

YMap::YMap(ChainContext ctx, std::vector<int> images_on_y)
    : ctx_(std::move(ctx)), images_(std::move(images_on_y)) {
  if (static_cast<int>(images_.size()) != ctx_.m()) {
    fail(ErrorKind::LengthMismatch, "Y-map has " + std::to_string(images_.size()) +
                                        " images, expected " + std::to_string(ctx_.m()));
  }
  for (int v : images_) {
    if (!ctx_.in_y(v)) {
      fail(ErrorKind::RangeViolation, "Y-map image " + std::to_string(v) + " is not in Y");
    }
  }
}

int YMap::apply(int y) const {
  int i = ctx_.y_index(y);
  if (i == 0) {
    fail(ErrorKind::RangeViolation, std::to_string(y) + " is not in Y");
  }
  return images_[static_cast<std::size_t>(i) - 1];
}

bool YMap::is_permutation() const {
  std::vector<int> seen(images_.size(), 0);
  for (int v : images_) {
    int i = ctx_.y_index(v);
    if (seen[static_cast<std::size_t>(i) - 1]) {
      return false;
    }
    seen[static_cast<std::size_t>(i) - 1] = 1;
  }
  return true;
}

bool YMap::is_identity() const { return images_ == ctx_.y(); }

std::uint64_t YMap::code() const {
  std::uint64_t code = 0;
  std::uint64_t radix = 1;
  auto m = static_cast<std::uint64_t>(ctx_.m());
  for (int v : images_) {
    code += static_cast<std::uint64_t>(ctx_.y_index(v) - 1) * radix;
    radix *= m;
  }
  return code;
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.ctx() != g.ctx()) {
    fail(ErrorKind::ContextMismatch, "composing transformations over different contexts");
  }
  const int n = f.ctx().n();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    images[static_cast<std::size_t>(x) - 1] = g(f(x));
  }
  return Transformation(f.ctx(), std::move(images));
}

YMap compose(const YMap& f, const YMap& g) {
  if (f.ctx() != g.ctx()) {
    fail(ErrorKind::ContextMismatch, "composing Y-maps over different contexts");
  }
  std::vector<int> images;
  images.reserve(f.images_on_y().size());
  for (int v : f.images_on_y()) {
    images.push_back(g.apply(v));
  }
  return YMap(f.ctx(), std::move(images));
}

YMap restrict_to_y(const Transformation& f) {
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(f.ctx().m()));
  for (int i = 1; i <= f.ctx().m(); ++i) {
    images.push_back(f(f.ctx().y_at(i)));
  }
  return YMap(f.ctx(), std::move(images));
}

YMap y_identity(const ChainContext& ctx) { return YMap(ctx, ctx.y()); }

bool is_order_preserving(const Transformation& f) {
  const auto& img = f.images();
  for (std::size_t i = 1; i < img.size(); ++i) {
    if (img[i] < img[i - 1]) {
      return false;
    }
  }
  return true;
}

bool is_orientation_preserving(const Transformation& f) {
  const auto& img = f.images();
  int descents = 0;
  for (std::size_t i = 1; i < img.size(); ++i) {
    if (img[i] < img[i - 1]) {
      ++descents;
    }
  }
  return descents == 0 || (descents == 1 && img.back() <= img.front());
}

bool is_orientation_preserving_oracle(const Transformation& f) {
  const auto& img = f.images();
  const int n = static_cast<int>(img.size());
  auto non_decreasing = [&](int lo, int hi) {  // 1-based inclusive
    for (int x = lo + 1; x <= hi; ++x) {
      if (img[static_cast<std::size_t>(x) - 1] < img[static_cast<std::size_t>(x) - 2]) {
        return false;
      }
    }
    return true;
  };
  for (int cut = 1; cut <= n; ++cut) {
    if (!non_decreasing(1, cut) || !non_decreasing(cut + 1, n)) {
      continue;
    }
    if (cut == n) {
      return true;  // second part empty
    }
    int min_first = img[0];
    for (int x = 2; x <= cut; ++x) {
      min_first = std::min(min_first, img[static_cast<std::size_t>(x) - 1]);
    }
    int max_second = img[static_cast<std::size_t>(cut)];
    for (int x = cut + 2; x <= n; ++x) {
      max_second = std::max(max_second, img[static_cast<std::size_t>(x) - 1]);
    }
    if (max_second <= min_first) {
      return true;
    }
  }
  return false;
}

}  // namespace chainrr
