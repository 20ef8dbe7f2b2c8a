#pragma once

#include <vector>

#include "chainrr/chain.hpp"
#include "chainrr/verify.hpp"

namespace chainrr::testing {

inline ChainContext ctx(int n, std::vector<int> y) { return ChainContext(n, std::move(y)); }

inline Transformation map(const ChainContext& c, std::vector<int> images) {
  return Transformation(c, std::move(images));
}

// All contexts with chain size up to n_max, every nonempty Y.
inline std::vector<ChainContext> all_contexts(int n_max) {
  std::vector<ChainContext> out;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& y : y_subsets(n)) {
      out.emplace_back(n, y);
    }
  }
  return out;
}

}  // namespace chainrr::testing
