#include "chainrr/closure.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>

#include "chainrr/generators.hpp"
#include "chainrr/partition.hpp"

namespace chainrr {

namespace {

std::uint64_t universe_size_checked(const ChainContext& ctx, const Budget& budget) {
  std::uint64_t size = 1;
  const auto m = static_cast<std::uint64_t>(ctx.m());
  for (int i = 0; i < ctx.n(); ++i) {
    if (__builtin_mul_overflow(size, m, &size) || size > budget.max_universe) {
      fail(ErrorKind::BudgetExceeded,
           "universe m^n exceeds the configured limit of " + std::to_string(budget.max_universe));
    }
  }
  return size;
}

// Flat image tables (0-based Y indices) keyed by code, for fast composition.
struct CodeAlgebra {
  int n;
  int m;
  std::uint64_t universe;

  explicit CodeAlgebra(const ChainContext& ctx, const Budget& budget)
      : n(ctx.n()), m(ctx.m()), universe(universe_size_checked(ctx, budget)) {}

  // digits[x-1] = 0-based Y index of the image of x
  void decode(std::uint64_t code, int* digits) const {
    for (int i = 0; i < n; ++i) {
      digits[i] = static_cast<int>(code % static_cast<std::uint64_t>(m));
      code /= static_cast<std::uint64_t>(m);
    }
  }

  std::uint64_t encode(const int* digits) const {
    std::uint64_t code = 0;
    for (int i = n - 1; i >= 0; --i) {
      code = code * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(digits[i]);
    }
    return code;
  }
};

}  // namespace

Budget Budget::from_env() {
  Budget budget;
  if (const char* raw = std::getenv("CHAINRR_MAX_UNIVERSE")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end && *end == '\0' && v > 0) {
      budget.max_universe = v;
    }
  }
  return budget;
}

SemigroupSet::SemigroupSet(ChainContext ctx, std::vector<std::uint64_t> codes, bool closed)
    : ctx_(std::move(ctx)), codes_(std::move(codes)), closed_(closed) {
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
}

bool SemigroupSet::contains(std::uint64_t code) const {
  return std::binary_search(codes_.begin(), codes_.end(), code);
}

bool SemigroupSet::contains(const Transformation& t) const {
  if (t.ctx() != ctx_) {
    fail(ErrorKind::ContextMismatch, "membership test over a different context");
  }
  return contains(t.code());
}

std::vector<Transformation> SemigroupSet::elements() const {
  std::vector<Transformation> out;
  out.reserve(codes_.size());
  for (std::uint64_t code : codes_) {
    out.push_back(Transformation::from_code(ctx_, code));
  }
  return out;
}

SemigroupSet enumerate_t(const ChainContext& ctx, const Budget& budget) {
  CodeAlgebra alg(ctx, budget);
  std::vector<std::uint64_t> codes(alg.universe);
  for (std::uint64_t c = 0; c < alg.universe; ++c) {
    codes[c] = c;
  }
  return SemigroupSet(ctx, std::move(codes), true);
}

namespace {

SemigroupSet enumerate_filtered(const ChainContext& ctx, const Budget& budget,
                                bool (*predicate)(const Transformation&)) {
  CodeAlgebra alg(ctx, budget);
  std::vector<std::uint64_t> codes;
  for (std::uint64_t c = 0; c < alg.universe; ++c) {
    if (predicate(Transformation::from_code(ctx, c))) {
      codes.push_back(c);
    }
  }
  return SemigroupSet(ctx, std::move(codes), true);
}

}  // namespace

SemigroupSet enumerate_o(const ChainContext& ctx, const Budget& budget) {
  return enumerate_filtered(ctx, budget, &is_order_preserving);
}

SemigroupSet enumerate_op(const ChainContext& ctx, const Budget& budget) {
  return enumerate_filtered(ctx, budget, &is_orientation_preserving);
}

namespace {

// Shared worklist saturation.  Multiplies the frontier by the generators on
// both sides.  When `within` is given, stops with NotEqual as soon as an
// element outside it appears, and with Equal once the whole of it is reached.
struct ClosureRun {
  std::vector<std::uint64_t> members;
  bool equals_within = false;
  bool left_within = false;
};

ClosureRun run_closure(const std::vector<Transformation>& gens, const SemigroupSet* within,
                       const Budget& budget, const ProgressHook& progress) {
  if (gens.empty()) {
    fail(ErrorKind::InvalidArity, "closure needs at least one generator");
  }
  const ChainContext& ctx = gens.front().ctx();
  for (const auto& g : gens) {
    if (g.ctx() != ctx) {
      fail(ErrorKind::ContextMismatch, "generators over different contexts");
    }
  }
  CodeAlgebra alg(ctx, budget);

  std::vector<std::vector<int>> gen_digits;
  gen_digits.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<int> d(static_cast<std::size_t>(alg.n));
    alg.decode(g.code(), d.data());
    gen_digits.push_back(std::move(d));
  }
  // digit value v (0-based Y index) sits at chain position y[v]; precompute
  // the digit found there so composition is a table lookup.
  auto digit_at_chain_pos = [&](const std::vector<int>& digits, int pos_1based) {
    return digits[static_cast<std::size_t>(pos_1based) - 1];
  };

  std::vector<char> seen(alg.universe, 0);
  std::deque<std::uint64_t> frontier;
  ClosureRun run;

  auto visit = [&](std::uint64_t code) {
    if (!seen[code]) {
      seen[code] = 1;
      run.members.push_back(code);
      frontier.push_back(code);
      if (within != nullptr && !within->contains(code)) {
        run.left_within = true;
      }
    }
  };
  for (const auto& g : gens) {
    visit(g.code());
    if (run.left_within) {
      return run;
    }
  }

  std::vector<int> w(static_cast<std::size_t>(alg.n));
  std::vector<int> out(static_cast<std::size_t>(alg.n));
  std::size_t steps = 0;
  while (!frontier.empty()) {
    std::uint64_t code = frontier.front();
    frontier.pop_front();
    alg.decode(code, w.data());
    for (const auto& g : gen_digits) {
      // w then g
      for (int i = 0; i < alg.n; ++i) {
        out[static_cast<std::size_t>(i)] = digit_at_chain_pos(g, ctx.y_at(w[static_cast<std::size_t>(i)] + 1));
      }
      visit(alg.encode(out.data()));
      // g then w
      for (int i = 0; i < alg.n; ++i) {
        out[static_cast<std::size_t>(i)] = digit_at_chain_pos(w, ctx.y_at(g[static_cast<std::size_t>(i)] + 1));
      }
      visit(alg.encode(out.data()));
      if (run.left_within) {
        return run;
      }
    }
    if (within != nullptr && run.members.size() == within->size()) {
      // Everything reached lies inside `within` and matches its size; the
      // remaining products cannot leave a closed set.
      run.equals_within = true;
      return run;
    }
    if (progress && (++steps % 1024 == 0)) {
      progress(run.members.size(), frontier.size());
    }
  }
  if (within != nullptr) {
    run.equals_within = run.members.size() == within->size();
  }
  return run;
}

}  // namespace

SemigroupSet closure(const std::vector<Transformation>& gens, const Budget& budget,
                     const ProgressHook& progress) {
  auto run = run_closure(gens, nullptr, budget, progress);
  return SemigroupSet(gens.front().ctx(), std::move(run.members), true);
}

bool closure_equals(const std::vector<Transformation>& gens, const SemigroupSet& within,
                    const Budget& budget) {
  if (!within.closed_under_composition()) {
    fail(ErrorKind::HypothesisViolation, "comparison set must be closed under composition");
  }
  if (!gens.empty() && gens.front().ctx() != within.ctx()) {
    fail(ErrorKind::ContextMismatch, "generators and comparison set over different contexts");
  }
  auto run = run_closure(gens, &within, budget, {});
  return !run.left_within && run.equals_within;
}

std::vector<YMap> ymap_monoid_closure(const std::vector<YMap>& gens) {
  std::vector<YMap> members;
  if (gens.empty()) {
    return members;
  }
  const ChainContext& ctx = gens.front().ctx();
  for (const auto& g : gens) {
    if (g.ctx() != ctx) {
      fail(ErrorKind::ContextMismatch, "Y-map generators over different contexts");
    }
  }
  std::unordered_set<std::uint64_t> seen;
  std::deque<std::size_t> frontier;
  auto visit = [&](YMap f) {
    if (seen.insert(f.code()).second) {
      members.push_back(std::move(f));
      frontier.push_back(members.size() - 1);
    }
  };
  for (const auto& g : gens) {
    visit(g);
  }
  while (!frontier.empty()) {
    std::size_t idx = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      YMap w = members[idx];  // copy: members may reallocate
      visit(compose(w, g));
      visit(compose(g, w));
    }
  }
  return members;
}

bool contains_all_permutations(const ChainContext& ctx, const std::vector<YMap>& closed) {
  std::uint64_t factorial = 1;
  for (int i = 2; i <= ctx.m(); ++i) {
    factorial *= static_cast<std::uint64_t>(i);
  }
  std::uint64_t found = 0;
  std::unordered_set<std::uint64_t> codes;
  for (const auto& f : closed) {
    if (f.is_permutation() && codes.insert(f.code()).second) {
      ++found;
    }
  }
  return found == factorial;
}

bool is_relative_generating(const SemigroupSet& target, const SemigroupSet& base,
                            const std::vector<Transformation>& b, const Budget& budget) {
  std::vector<Transformation> gens = base.elements();
  for (const auto& t : b) {
    if (!target.contains(t)) {
      fail(ErrorKind::RangeViolation, "candidate element lies outside the target semigroup");
    }
    gens.push_back(t);
  }
  return closure_equals(gens, target, budget);
}

bool covers_required_kernels(RelrankTask task, const ChainContext& ctx,
                             const std::vector<Transformation>& b) {
  const auto family = task == RelrankTask::OpOverO ? enumerate_p(ctx.n(), ctx.m())
                                                   : enumerate_r(ctx.n(), ctx.m());
  std::set<Partition> kernels;
  for (const auto& t : b) {
    kernels.insert(kernel(t));
  }
  for (const auto& p : family) {
    if (kernels.find(p) == kernels.end()) {
      return false;
    }
  }
  return true;
}

bool generates_symmetric_group_on_y(const ChainContext& ctx,
                                    const std::vector<Transformation>& b) {
  // Products through a non-injective Y-map are never permutations, so only
  // the permutation restrictions can contribute; their closure is a subgroup
  // of the symmetric group on Y.
  std::vector<YMap> gens;
  for (const auto& t : b) {
    YMap r = restrict_to_y(t);
    if (r.is_permutation()) {
      gens.push_back(std::move(r));
    }
  }
  gens.push_back(restrict_to_y(build_eta(ctx)));
  return contains_all_permutations(ctx, ymap_monoid_closure(gens));
}

RelrankWitness brute_min_relrank(const SemigroupSet& target, const SemigroupSet& base,
                                 const std::vector<Transformation>& pool,
                                 std::size_t upper_bound, RelrankTask task,
                                 const Budget& budget) {
  const ChainContext& ctx = target.ctx();
  if (base.ctx() != ctx) {
    fail(ErrorKind::ContextMismatch, "target and base over different contexts");
  }

  if (is_relative_generating(target, base, {}, budget)) {
    return {0, {}};
  }

  const auto family = task == RelrankTask::OpOverO ? enumerate_p(ctx.n(), ctx.m())
                                                   : enumerate_r(ctx.n(), ctx.m());
  // One slot per required kernel; filling them all is necessary for any
  // relatively generating candidate.
  std::vector<std::vector<std::size_t>> groups(family.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    Partition ker = kernel(pool[i]);
    for (std::size_t k = 0; k < family.size(); ++k) {
      if (ker == family[k]) {
        groups[k].push_back(i);
        break;
      }
    }
  }
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (groups[k].empty()) {
      fail(ErrorKind::NoWitnessWithinBound,
           "pool covers no element with a required kernel; no generating set exists");
    }
  }

  std::uint64_t candidates_tried = 0;
  auto guard = [&]() {
    if (++candidates_tried > budget.max_candidates) {
      fail(ErrorKind::BudgetExceeded, "candidate subset budget exhausted");
    }
  };

  std::set<std::vector<std::uint64_t>> visited;
  RelrankWitness found;
  bool done = false;
  auto try_candidate = [&](const std::vector<std::size_t>& idxs, std::size_t size) {
    std::vector<std::uint64_t> key;
    key.reserve(idxs.size());
    for (std::size_t i : idxs) {
      key.push_back(pool[i].code());
    }
    std::sort(key.begin(), key.end());
    if (!visited.insert(std::move(key)).second) {
      return;
    }
    guard();
    std::vector<Transformation> candidate;
    candidate.reserve(idxs.size());
    for (std::size_t i : idxs) {
      candidate.push_back(pool[i]);
    }
    if (task == RelrankTask::TOverOp && !generates_symmetric_group_on_y(ctx, candidate)) {
      return;
    }
    if (is_relative_generating(target, base, candidate, budget)) {
      found = {size, std::move(candidate)};
      done = true;
    }
  };

  for (std::size_t size = std::max<std::size_t>(family.size(), 1);
       size <= upper_bound && !done; ++size) {
    const std::size_t extras = size - family.size();
    std::vector<std::size_t> pick(family.size(), 0);
    while (!done) {
      std::vector<std::size_t> chosen;
      chosen.reserve(size);
      for (std::size_t k = 0; k < family.size(); ++k) {
        chosen.push_back(groups[k][pick[k]]);
      }
      std::vector<std::size_t> avail;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) {
          avail.push_back(i);
        }
      }
      std::vector<std::size_t> idxs = chosen;
      auto rec = [&](auto&& self, std::size_t start, std::size_t left) -> void {
        if (done) {
          return;
        }
        if (left == 0) {
          try_candidate(idxs, size);
          return;
        }
        for (std::size_t a = start; a + left <= avail.size(); ++a) {
          idxs.push_back(avail[a]);
          self(self, a + 1, left - 1);
          idxs.pop_back();
        }
      };
      rec(rec, 0, extras);
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == groups[k].size()) {
        pick[k] = 0;
        ++k;
      }
      if (k == pick.size()) {
        break;
      }
    }
  }
  if (done) {
    return found;
  }
  fail(ErrorKind::NoWitnessWithinBound,
       "no relatively generating subset of size <= " + std::to_string(upper_bound));
}

}  // namespace chainrr
