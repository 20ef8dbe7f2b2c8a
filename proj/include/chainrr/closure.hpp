#pragma once

// Brute-force ground truth: exhaustive enumeration of the three semigroups,
// worklist closure, relative-generation tests, and bounded minimal
// relative-rank search with necessity pruning.

#include <cstdint>
#include <functional>
#include <vector>

#include "chainrr/chain.hpp"

namespace chainrr {

struct Budget {
  std::uint64_t max_universe = 10'000'000;   // refuse when m^n exceeds this
  std::uint64_t max_candidates = 10'000'000; // subset-search cap

  // Reads the CHAINRR_MAX_UNIVERSE override when set.
  static Budget from_env();
};

// An element set of T(X,Y) held as sorted dense codes.
class SemigroupSet {
 public:
  SemigroupSet(ChainContext ctx, std::vector<std::uint64_t> codes, bool closed);

  const ChainContext& ctx() const noexcept { return ctx_; }
  std::size_t size() const noexcept { return codes_.size(); }
  const std::vector<std::uint64_t>& codes() const noexcept { return codes_; }
  bool contains(std::uint64_t code) const;
  bool contains(const Transformation& t) const;
  // Only set after a verified closure pass or a full enumeration.
  bool closed_under_composition() const noexcept { return closed_; }
  std::vector<Transformation> elements() const;

  friend bool operator==(const SemigroupSet& a, const SemigroupSet& b) {
    return a.ctx_ == b.ctx_ && a.codes_ == b.codes_;
  }

 private:
  ChainContext ctx_;
  std::vector<std::uint64_t> codes_;
  bool closed_;
};

using ProgressHook = std::function<void(std::size_t members, std::size_t frontier)>;

// All m^n maps / the order-preserving ones / the orientation-preserving ones.
SemigroupSet enumerate_t(const ChainContext& ctx, const Budget& budget = Budget::from_env());
SemigroupSet enumerate_o(const ChainContext& ctx, const Budget& budget = Budget::from_env());
SemigroupSet enumerate_op(const ChainContext& ctx, const Budget& budget = Budget::from_env());

// Least subsemigroup containing gens, by worklist saturation multiplying the
// frontier by the generators on both sides.
SemigroupSet closure(const std::vector<Transformation>& gens,
                     const Budget& budget = Budget::from_env(),
                     const ProgressHook& progress = {});

// closure(gens) == within, with early exit; within must be closed.
bool closure_equals(const std::vector<Transformation>& gens, const SemigroupSet& within,
                    const Budget& budget = Budget::from_env());

// Closure of a set of Y-maps under composition.
std::vector<YMap> ymap_monoid_closure(const std::vector<YMap>& gens);

// True iff every permutation of Y appears in the (already closed) set.
bool contains_all_permutations(const ChainContext& ctx, const std::vector<YMap>& closed);

// True iff base together with b generates target.
bool is_relative_generating(const SemigroupSet& target, const SemigroupSet& base,
                            const std::vector<Transformation>& b,
                            const Budget& budget = Budget::from_env());

enum class RelrankTask {
  OpOverO,  // target OP, base O; candidates must cover every P_m kernel
  TOverOp,  // target T, base OP; candidates must cover every R_m kernel and
            // generate the symmetric group on Y together with eta|_Y
};

struct RelrankWitness {
  std::uint64_t rank = 0;
  std::vector<Transformation> witness;
};

// Smallest |B| <= upper_bound with B drawn from pool and base + B generating
// target.  Size-increasing search; candidates are assembled as one element
// per required kernel plus extras, which by the necessity lemmas loses no
// generating set.  Deterministic order; returns the first witness found.
RelrankWitness brute_min_relrank(const SemigroupSet& target, const SemigroupSet& base,
                                 const std::vector<Transformation>& pool,
                                 std::size_t upper_bound, RelrankTask task,
                                 const Budget& budget = Budget::from_env());

// The necessity conditions used as search filters, exposed for independent
// verification: kernel coverage (P_m or R_m by task) and, for the full
// semigroup task, generation of the symmetric group on Y.
bool covers_required_kernels(RelrankTask task, const ChainContext& ctx,
                             const std::vector<Transformation>& b);
bool generates_symmetric_group_on_y(const ChainContext& ctx,
                                    const std::vector<Transformation>& b);

}  // namespace chainrr
