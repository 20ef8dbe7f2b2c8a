#pragma once

// The distinguished generators: the rotation map eta whose restriction to Y
// is the m-cycle (a_1 ... a_m), the maps alpha_P with prescribed
// endpoints-joined kernels, the canonical relative generating sets for the
// orientation-preserving semigroup over the order-preserving one and for the
// full semigroup over the orientation-preserving one, the relative-rank
// formulas, and the minimal-generating-set characterization checkers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chainrr/chain.hpp"
#include "chainrr/partition.hpp"

namespace chainrr {

struct GeneratingSet {
  ChainContext ctx;
  std::vector<Transformation> elements;
  std::vector<std::string> labels;  // parallel to elements

  explicit GeneratingSet(ChainContext c) : ctx(std::move(c)) {}

  // Deduplicates by value; the first label wins.
  void add(Transformation t, std::string label);
  std::size_t size() const noexcept { return elements.size(); }
  bool contains(const Transformation& t) const;
};

// The rotation generator.  For m = 1 this is the constant map onto the single
// Y value.  Orientation-preserving; its restriction to Y is the m-cycle.
Transformation build_eta(const ChainContext& ctx);

// The canonical map with kernel P (endpoints-joined family, m blocks):
// block i -> a_i, except that when both chain ends lie in Y the images shift
// cyclically (block i -> a_{i+1}, last block -> a_1).  WrongClass if P is not
// an m-block member of the P family.
Transformation build_alpha_p(const ChainContext& ctx, const Partition& p);

// {alpha_P : P in P_m} together with eta, deduplicated.  Requires 1 < m < n.
GeneratingSet canonical_a(const ChainContext& ctx);

// For orientation-preserving beta of rank m: a map with the same kernel that
// is order-preserving when 1 and n lie in different kernel classes, and
// alpha_{ker beta} otherwise.
Transformation kernel_witness(const Transformation& beta);

struct CanonicalB {
  GeneratingSet set;
  // Index of the element whose restriction to Y is the transposition
  // (a_1 a_2); set when m >= 3 and some R_m member admits Y as a transversal.
  std::optional<std::size_t> transposition_index;

  explicit CanonicalB(ChainContext c) : set(std::move(c)) {}
};

// One transformation per R_m kernel: generic elements send the block with the
// i-th smallest minimum to a_i; for m >= 3 the first R_m member with Y as a
// transversal instead realizes the transposition (a_1 a_2) on Y.
// Requires 1 <= m < n.
CanonicalB canonical_b_t_mod_op(const ChainContext& ctx);

// C(n-1, m) when 1 or n is missing from Y, 1 + C(n-1, m) when both are
// present, 0 when m = 1.  Requires m < n for m > 1.
std::uint64_t relrank_op_mod_o(const ChainContext& ctx);

// S(n, m) - C(n, m); 0 when m = 1.
std::uint64_t relrank_t_mod_op(const ChainContext& ctx);

struct MinRelgenReport {
  bool verdict = false;
  std::string failed_condition;  // "i", "ii", "iii", or empty when passing
  std::string witness;           // offending element or kernel, empty when passing
};

// Characterization of minimal relative generating sets of the
// orientation-preserving semigroup over the order-preserving one: with
// B~ = {beta in B : ker beta interval-shaped with m blocks}, checks
//   (i)   every P_m kernel appears among B \ B~,
//   (ii)  |B \ B~| = |P_m|,
//   (iii) eta|_Y is generated by the restrictions of B but not after
//         removing any member of B~.
// Requires 1 < m < n and every element orientation-preserving.
MinRelgenReport check_min_relgen_op_mod_o(const ChainContext& ctx, const GeneratingSet& b);

// Characterization of minimal relative generating sets of the full semigroup
// over the orientation-preserving one: true iff some B~ subset of B has
//   (i)   every R_m kernel appears among B \ B~,
//   (ii)  |B \ B~| = |R_m|,
//   (iii) the symmetric group on Y is generated by the restrictions of B
//         together with eta|_Y, and fails after removing any gamma whose
//         kernel appears in B~.
MinRelgenReport check_min_relgen_t_mod_op(const ChainContext& ctx, const GeneratingSet& b);

}  // namespace chainrr
