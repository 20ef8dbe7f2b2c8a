#pragma once

// Constructive factorization: express any orientation-preserving map over
// the order-preserving maps plus the canonical generators, and any map of
// the full semigroup over the orientation-preserving maps plus a supplied
// generating set.  Words are certificates: their composed product equals the
// target.

#include <cstddef>
#include <string>
#include <vector>

#include "chainrr/chain.hpp"
#include "chainrr/generators.hpp"

namespace chainrr {

enum class FactorTag { BaseO, BaseOP, GeneratorA, GeneratorB, EtaPower };

const char* to_string(FactorTag tag);

struct WordFactor {
  Transformation map;  // for EtaPower this is the rotation itself
  FactorTag tag;
  int power;  // >= 1; meaningful for EtaPower, 1 otherwise
  std::string label;
};

struct Word {
  std::vector<WordFactor> factors;

  // Left-to-right product under right action; the word must be nonempty.
  Transformation product() const;
  // Display form, e.g. "alpha[1,4|2,3] * eta^2 * o[2,2,3,3]".
  std::string display() const;
};

// Factors an orientation-preserving map over the order-preserving maps and
// the canonical generators.  Requires 1 < m < n.
Word factor_op_over_o(const Transformation& beta);

// Factors any map over the orientation-preserving maps and b, which must
// cover every R_m kernel and generate, together with the rotation, all
// permutations of Y (HypothesisViolation otherwise, naming the failed
// hypothesis).
Word factor_t_over_op(const Transformation& gamma, const GeneratingSet& b);

// Shortest sequence of generator indices whose product (left to right) is
// sigma, by breadth-first search; ties broken by generator index order.
// NotInSubgroup when sigma is not generated.
std::vector<std::size_t> permutation_word(const YMap& sigma, const std::vector<YMap>& gens);

// Replaces each Y-map by a recorded source transformation whose restriction
// it is.  UnknownRestriction when no source matches.
std::vector<Transformation> lift_y_word_to_transformations(
    const std::vector<YMap>& word, const std::vector<Transformation>& sources);

}  // namespace chainrr
