// Independent membership check: does an SLAA accept a lasso word?  Used to
// cross-validate every translation stage against the LTL evaluator.

#ifndef SLAA_ORACLE_HPP
#define SLAA_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "slaa/automaton.hpp"
#include "slaa/lasso.hpp"

namespace slaa {

// Decides acceptance by recursion over the self-loop partial order with
// memoization on (state, wrapped position).  A state accepts at a position
// either by eventually leaving itself through a non-looping transition, or
// by looping forever in a way that satisfies the acceptance formula.
// Throws std::invalid_argument when an automaton proposition is missing
// from the word's universe.
bool membership(const Slaa& a, const LassoWord& w);

struct CrossCheckReport {
  // Indices into the word list where eval_lasso and membership disagree.
  std::vector<std::size_t> disagreements;
  bool ok() const { return disagreements.empty(); }
};

CrossCheckReport cross_check(const Formula& f, const Slaa& a,
                             const std::vector<LassoWord>& words);

}  // namespace slaa

#endif  // SLAA_ORACLE_HPP
