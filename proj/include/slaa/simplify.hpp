// Post-construction automaton cleanup: dominance-based transition pruning,
// unreachable-state removal, and unused-mark pruning.

#ifndef SLAA_SIMPLIFY_HPP
#define SLAA_SIMPLIFY_HPP

#include "slaa/automaton.hpp"

namespace slaa {

// t1 supersedes t2 (same source and letter assumed): its configuration is
// a subset and, under every minimal model of the acceptance formula, its
// marks are at least as favorable.
bool dominates(const Transition& t1, const Transition& t2,
               const std::vector<MinimalModel>& models);

// Removes transitions strictly dominated by another with the same source
// and letter; of two mutually dominating transitions the canonically
// smaller one survives.
Slaa prune_dominated(const Slaa& a);

// Keeps exactly the states reachable from the initial one and renumbers
// them (order preserved).
Slaa remove_unreachable(const Slaa& a);

// Deletes marks that appear on no looping transition: they are erased from
// transitions and substituted in the acceptance formula (Fin -> true,
// Inf -> false); surviving marks are reindexed densely.
Slaa prune_unused_marks(const Slaa& a);

// The full pipeline: one dominance pass, then unreachable-state and
// unused-mark removal iterated to fixpoint.
Slaa simplify(const Slaa& a);

}  // namespace slaa

#endif  // SLAA_SIMPLIFY_HPP
