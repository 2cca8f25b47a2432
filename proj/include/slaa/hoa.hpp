// Serialization of automata: HOA v1 text and a graph-drawing format.

#ifndef SLAA_HOA_HPP
#define SLAA_HOA_HPP

#include <string>
#include <vector>

#include "slaa/automaton.hpp"

namespace slaa {

// A partial assignment of proposition bits: bit b is constrained to
// (bits >> b) & 1 iff (mask >> b) & 1, free otherwise.
struct LabelImplicant {
  Letter bits = 0;
  Letter mask = 0;
  bool operator==(const LabelImplicant&) const = default;
};

// Condenses an explicit letter set into implicants: sum of minterms with
// single-variable elimination applied to fixpoint.  The implicants' union
// is exactly the input set.
std::vector<LabelImplicant> condense_letters(std::vector<Letter> letters,
                                             std::size_t ap_count);

// HOA v1 text.  The in-memory model allows transitions with an empty
// destination configuration ("branch ends, accepting"); HOA does not, so
// such destinations are redirected to an always-accepting sink state that
// is materialized only here (with a fresh Inf mark when the acceptance
// formula does not already accept an unmarked loop).  Output is
// byte-identical across runs for identical automata.
std::string emit_hoa(const Slaa& a);

// Graphviz text: universal branching drawn as a fork through a point
// node, empty destinations as an edge to a distinguished accept node.
std::string emit_dot(const Slaa& a);

}  // namespace slaa

#endif  // SLAA_HOA_HPP
