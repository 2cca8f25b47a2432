// SLAA -> LTL translation: the round-trip half that shows the two
// formalisms are equally expressive.

#ifndef SLAA_BACKTRANSLATE_HPP
#define SLAA_BACKTRANSLATE_HPP

#include "slaa/automaton.hpp"
#include "slaa/formula.hpp"

namespace slaa {

// The full minterm over ap_universe describing exactly `letter`.
Formula letter_formula(Letter letter, const std::vector<std::string>& ap_universe);

// Builds, bottom-up over the self-loop partial order, a formula per state
// that holds exactly on the words the automaton accepts from that state;
// returns the initial state's formula.  Output can be large: only local
// boolean constant folding is applied.
Formula slaa_to_ltl(const Slaa& a);

}  // namespace slaa

#endif  // SLAA_BACKTRANSLATE_HPP
