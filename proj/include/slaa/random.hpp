// Seeded random LTL formula generation for the differential-testing and
// benchmark harnesses.

#ifndef SLAA_RANDOM_HPP
#define SLAA_RANDOM_HPP

#include <cstdint>
#include <string>

#include "slaa/formula.hpp"

namespace slaa {

// Per-operator sampling weights.  A node is drawn proportionally to its
// weight among the operators that fit in the remaining tree-size budget.
struct GenPriorities {
  int ap = 1;        // also covers negated propositions and constants
  int and_ = 1;
  int or_ = 1;
  int next = 1;
  int until = 1;
  int release = 1;
  int eventually = 1;
  int always = 1;
};

// The four preset regimes: rand1/rand2/rand4 set F and G priority to
// 1/2/4 with everything else at 1; randfg sets F and G to 2 and zeroes
// X, U and R.
GenPriorities preset_priorities(const std::string& name);

// Deterministic in seed.  Propositions are drawn from p0..p<ap_count-1>.
// The budget counts every node including leaves; the result is exactly
// tree_size nodes before PNF normalization and syntactic simplification
// (which may shrink it).  Throws std::invalid_argument if every priority
// is zero or the preset name is unknown.
Formula random_formula(std::uint32_t seed, int ap_count, int tree_size,
                       const GenPriorities& priorities);

}  // namespace slaa

#endif  // SLAA_RANDOM_HPP
