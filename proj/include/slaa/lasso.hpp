// Ultimately periodic words prefix . period^omega and the ground-truth
// LTL evaluator over them.

#ifndef SLAA_LASSO_HPP
#define SLAA_LASSO_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "slaa/formula.hpp"

namespace slaa {

// A letter is a subset of an ordered atomic-proposition list, encoded as a
// bitmask: bit i set iff proposition i holds.
using Letter = std::uint32_t;

struct LassoWord {
  std::vector<std::string> ap;  // sorted universe
  std::vector<Letter> prefix;
  std::vector<Letter> period;   // nonempty

  std::string to_string() const;
};

// Text format: `prefix;period`, both comma-separated letter lists, each
// letter `{a,b}` or `{}`.  The universe is the union of mentioned names
// plus extra_universe.  Throws ParseError.
LassoWord parse_lasso(std::string_view text,
                      const std::vector<std::string>& extra_universe = {});

// Decides word |= f by fixpoint iteration over the n+p distinct suffixes.
// Throws std::invalid_argument if an atomic proposition of f is missing
// from the word's universe.
bool eval_lasso(const Formula& f, const LassoWord& w);

// Seeded sampler used by the differential-testing harnesses: prefix length
// 0..3, period length 1..4, letters uniform.
class LassoSampler {
public:
  LassoSampler(std::uint32_t seed, std::vector<std::string> ap)
      : rng_(seed), ap_(std::move(ap)) {}

  LassoWord next();

private:
  std::mt19937 rng_;
  std::vector<std::string> ap_;
};

}  // namespace slaa

#endif  // SLAA_LASSO_HPP
