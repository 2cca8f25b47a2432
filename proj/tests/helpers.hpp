// Shared helpers for the unit tests: terse constructors, word sampling and
// small brute-force reference implementations used as oracles.

#ifndef SLAA_TESTS_HELPERS_HPP
#define SLAA_TESTS_HELPERS_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "slaa/automaton.hpp"
#include "slaa/formula.hpp"
#include "slaa/lasso.hpp"

namespace test_helpers {

inline slaa::Formula F(const std::string& text) {
  return slaa::parse_formula(text);
}

inline slaa::LassoWord W(const std::string& text,
                         const std::vector<std::string>& universe = {}) {
  return slaa::parse_lasso(text, universe);
}

inline std::vector<slaa::LassoWord> sample_words(const slaa::Formula& f,
                                                 std::uint32_t seed,
                                                 int count) {
  slaa::LassoSampler sampler(seed, slaa::atomic_props(f));
  std::vector<slaa::LassoWord> out;
  for (int i = 0; i < count; ++i) out.push_back(sampler.next());
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force minimal models: treat every Fin(m)/Inf(m) occurrence as an
// independent proposition and enumerate all term subsets.

struct Term {
  bool is_fin;
  slaa::MarkId mark;
  bool operator==(const Term&) const = default;
  bool operator<(const Term& o) const {
    if (is_fin != o.is_fin) return is_fin > o.is_fin;
    return mark < o.mark;
  }
};

inline void collect_terms(const slaa::AccFormula& phi, std::vector<Term>& out) {
  switch (phi.op()) {
    case slaa::AccOp::Fin:
      out.push_back({true, phi.mark()});
      break;
    case slaa::AccOp::Inf:
      out.push_back({false, phi.mark()});
      break;
    case slaa::AccOp::And:
    case slaa::AccOp::Or:
      for (const auto& p : phi.parts()) collect_terms(p, out);
      break;
    default:
      break;
  }
}

inline bool satisfied_by(const slaa::AccFormula& phi,
                         const std::vector<Term>& chosen) {
  switch (phi.op()) {
    case slaa::AccOp::True:
      return true;
    case slaa::AccOp::False:
      return false;
    case slaa::AccOp::Fin:
      return std::find(chosen.begin(), chosen.end(),
                       Term{true, phi.mark()}) != chosen.end();
    case slaa::AccOp::Inf:
      return std::find(chosen.begin(), chosen.end(),
                       Term{false, phi.mark()}) != chosen.end();
    case slaa::AccOp::And:
      for (const auto& p : phi.parts())
        if (!satisfied_by(p, chosen)) return false;
      return true;
    case slaa::AccOp::Or:
      for (const auto& p : phi.parts())
        if (satisfied_by(p, chosen)) return true;
      return false;
  }
  return false;
}

inline std::vector<slaa::MinimalModel> brute_force_minimal_models(
    const slaa::AccFormula& phi) {
  std::vector<Term> terms;
  collect_terms(phi, terms);
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());

  std::vector<std::vector<Term>> models;
  for (std::uint32_t mask = 0; mask < (1u << terms.size()); ++mask) {
    std::vector<Term> chosen;
    for (std::size_t i = 0; i < terms.size(); ++i)
      if ((mask >> i) & 1) chosen.push_back(terms[i]);
    if (satisfied_by(phi, chosen)) models.push_back(chosen);
  }
  // Keep subset-minimal sets only.
  std::vector<slaa::MinimalModel> out;
  for (std::size_t i = 0; i < models.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < models.size() && minimal; ++j)
      if (i != j && models[j].size() < models[i].size() &&
          std::includes(models[i].begin(), models[i].end(), models[j].begin(),
                        models[j].end()))
        minimal = false;
    if (!minimal) continue;
    slaa::MinimalModel m;
    for (const Term& t : models[i])
      (t.is_fin ? m.fin : m.inf).push_back(t.mark);
    out.push_back(m);
  }
  return out;
}

// Random positive acceptance formula over marks 0..mark_count-1.
inline slaa::AccFormula random_acc(std::mt19937& rng, int mark_count,
                                   int depth = 3) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 5 : 3);
  std::uniform_int_distribution<int> mark(0, mark_count - 1);
  switch (kind(rng)) {
    case 0:
      return slaa::AccFormula::t();
    case 1:
      return slaa::AccFormula::f();
    case 2:
      return slaa::AccFormula::fin(mark(rng));
    case 3:
      return slaa::AccFormula::inf(mark(rng));
    default: {
      std::uniform_int_distribution<int> arity(2, 3);
      std::vector<slaa::AccFormula> parts;
      int n = arity(rng);
      for (int i = 0; i < n; ++i)
        parts.push_back(random_acc(rng, mark_count, depth - 1));
      return kind(rng) % 2 ? slaa::AccFormula::conj(parts)
                           : slaa::AccFormula::disj(parts);
    }
  }
}

}  // namespace test_helpers

#endif  // SLAA_TESTS_HELPERS_HPP
