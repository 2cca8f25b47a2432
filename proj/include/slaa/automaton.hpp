// The SLAA data model: self-loop alternating automata with transition-based
// acceptance given as a positive boolean combination of Fin/Inf terms.

#ifndef SLAA_AUTOMATON_HPP
#define SLAA_AUTOMATON_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "slaa/formula.hpp"
#include "slaa/lasso.hpp"

namespace slaa {

using StateId = int;
using MarkId = int;

// Sorted, duplicate-free vectors stand in for small sets throughout.
using MarkVec = std::vector<MarkId>;
using Config = std::vector<StateId>;

// Which construction rule a mark renders; kept for provenance and for the
// label printed in diagnostic output.
enum class MarkFamily {
  ULoop,    // self-loop of an until state
  FLoop,    // tt-loop of a merged eventually state
  FClause,  // clause loop of a merged eventually state
  GEscape,  // non-looping escape inside a merged always state
};

struct MarkInfo {
  MarkFamily family;
  Formula owner;            // the subformula the mark belongs to
  int clause = -1;          // clause index, FClause only
  std::string label() const;
};

// ---------------------------------------------------------------------------
// Acceptance formulae

enum class AccOp { True, False, Fin, Inf, And, Or };

class AccFormula {
public:
  AccFormula() : op_(AccOp::True) {}

  static AccFormula t();
  static AccFormula f();
  static AccFormula fin(MarkId m);
  static AccFormula inf(MarkId m);
  static AccFormula conj(std::vector<AccFormula> parts);
  static AccFormula disj(std::vector<AccFormula> parts);

  AccOp op() const { return op_; }
  MarkId mark() const { return mark_; }
  const std::vector<AccFormula>& parts() const { return *parts_; }

  bool operator==(const AccFormula& o) const;

  // HOA-style rendering: "Fin(0) & (Fin(1) | Inf(2))", "t", "f".
  std::string to_string() const;
  // Rendering with every Fin/Inf term reduced to its kind, e.g.
  // "Fin&(Fin|Inf)"; used to compare acceptance shapes.
  std::string shape() const;

private:
  AccOp op_;
  MarkId mark_ = -1;
  std::shared_ptr<const std::vector<AccFormula>> parts_;
};

// Constant folding and flattening of nested and/or; no distribution.
AccFormula acc_simplify(const AccFormula& phi);

// Substitutes terms of `victim`: Fin(victim) -> true, Inf(victim) -> false,
// then folds constants.  Used when a mark is deleted.
AccFormula acc_drop_mark(const AccFormula& phi, MarkId victim);

// Renumbers every mark through the map (old index -> new index).
AccFormula acc_remap(const AccFormula& phi, const std::vector<MarkId>& map);

// Marks mentioned by phi, sorted.
MarkVec acc_marks(const AccFormula& phi);

// Evaluates phi with Inf m -> (m in recurring), Fin m -> (m not in
// recurring); `recurring` sorted.
bool eval_acc(const AccFormula& phi, const MarkVec& recurring);

struct MinimalModel {
  MarkVec fin;
  MarkVec inf;
  bool operator==(const MinimalModel& o) const = default;
};

// The subset-minimal term sets satisfying phi, in a deterministic order.
// Computed structurally (models of a conjunction are the minimized pairwise
// unions, of a disjunction the minimized union), which is exact for
// positive formulae.
std::vector<MinimalModel> minimal_models(const AccFormula& phi);

// ---------------------------------------------------------------------------
// Automata

struct Transition {
  StateId src;
  Letter letter;
  MarkVec marks;
  Config dst;  // destination configuration; empty = branch ends, accepting

  bool operator==(const Transition& o) const = default;
  bool operator<(const Transition& o) const;
};

struct Slaa {
  std::vector<Formula> state_formulas;  // index = StateId
  std::vector<std::string> ap;          // ordered proposition list
  std::vector<MarkInfo> marks;          // index = MarkId
  std::vector<Transition> transitions;  // sorted
  StateId initial = 0;
  AccFormula acceptance;

  std::size_t letter_count() const { return std::size_t{1} << ap.size(); }
  std::vector<const Transition*> transitions_from(StateId s) const;
};

// First invariant violation, or nullopt when the automaton is well formed.
// Checked: state/mark/initial indices in range, transitions sorted and
// duplicate-free, and the non-self-loop reachability relation acyclic.
std::optional<std::string> validate(const Slaa& a);

struct SlaaStats {
  int states = 0;
  int reachable_states = 0;
  int marks = 0;
  bool is_nonalternating = false;  // every reachable transition has |C| <= 1
  bool is_deterministic = false;   // nonalternating, <= 1 transition per
                                   // reachable (state, letter)
};

SlaaStats stats(const Slaa& a);

// States reachable from the initial state, sorted.
std::vector<StateId> reachable_states(const Slaa& a);

}  // namespace slaa

#endif  // SLAA_AUTOMATON_HPP
