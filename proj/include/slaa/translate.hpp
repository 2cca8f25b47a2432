// The three LTL -> SLAA translations.  They share one inductive successor
// function; the merging variants add dedicated rules for F- and
// G-subformulae that fold the subformula's states into a single one.

#ifndef SLAA_TRANSLATE_HPP
#define SLAA_TRANSLATE_HPP

#include <map>
#include <optional>
#include <vector>

#include "slaa/automaton.hpp"
#include "slaa/formula.hpp"

namespace slaa {

enum class Mode { Basic, F, FG };

struct TranslateOptions {
  Mode mode = Mode::FG;
  // Share one orange-mark pool across all F-subformulae (F mode only).
  bool reuse_marks = false;
  // Drop dominated successor entries as they are produced.
  bool prune_while_building = true;
};

// One successor of a state under a fixed letter: the acceptance marks put
// on the transition and the destination configuration, still expressed as
// formulae (states are numbered later).
struct SuccEntry {
  MarkVec marks;
  std::vector<Formula> config;  // canonically sorted, duplicate-free

  bool operator==(const SuccEntry& o) const;
  bool operator<(const SuccEntry& o) const;
};

using SuccessorSet = std::vector<SuccEntry>;

// {(M u M', C u C') | (M,C) in p, (M',C') in q}, deduplicated.
SuccessorSet product(const SuccessorSet& p, const SuccessorSet& q);

// {(0, C) | (M,C) in p}, deduplicated.
SuccessorSet marks_erase(const SuccessorSet& p);

// Exposes the successor function for tests; build() drives the worklist
// construction over all letters.
class Translator {
public:
  Translator(const Formula& root, TranslateOptions opt);

  // Successors of a (subformula-)state under a letter over this
  // translator's proposition list, after the mode's rules.
  SuccessorSet delta(const Formula& state, Letter alpha);

  const std::vector<std::string>& ap() const { return ap_; }
  const std::vector<MarkInfo>& marks() const { return mark_table_; }
  const AccFormula& acceptance() const { return acceptance_; }

  Slaa build();

private:
  SuccessorSet delta_uncached(const Formula& f, Letter alpha);
  SuccessorSet delta_merged_f(const Formula& f, Letter alpha);
  SuccessorSet delta_merged_g(const Formula& f, Letter alpha);
  // The primed successor function used inside a merged G-state: drops the
  // conjunct from its own destinations and, for F/U conjuncts, replaces
  // the marks of non-looping entries with the conjunct's escape mark.
  SuccessorSet delta_prime(const Formula& conjunct, Letter alpha);
  void assign_marks(const Formula& root);
  SuccessorSet prune_entries(SuccessorSet entries) const;

  TranslateOptions opt_;
  Formula root_;
  std::vector<std::string> ap_;
  std::vector<MarkInfo> mark_table_;
  AccFormula acceptance_;
  std::vector<MinimalModel> models_;  // of acceptance_; may be capped off
  bool models_usable_ = false;

  // Mark lookup, populated per mode by assign_marks.
  std::map<Formula, MarkId, FormulaLess> u_loop_;    // (1)_psi for U states
  std::map<Formula, MarkId, FormulaLess> f_loop_;    // (1)_Fpsi tt-loop
  std::map<Formula, MarkId, FormulaLess> escape_;    // square marks (FG)
  std::map<Formula, std::vector<MarkId>, FormulaLess> f_clause_;  // (2)^K
  int orange_count_ = 0;  // size of the shared pool when reusing

  std::map<Formula, std::vector<std::optional<SuccessorSet>>, FormulaLess>
      memo_;
};

// Whether the F,G-merging G-rule applies to always(psi): psi must be a
// (flattened) conjunction whose conjuncts are each temporal or state
// formulae.  Other G-formulae fall back to the basic rule.
bool g_rule_applies(const Formula& g);

Slaa translate(const Formula& root, const TranslateOptions& opt);
Slaa translate_basic(const Formula& root);
Slaa translate_f(const Formula& root, bool reuse_marks = false);
Slaa translate_fg(const Formula& root);

}  // namespace slaa

#endif  // SLAA_TRANSLATE_HPP
