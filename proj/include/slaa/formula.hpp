// LTL abstract syntax in positive normal form.
//
// Formulae are immutable trees with shared subterms.  Negation occurs only
// on atomic propositions; the surface parser additionally accepts !, ->,
// <->, W and M and rewrites them away.  Structural equality is decidable
// and a total "canonical" order on formulae is provided; it is used
// everywhere a deterministic iteration order is needed (DNF clauses, mark
// assignment, state numbering).

#ifndef SLAA_FORMULA_HPP
#define SLAA_FORMULA_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slaa {

enum class Op {
  True,
  False,
  Ap,
  NotAp,
  And,
  Or,
  Next,
  Until,
  Release,
  Eventually,
  Always,
};

class Formula {
public:
  // Default-constructed value is tt.
  Formula();

  static Formula tt();
  static Formula ff();
  static Formula ap(std::string name);
  static Formula nap(std::string name);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula next(Formula f);
  static Formula until(Formula l, Formula r);
  static Formula release(Formula l, Formula r);
  static Formula eventually(Formula f);
  static Formula always(Formula f);

  Op op() const;
  // Valid for Ap/NotAp nodes only.
  const std::string& ap_name() const;
  // Children: left() is also the single child of unary nodes.
  Formula left() const;
  Formula right() const;
  Formula child() const { return left(); }

  int tree_size() const;
  std::size_t hash() const;
  // Stable pointer identity of the underlying node; usable as a memo key
  // (structurally equal formulae may still have distinct ids).
  const void* id() const;

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

  // Canonical total order: (node-kind rank, children recursively, AP name).
  int compare(const Formula& o) const;
  bool operator<(const Formula& o) const { return compare(o) < 0; }

  std::string to_string() const;

  struct Node;  // definition private to the implementation file

private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaLess {
  bool operator()(const Formula& a, const Formula& b) const {
    return a.compare(b) < 0;
  }
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// Parses the surface syntax (identifiers, ! & | -> <-> X U R W M F G,
// constants 1/true/0/false) into PNF and applies the local syntactic
// rewrites below.  Throws ParseError.
Formula parse_formula(std::string_view text);

// Boolean-constant folding, idempotence and flattening of and/or chains.
// No temporal rewriting.
Formula simplify_syntactic(const Formula& f);

// True iff the topmost operator is neither conjunction nor disjunction.
// tt, ff and literals count as temporal.
bool is_temporal(const Formula& f);

// True iff f contains no X/U/R/F/G node.
bool is_state_formula(const Formula& f);

// True iff f contains a proper temporal operator (X/U/R/F/G) anywhere.
bool has_temporal_operator(const Formula& f);

// Distinct subformulae of f in canonical order (including f itself).
std::vector<Formula> subformulae(const Formula& f);

// Sorted distinct atomic proposition names of f.
std::vector<std::string> atomic_props(const Formula& f);

// A DNF clause: canonically sorted set of temporal formulae.
using Clause = std::vector<Formula>;

// Decomposition into disjunctive normal form: temporal f -> {{f}},
// or -> union of clause sets, and -> pairwise clause unions.  Clauses and
// the clause set are canonically ordered and deduplicated.
std::vector<Clause> dnf_decompose(const Formula& f);

// The conjunction of a clause; a singleton clause is its only member.
Formula clause_conjunction(const Clause& k);

// Top-level conjuncts of f with nested conjunctions flattened.
std::vector<Formula> conjuncts(const Formula& f);

// Mergeable formulae are the shapes improved by the merging translations:
// an F-subformula whose argument contains a proper temporal operator, or a
// G of a conjunction with at least one conjunct rooted in X/U/R/F/G.
bool is_mergeable(const Formula& f);

// (F_phi, U_phi): distinct F-subformulae and U-subformulae, canonical order.
std::pair<std::vector<Formula>, std::vector<Formula>>
collect_f_and_u(const Formula& f);

}  // namespace slaa

#endif  // SLAA_FORMULA_HPP
