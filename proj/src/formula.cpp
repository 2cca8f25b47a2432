#include "slaa/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace slaa {

struct Formula::Node {
  Op op;
  std::string name;          // Ap/NotAp only
  std::shared_ptr<const Node> left, right;
  std::size_t hash = 0;
  int size = 1;
};

namespace {

int op_rank(Op op) { return static_cast<int>(op); }

std::shared_ptr<const Formula::Node> make_node(Op op, std::string name,
                                               std::shared_ptr<const Formula::Node> l,
                                               std::shared_ptr<const Formula::Node> r);

}  // namespace

Formula::Formula() : node_(tt().node_) {}

Formula Formula::tt() {
  static const Formula f{make_node(Op::True, {}, nullptr, nullptr)};
  return f;
}

Formula Formula::ff() {
  static const Formula f{make_node(Op::False, {}, nullptr, nullptr)};
  return f;
}

Formula Formula::ap(std::string name) {
  return Formula{make_node(Op::Ap, std::move(name), nullptr, nullptr)};
}

Formula Formula::nap(std::string name) {
  return Formula{make_node(Op::NotAp, std::move(name), nullptr, nullptr)};
}

Formula Formula::conj(Formula l, Formula r) {
  return Formula{make_node(Op::And, {}, l.node_, r.node_)};
}

Formula Formula::disj(Formula l, Formula r) {
  return Formula{make_node(Op::Or, {}, l.node_, r.node_)};
}

Formula Formula::next(Formula f) {
  return Formula{make_node(Op::Next, {}, f.node_, nullptr)};
}

Formula Formula::until(Formula l, Formula r) {
  return Formula{make_node(Op::Until, {}, l.node_, r.node_)};
}

Formula Formula::release(Formula l, Formula r) {
  return Formula{make_node(Op::Release, {}, l.node_, r.node_)};
}

Formula Formula::eventually(Formula f) {
  return Formula{make_node(Op::Eventually, {}, f.node_, nullptr)};
}

Formula Formula::always(Formula f) {
  return Formula{make_node(Op::Always, {}, f.node_, nullptr)};
}

namespace {

std::shared_ptr<const Formula::Node> make_node(Op op, std::string name,
                                               std::shared_ptr<const Formula::Node> l,
                                               std::shared_ptr<const Formula::Node> r) {
  auto n = std::make_shared<Formula::Node>();
  n->op = op;
  n->name = std::move(name);
  n->left = std::move(l);
  n->right = std::move(r);
  std::size_t h = std::hash<int>{}(op_rank(op));
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(std::hash<std::string>{}(n->name));
  n->size = 1;
  if (n->left) {
    mix(n->left->hash);
    n->size += n->left->size;
  }
  if (n->right) {
    mix(n->right->hash);
    n->size += n->right->size;
  }
  n->hash = h;
  return n;
}

}  // namespace

Op Formula::op() const { return node_->op; }

const std::string& Formula::ap_name() const { return node_->name; }

Formula Formula::left() const { return Formula{node_->left}; }

Formula Formula::right() const { return Formula{node_->right}; }

int Formula::tree_size() const { return node_->size; }

std::size_t Formula::hash() const { return node_->hash; }

const void* Formula::id() const { return node_.get(); }

bool Formula::operator==(const Formula& o) const {
  return compare(o) == 0;
}

int Formula::compare(const Formula& o) const {
  const Node* a = node_.get();
  const Node* b = o.node_.get();
  std::function<int(const Node*, const Node*)> cmp =
      [&cmp](const Node* x, const Node* y) -> int {
    if (x == y) return 0;
    if (op_rank(x->op) != op_rank(y->op))
      return op_rank(x->op) < op_rank(y->op) ? -1 : 1;
    if (x->op == Op::Ap || x->op == Op::NotAp)
      return x->name.compare(y->name);
    if (x->left) {
      int c = cmp(x->left.get(), y->left.get());
      if (c != 0) return c;
    }
    if (x->right) return cmp(x->right.get(), y->right.get());
    return 0;
  };
  return cmp(a, b);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Precedence levels for printing: higher binds tighter.
int print_level(Op op) {
  switch (op) {
    case Op::Or: return 1;
    case Op::And: return 2;
    case Op::Until:
    case Op::Release: return 3;
    case Op::Next:
    case Op::Eventually:
    case Op::Always: return 4;
    default: return 5;
  }
}

void print_rec(const Formula& f, std::ostringstream& out, int parent_level,
               bool right_side) {
  int lvl = print_level(f.op());
  bool parens = lvl < parent_level ||
                (lvl == parent_level && lvl == 3 && !right_side) ||
                (lvl == parent_level && parent_level <= 2 && right_side);
  if (parens) out << '(';
  switch (f.op()) {
    case Op::True: out << '1'; break;
    case Op::False: out << '0'; break;
    case Op::Ap: out << f.ap_name(); break;
    case Op::NotAp: out << '!' << f.ap_name(); break;
    case Op::And:
      print_rec(f.left(), out, 2, false);
      out << " & ";
      print_rec(f.right(), out, 2, true);
      break;
    case Op::Or:
      print_rec(f.left(), out, 1, false);
      out << " | ";
      print_rec(f.right(), out, 1, true);
      break;
    case Op::Next:
      out << "X ";
      print_rec(f.child(), out, 4, true);
      break;
    case Op::Eventually:
      out << "F ";
      print_rec(f.child(), out, 4, true);
      break;
    case Op::Always:
      out << "G ";
      print_rec(f.child(), out, 4, true);
      break;
    case Op::Until:
      print_rec(f.left(), out, 3, false);
      out << " U ";
      print_rec(f.right(), out, 3, true);
      break;
    case Op::Release:
      print_rec(f.left(), out, 3, false);
      out << " R ";
      print_rec(f.right(), out, 3, true);
      break;
  }
  if (parens) out << ')';
}

}  // namespace

std::string Formula::to_string() const {
  std::ostringstream out;
  print_rec(*this, out, 0, true);
  return out.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

// Surface AST with the operators that get rewritten away during PNF
// conversion.
struct SNode {
  enum class K {
    True, False, Ap, Not, And, Or, Implies, Equiv,
    Next, Until, Release, WeakUntil, StrongRelease, Eventually, Always,
  };
  K kind;
  std::string name;
  std::unique_ptr<SNode> left, right;
};

std::unique_ptr<SNode> snode(SNode::K k, std::unique_ptr<SNode> l = nullptr,
                             std::unique_ptr<SNode> r = nullptr) {
  auto n = std::make_unique<SNode>();
  n->kind = k;
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

struct Lexer {
  enum class Tok {
    End, Ident, True, False, Not, And, Or, Implies, Equiv, LParen, RParen,
    OpX, OpU, OpR, OpW, OpM, OpF, OpG,
  };

  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  Tok tok = Tok::End;
  std::string ident;
  std::size_t tok_pos = 0;

  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    tok_pos = pos_;
    if (pos_ >= text_.size()) {
      tok = Tok::End;
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '(': tok = Tok::LParen; ++pos_; return;
      case ')': tok = Tok::RParen; ++pos_; return;
      case '!': tok = Tok::Not; ++pos_; return;
      case '&': tok = Tok::And; ++pos_; if (pos_ < text_.size() && text_[pos_] == '&') ++pos_; return;
      case '|': tok = Tok::Or; ++pos_; if (pos_ < text_.size() && text_[pos_] == '|') ++pos_; return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          tok = Tok::Implies;
          pos_ += 2;
          return;
        }
        throw ParseError("unexpected character '-'", pos_);
      case '<':
        if (pos_ + 2 < text_.size() + 1 && text_.substr(pos_, 3) == "<->") {
          tok = Tok::Equiv;
          pos_ += 3;
          return;
        }
        throw ParseError("unexpected character '<'", pos_);
      case '1': tok = Tok::True; ++pos_; return;
      case '0': tok = Tok::False; ++pos_; return;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      ident = std::string(text_.substr(start, pos_ - start));
      if (ident == "true") { tok = Tok::True; return; }
      if (ident == "false") { tok = Tok::False; return; }
      if (ident.size() == 1) {
        switch (ident[0]) {
          case 'X': tok = Tok::OpX; return;
          case 'U': tok = Tok::OpU; return;
          case 'R': tok = Tok::OpR; return;
          case 'W': tok = Tok::OpW; return;
          case 'M': tok = Tok::OpM; return;
          case 'F': tok = Tok::OpF; return;
          case 'G': tok = Tok::OpG; return;
          default: break;
        }
      }
      tok = Tok::Ident;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Grammar (low to high): <-> | -> | '|' | '&' | U R W M | unary | atom.
struct Parser {
  explicit Parser(std::string_view text) : lex_(text) {}

  std::unique_ptr<SNode> parse() {
    auto f = parse_equiv();
    if (lex_.tok != Lexer::Tok::End)
      throw ParseError("trailing input", lex_.tok_pos);
    return f;
  }

private:
  Lexer lex_;

  std::unique_ptr<SNode> parse_equiv() {
    auto l = parse_implies();
    if (lex_.tok == Lexer::Tok::Equiv) {
      lex_.advance();
      return snode(SNode::K::Equiv, std::move(l), parse_equiv());
    }
    return l;
  }

  std::unique_ptr<SNode> parse_implies() {
    auto l = parse_or();
    if (lex_.tok == Lexer::Tok::Implies) {
      lex_.advance();
      return snode(SNode::K::Implies, std::move(l), parse_implies());
    }
    return l;
  }

  std::unique_ptr<SNode> parse_or() {
    auto l = parse_and();
    while (lex_.tok == Lexer::Tok::Or) {
      lex_.advance();
      l = snode(SNode::K::Or, std::move(l), parse_and());
    }
    return l;
  }

  std::unique_ptr<SNode> parse_and() {
    auto l = parse_binary_temporal();
    while (lex_.tok == Lexer::Tok::And) {
      lex_.advance();
      l = snode(SNode::K::And, std::move(l), parse_binary_temporal());
    }
    return l;
  }

  std::unique_ptr<SNode> parse_binary_temporal() {
    auto l = parse_unary();
    switch (lex_.tok) {
      case Lexer::Tok::OpU:
        lex_.advance();
        return snode(SNode::K::Until, std::move(l), parse_binary_temporal());
      case Lexer::Tok::OpR:
        lex_.advance();
        return snode(SNode::K::Release, std::move(l), parse_binary_temporal());
      case Lexer::Tok::OpW:
        lex_.advance();
        return snode(SNode::K::WeakUntil, std::move(l), parse_binary_temporal());
      case Lexer::Tok::OpM:
        lex_.advance();
        return snode(SNode::K::StrongRelease, std::move(l),
                     parse_binary_temporal());
      default:
        return l;
    }
  }

  std::unique_ptr<SNode> parse_unary() {
    switch (lex_.tok) {
      case Lexer::Tok::Not:
        lex_.advance();
        return snode(SNode::K::Not, parse_unary());
      case Lexer::Tok::OpX:
        lex_.advance();
        return snode(SNode::K::Next, parse_unary());
      case Lexer::Tok::OpF:
        lex_.advance();
        return snode(SNode::K::Eventually, parse_unary());
      case Lexer::Tok::OpG:
        lex_.advance();
        return snode(SNode::K::Always, parse_unary());
      default:
        return parse_atom();
    }
  }

  std::unique_ptr<SNode> parse_atom() {
    switch (lex_.tok) {
      case Lexer::Tok::True:
        lex_.advance();
        return snode(SNode::K::True);
      case Lexer::Tok::False:
        lex_.advance();
        return snode(SNode::K::False);
      case Lexer::Tok::Ident: {
        auto n = snode(SNode::K::Ap);
        n->name = lex_.ident;
        lex_.advance();
        return n;
      }
      case Lexer::Tok::LParen: {
        lex_.advance();
        auto f = parse_equiv();
        if (lex_.tok != Lexer::Tok::RParen)
          throw ParseError("expected ')'", lex_.tok_pos);
        lex_.advance();
        return f;
      }
      default:
        throw ParseError("expected formula", lex_.tok_pos);
    }
  }
};

// Negations pushed to atoms via the standard dualities; W and M eliminated:
// phi W psi == psi R (psi | phi), phi M psi == psi U (psi & phi).
Formula to_pnf(const SNode* n, bool positive) {
  using K = SNode::K;
  auto pos = [&](const SNode* c) { return to_pnf(c, positive); };
  auto neg = [&](const SNode* c) { return to_pnf(c, !positive); };
  switch (n->kind) {
    case K::True: return positive ? Formula::tt() : Formula::ff();
    case K::False: return positive ? Formula::ff() : Formula::tt();
    case K::Ap:
      return positive ? Formula::ap(n->name) : Formula::nap(n->name);
    case K::Not: return neg(n->left.get());
    case K::And:
      return positive
                 ? Formula::conj(pos(n->left.get()), pos(n->right.get()))
                 : Formula::disj(pos(n->left.get()), pos(n->right.get()));
    case K::Or:
      return positive
                 ? Formula::disj(pos(n->left.get()), pos(n->right.get()))
                 : Formula::conj(pos(n->left.get()), pos(n->right.get()));
    case K::Implies:
      return positive
                 ? Formula::disj(neg(n->left.get()), pos(n->right.get()))
                 : Formula::conj(neg(n->left.get()), pos(n->right.get()));
    case K::Equiv: {
      // (l & r) | (!l & !r); negation flips to (l | r) & (!l | !r).
      Formula lp = to_pnf(n->left.get(), true);
      Formula rp = to_pnf(n->right.get(), true);
      Formula ln = to_pnf(n->left.get(), false);
      Formula rn = to_pnf(n->right.get(), false);
      if (positive)
        return Formula::disj(Formula::conj(lp, rp), Formula::conj(ln, rn));
      return Formula::conj(Formula::disj(ln, rn), Formula::disj(lp, rp));
    }
    case K::Next: return Formula::next(pos(n->left.get()));
    case K::Until:
      return positive
                 ? Formula::until(pos(n->left.get()), pos(n->right.get()))
                 : Formula::release(pos(n->left.get()), pos(n->right.get()));
    case K::Release:
      return positive
                 ? Formula::release(pos(n->left.get()), pos(n->right.get()))
                 : Formula::until(pos(n->left.get()), pos(n->right.get()));
    case K::WeakUntil: {
      Formula l = pos(n->left.get());
      Formula r = pos(n->right.get());
      if (positive) return Formula::release(r, Formula::disj(r, l));
      return Formula::until(r, Formula::conj(r, l));
    }
    case K::StrongRelease: {
      Formula l = pos(n->left.get());
      Formula r = pos(n->right.get());
      if (positive) return Formula::until(r, Formula::conj(r, l));
      return Formula::release(r, Formula::disj(r, l));
    }
    case K::Eventually:
      return positive ? Formula::eventually(pos(n->left.get()))
                      : Formula::always(pos(n->left.get()));
    case K::Always:
      return positive ? Formula::always(pos(n->left.get()))
                      : Formula::eventually(pos(n->left.get()));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  auto surface = p.parse();
  return simplify_syntactic(to_pnf(surface.get(), true));
}

// ---------------------------------------------------------------------------
// Syntactic simplification

namespace {

void flatten_chain(Op op, const Formula& f, std::vector<Formula>& out) {
  if (f.op() == op) {
    flatten_chain(op, f.left(), out);
    flatten_chain(op, f.right(), out);
  } else {
    out.push_back(f);
  }
}

Formula rebuild_chain(Op op, const std::vector<Formula>& parts) {
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i)
    acc = op == Op::And ? Formula::conj(acc, parts[i])
                        : Formula::disj(acc, parts[i]);
  return acc;
}

}  // namespace

Formula simplify_syntactic(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Ap:
    case Op::NotAp:
      return f;
    case Op::Next: return Formula::next(simplify_syntactic(f.child()));
    case Op::Eventually:
      return Formula::eventually(simplify_syntactic(f.child()));
    case Op::Always: return Formula::always(simplify_syntactic(f.child()));
    case Op::Until:
      return Formula::until(simplify_syntactic(f.left()),
                            simplify_syntactic(f.right()));
    case Op::Release:
      return Formula::release(simplify_syntactic(f.left()),
                              simplify_syntactic(f.right()));
    case Op::And:
    case Op::Or: {
      const bool is_and = f.op() == Op::And;
      const Formula absorbing = is_and ? Formula::ff() : Formula::tt();
      const Formula neutral = is_and ? Formula::tt() : Formula::ff();
      std::vector<Formula> raw;
      flatten_chain(f.op(), f, raw);
      std::vector<Formula> parts;
      std::set<Formula, FormulaLess> seen;
      for (const Formula& c : raw) {
        Formula sc = simplify_syntactic(c);
        if (sc.op() == f.op()) {
          // Simplification of a child may expose a new chain; re-flatten.
          std::vector<Formula> inner;
          flatten_chain(f.op(), sc, inner);
          for (const Formula& ic : inner) {
            if (ic == absorbing) return absorbing;
            if (ic == neutral) continue;
            if (seen.insert(ic).second) parts.push_back(ic);
          }
          continue;
        }
        if (sc == absorbing) return absorbing;
        if (sc == neutral) continue;
        if (seen.insert(sc).second) parts.push_back(sc);
      }
      if (parts.empty()) return neutral;
      return rebuild_chain(f.op(), parts);
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Structural analyses

bool is_temporal(const Formula& f) {
  return f.op() != Op::And && f.op() != Op::Or;
}

bool is_state_formula(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Ap:
    case Op::NotAp:
      return true;
    case Op::And:
    case Op::Or:
      return is_state_formula(f.left()) && is_state_formula(f.right());
    default:
      return false;
  }
}

bool has_temporal_operator(const Formula& f) {
  return !is_state_formula(f);
}

namespace {

void collect_subformulae(const Formula& f, std::set<Formula, FormulaLess>& out) {
  if (!out.insert(f).second) return;
  switch (f.op()) {
    case Op::And:
    case Op::Or:
    case Op::Until:
    case Op::Release:
      collect_subformulae(f.left(), out);
      collect_subformulae(f.right(), out);
      break;
    case Op::Next:
    case Op::Eventually:
    case Op::Always:
      collect_subformulae(f.child(), out);
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<Formula> subformulae(const Formula& f) {
  std::set<Formula, FormulaLess> out;
  collect_subformulae(f, out);
  return {out.begin(), out.end()};
}

std::vector<std::string> atomic_props(const Formula& f) {
  std::set<std::string> names;
  for (const Formula& s : subformulae(f))
    if (s.op() == Op::Ap || s.op() == Op::NotAp) names.insert(s.ap_name());
  return {names.begin(), names.end()};
}

std::vector<Clause> dnf_decompose(const Formula& f) {
  if (is_temporal(f)) return {{f}};
  std::vector<Clause> left = dnf_decompose(f.left());
  std::vector<Clause> right = dnf_decompose(f.right());
  std::set<Clause> result;
  if (f.op() == Op::Or) {
    result.insert(left.begin(), left.end());
    result.insert(right.begin(), right.end());
  } else {
    for (const Clause& a : left)
      for (const Clause& b : right) {
        std::set<Formula, FormulaLess> merged(a.begin(), a.end());
        merged.insert(b.begin(), b.end());
        result.insert(Clause(merged.begin(), merged.end()));
      }
  }
  return {result.begin(), result.end()};
}

Formula clause_conjunction(const Clause& k) {
  Formula acc = k.front();
  for (std::size_t i = 1; i < k.size(); ++i) acc = Formula::conj(acc, k[i]);
  return acc;
}

std::vector<Formula> conjuncts(const Formula& f) {
  std::vector<Formula> out;
  flatten_chain(Op::And, f, out);
  return out;
}

bool is_mergeable(const Formula& f) {
  if (f.op() == Op::Eventually && has_temporal_operator(f.child())) return true;
  if (f.op() == Op::Always) {
    for (const Formula& c : conjuncts(f.child()))
      switch (c.op()) {
        case Op::Next:
        case Op::Until:
        case Op::Release:
        case Op::Eventually:
        case Op::Always:
          return true;
        default:
          break;
      }
  }
  switch (f.op()) {
    case Op::And:
    case Op::Or:
    case Op::Until:
    case Op::Release:
      return is_mergeable(f.left()) || is_mergeable(f.right());
    case Op::Next:
    case Op::Eventually:
    case Op::Always:
      return is_mergeable(f.child());
    default:
      return false;
  }
}

std::pair<std::vector<Formula>, std::vector<Formula>>
collect_f_and_u(const Formula& f) {
  std::vector<Formula> fs, us;
  for (const Formula& s : subformulae(f)) {
    if (s.op() == Op::Eventually) fs.push_back(s);
    if (s.op() == Op::Until) us.push_back(s);
  }
  return {fs, us};
}

}  // namespace slaa
