#include "slaa/automaton.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace slaa {

std::string MarkInfo::label() const {
  std::ostringstream out;
  switch (family) {
    case MarkFamily::ULoop:
      out << "loop[" << owner.to_string() << "]";
      break;
    case MarkFamily::FLoop:
      out << "tt-loop[" << owner.to_string() << "]";
      break;
    case MarkFamily::FClause:
      out << "clause" << clause << "[" << owner.to_string() << "]";
      break;
    case MarkFamily::GEscape:
      out << "escape[" << owner.to_string() << "]";
      break;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// AccFormula

AccFormula AccFormula::t() { return AccFormula(); }

AccFormula AccFormula::f() {
  AccFormula r;
  r.op_ = AccOp::False;
  return r;
}

AccFormula AccFormula::fin(MarkId m) {
  AccFormula r;
  r.op_ = AccOp::Fin;
  r.mark_ = m;
  return r;
}

AccFormula AccFormula::inf(MarkId m) {
  AccFormula r;
  r.op_ = AccOp::Inf;
  r.mark_ = m;
  return r;
}

AccFormula AccFormula::conj(std::vector<AccFormula> parts) {
  AccFormula r;
  r.op_ = AccOp::And;
  r.parts_ = std::make_shared<const std::vector<AccFormula>>(std::move(parts));
  return r;
}

AccFormula AccFormula::disj(std::vector<AccFormula> parts) {
  AccFormula r;
  r.op_ = AccOp::Or;
  r.parts_ = std::make_shared<const std::vector<AccFormula>>(std::move(parts));
  return r;
}

bool AccFormula::operator==(const AccFormula& o) const {
  if (op_ != o.op_) return false;
  switch (op_) {
    case AccOp::True:
    case AccOp::False:
      return true;
    case AccOp::Fin:
    case AccOp::Inf:
      return mark_ == o.mark_;
    default:
      return *parts_ == *o.parts_;
  }
}

namespace {

void render(const AccFormula& phi, std::ostringstream& out, bool with_marks,
            bool parenthesize_or) {
  switch (phi.op()) {
    case AccOp::True:
      out << 't';
      break;
    case AccOp::False:
      out << 'f';
      break;
    case AccOp::Fin:
      out << "Fin";
      if (with_marks) out << '(' << phi.mark() << ')';
      break;
    case AccOp::Inf:
      out << "Inf";
      if (with_marks) out << '(' << phi.mark() << ')';
      break;
    case AccOp::And: {
      const char* sep = "";
      for (const AccFormula& p : phi.parts()) {
        out << sep;
        sep = with_marks ? " & " : "&";
        render(p, out, with_marks, true);
      }
      break;
    }
    case AccOp::Or: {
      if (parenthesize_or) out << '(';
      const char* sep = "";
      for (const AccFormula& p : phi.parts()) {
        out << sep;
        sep = with_marks ? " | " : "|";
        render(p, out, with_marks, false);
      }
      if (parenthesize_or) out << ')';
      break;
    }
  }
}

}  // namespace

std::string AccFormula::to_string() const {
  std::ostringstream out;
  render(*this, out, true, false);
  return out.str();
}

std::string AccFormula::shape() const {
  std::ostringstream out;
  render(*this, out, false, false);
  return out.str();
}

AccFormula acc_simplify(const AccFormula& phi) {
  switch (phi.op()) {
    case AccOp::True:
    case AccOp::False:
    case AccOp::Fin:
    case AccOp::Inf:
      return phi;
    case AccOp::And:
    case AccOp::Or: {
      bool is_and = phi.op() == AccOp::And;
      AccOp absorbing = is_and ? AccOp::False : AccOp::True;
      AccOp neutral = is_and ? AccOp::True : AccOp::False;
      std::vector<AccFormula> kept;
      for (const AccFormula& raw : phi.parts()) {
        AccFormula p = acc_simplify(raw);
        if (p.op() == absorbing)
          return is_and ? AccFormula::f() : AccFormula::t();
        if (p.op() == neutral) continue;
        if (p.op() == phi.op()) {
          for (const AccFormula& q : p.parts())
            if (std::find(kept.begin(), kept.end(), q) == kept.end())
              kept.push_back(q);
        } else if (std::find(kept.begin(), kept.end(), p) == kept.end()) {
          kept.push_back(p);
        }
      }
      if (kept.empty()) return is_and ? AccFormula::t() : AccFormula::f();
      if (kept.size() == 1) return kept[0];
      return is_and ? AccFormula::conj(std::move(kept))
                    : AccFormula::disj(std::move(kept));
    }
  }
  return phi;
}

namespace {

AccFormula acc_map_terms(const AccFormula& phi,
                         const auto& fin_fn, const auto& inf_fn) {
  switch (phi.op()) {
    case AccOp::True:
    case AccOp::False:
      return phi;
    case AccOp::Fin:
      return fin_fn(phi.mark());
    case AccOp::Inf:
      return inf_fn(phi.mark());
    case AccOp::And:
    case AccOp::Or: {
      std::vector<AccFormula> parts;
      parts.reserve(phi.parts().size());
      for (const AccFormula& p : phi.parts())
        parts.push_back(acc_map_terms(p, fin_fn, inf_fn));
      return phi.op() == AccOp::And ? AccFormula::conj(std::move(parts))
                                    : AccFormula::disj(std::move(parts));
    }
  }
  return phi;
}

}  // namespace

AccFormula acc_drop_mark(const AccFormula& phi, MarkId victim) {
  AccFormula mapped = acc_map_terms(
      phi,
      [&](MarkId m) { return m == victim ? AccFormula::t() : AccFormula::fin(m); },
      [&](MarkId m) { return m == victim ? AccFormula::f() : AccFormula::inf(m); });
  return acc_simplify(mapped);
}

AccFormula acc_remap(const AccFormula& phi, const std::vector<MarkId>& map) {
  return acc_map_terms(
      phi, [&](MarkId m) { return AccFormula::fin(map[m]); },
      [&](MarkId m) { return AccFormula::inf(map[m]); });
}

namespace {

void collect_marks(const AccFormula& phi, std::set<MarkId>& out) {
  switch (phi.op()) {
    case AccOp::Fin:
    case AccOp::Inf:
      out.insert(phi.mark());
      break;
    case AccOp::And:
    case AccOp::Or:
      for (const AccFormula& p : phi.parts()) collect_marks(p, out);
      break;
    default:
      break;
  }
}

}  // namespace

MarkVec acc_marks(const AccFormula& phi) {
  std::set<MarkId> s;
  collect_marks(phi, s);
  return MarkVec(s.begin(), s.end());
}

bool eval_acc(const AccFormula& phi, const MarkVec& recurring) {
  auto recurs = [&](MarkId m) {
    return std::binary_search(recurring.begin(), recurring.end(), m);
  };
  switch (phi.op()) {
    case AccOp::True:
      return true;
    case AccOp::False:
      return false;
    case AccOp::Fin:
      return !recurs(phi.mark());
    case AccOp::Inf:
      return recurs(phi.mark());
    case AccOp::And:
      for (const AccFormula& p : phi.parts())
        if (!eval_acc(p, recurring)) return false;
      return true;
    case AccOp::Or:
      for (const AccFormula& p : phi.parts())
        if (eval_acc(p, recurring)) return true;
      return false;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Minimal models

namespace {

MarkVec set_union(const MarkVec& a, const MarkVec& b) {
  MarkVec out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

bool includes(const MarkVec& big, const MarkVec& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool model_less(const MinimalModel& a, const MinimalModel& b) {
  if (a.fin != b.fin) return a.fin < b.fin;
  return a.inf < b.inf;
}

// Keeps only subset-minimal models and sorts them.
std::vector<MinimalModel> minimize(std::vector<MinimalModel> models) {
  std::sort(models.begin(), models.end(), model_less);
  models.erase(std::unique(models.begin(), models.end()), models.end());
  std::vector<MinimalModel> out;
  for (std::size_t i = 0; i < models.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < models.size() && !dominated; ++j)
      if (i != j && includes(models[i].fin, models[j].fin) &&
          includes(models[i].inf, models[j].inf) &&
          !(models[j].fin == models[i].fin && models[j].inf == models[i].inf))
        dominated = true;
    if (!dominated) out.push_back(models[i]);
  }
  return out;
}

}  // namespace

std::vector<MinimalModel> minimal_models(const AccFormula& phi) {
  switch (phi.op()) {
    case AccOp::True:
      return {MinimalModel{}};
    case AccOp::False:
      return {};
    case AccOp::Fin:
      return {MinimalModel{{phi.mark()}, {}}};
    case AccOp::Inf:
      return {MinimalModel{{}, {phi.mark()}}};
    case AccOp::Or: {
      std::vector<MinimalModel> all;
      for (const AccFormula& p : phi.parts()) {
        auto sub = minimal_models(p);
        all.insert(all.end(), sub.begin(), sub.end());
      }
      return minimize(std::move(all));
    }
    case AccOp::And: {
      std::vector<MinimalModel> acc{MinimalModel{}};
      for (const AccFormula& p : phi.parts()) {
        auto sub = minimal_models(p);
        std::vector<MinimalModel> next;
        for (const MinimalModel& a : acc)
          for (const MinimalModel& b : sub)
            next.push_back(MinimalModel{set_union(a.fin, b.fin),
                                        set_union(a.inf, b.inf)});
        acc = minimize(std::move(next));
      }
      return acc;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Slaa

bool Transition::operator<(const Transition& o) const {
  if (src != o.src) return src < o.src;
  if (letter != o.letter) return letter < o.letter;
  if (dst != o.dst) return dst < o.dst;
  return marks < o.marks;
}

std::vector<const Transition*> Slaa::transitions_from(StateId s) const {
  std::vector<const Transition*> out;
  for (const Transition& t : transitions)
    if (t.src == s) out.push_back(&t);
  return out;
}

std::optional<std::string> validate(const Slaa& a) {
  int n = static_cast<int>(a.state_formulas.size());
  int nm = static_cast<int>(a.marks.size());
  if (n == 0) return "automaton has no states";
  if (a.initial < 0 || a.initial >= n) return "initial state out of range";
  if (a.ap.size() > 31) return "too many atomic propositions";
  if (!std::is_sorted(a.transitions.begin(), a.transitions.end()))
    return "transition list not sorted";
  if (std::adjacent_find(a.transitions.begin(), a.transitions.end()) !=
      a.transitions.end())
    return "duplicate transition";
  Letter letter_bound = static_cast<Letter>(a.letter_count());
  for (const Transition& t : a.transitions) {
    if (t.src < 0 || t.src >= n) return "transition source out of range";
    if (t.letter >= letter_bound) return "transition letter out of range";
    if (!std::is_sorted(t.marks.begin(), t.marks.end()) ||
        std::adjacent_find(t.marks.begin(), t.marks.end()) != t.marks.end())
      return "transition mark set not sorted/unique";
    for (MarkId m : t.marks)
      if (m < 0 || m >= nm) return "undeclared mark on transition";
    if (!std::is_sorted(t.dst.begin(), t.dst.end()) ||
        std::adjacent_find(t.dst.begin(), t.dst.end()) != t.dst.end())
      return "destination configuration not sorted/unique";
    for (StateId d : t.dst)
      if (d < 0 || d >= n) return "destination state out of range";
  }
  for (MarkId m : acc_marks(a.acceptance))
    if (m < 0 || m >= nm) return "undeclared mark in acceptance formula";

  // Self-loop property: the cross-state successor relation must be acyclic.
  std::vector<std::vector<StateId>> succ(n);
  for (const Transition& t : a.transitions)
    for (StateId d : t.dst)
      if (d != t.src) succ[t.src].push_back(d);
  std::vector<int> color(n, 0);  // 0 unvisited, 1 on stack, 2 done
  std::vector<StateId> stack;
  for (StateId start = 0; start < n; ++start) {
    if (color[start]) continue;
    // Iterative DFS; pairs of (state, next-child index).
    std::vector<std::pair<StateId, std::size_t>> dfs{{start, 0}};
    color[start] = 1;
    while (!dfs.empty()) {
      auto& [s, idx] = dfs.back();
      if (idx == succ[s].size()) {
        color[s] = 2;
        dfs.pop_back();
        continue;
      }
      StateId d = succ[s][idx++];
      if (color[d] == 1)
        return "cycle through states " + a.state_formulas[s].to_string() +
               " and " + a.state_formulas[d].to_string();
      if (color[d] == 0) {
        color[d] = 1;
        dfs.emplace_back(d, 0);
      }
    }
  }
  return std::nullopt;
}

std::vector<StateId> reachable_states(const Slaa& a) {
  std::vector<char> seen(a.state_formulas.size(), 0);
  std::vector<StateId> work{a.initial};
  seen[a.initial] = 1;
  while (!work.empty()) {
    StateId s = work.back();
    work.pop_back();
    for (const Transition& t : a.transitions)
      if (t.src == s)
        for (StateId d : t.dst)
          if (!seen[d]) {
            seen[d] = 1;
            work.push_back(d);
          }
  }
  std::vector<StateId> out;
  for (StateId s = 0; s < static_cast<StateId>(seen.size()); ++s)
    if (seen[s]) out.push_back(s);
  return out;
}

SlaaStats stats(const Slaa& a) {
  SlaaStats st;
  st.states = static_cast<int>(a.state_formulas.size());
  st.marks = static_cast<int>(a.marks.size());
  auto reach = reachable_states(a);
  st.reachable_states = static_cast<int>(reach.size());
  auto is_reachable = [&](StateId s) {
    return std::binary_search(reach.begin(), reach.end(), s);
  };
  st.is_nonalternating = true;
  st.is_deterministic = true;
  std::set<std::pair<StateId, Letter>> seen_edges;
  for (const Transition& t : a.transitions) {
    if (!is_reachable(t.src)) continue;
    if (t.dst.size() > 1) st.is_nonalternating = false;
    if (!seen_edges.insert({t.src, t.letter}).second)
      st.is_deterministic = false;
  }
  st.is_deterministic = st.is_deterministic && st.is_nonalternating;
  return st;
}

}  // namespace slaa
