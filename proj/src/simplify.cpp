#include "slaa/simplify.hpp"

#include <algorithm>
#include <set>

namespace slaa {

namespace {

bool disjoint(const MarkVec& a, const MarkVec& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return false;
  }
  return true;
}

}  // namespace

bool dominates(const Transition& t1, const Transition& t2,
               const std::vector<MinimalModel>& models) {
  if (!std::includes(t2.dst.begin(), t2.dst.end(), t1.dst.begin(),
                     t1.dst.end()))
    return false;
  for (const MinimalModel& o : models) {
    if (disjoint(o.fin, t2.marks) && !disjoint(o.fin, t1.marks)) return false;
    if (disjoint(o.inf, t1.marks) && !disjoint(o.inf, t2.marks)) return false;
  }
  return true;
}

Slaa prune_dominated(const Slaa& a) {
  auto models = minimal_models(a.acceptance);
  Slaa out = a;
  out.transitions.clear();
  // Transitions are sorted, so same-(source,letter) groups are contiguous
  // and within a group the canonically smaller transition comes first.
  std::size_t n = a.transitions.size();
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo;
    while (hi < n && a.transitions[hi].src == a.transitions[lo].src &&
           a.transitions[hi].letter == a.transitions[lo].letter)
      ++hi;
    for (std::size_t i = lo; i < hi; ++i) {
      bool drop = false;
      for (std::size_t j = lo; j < hi && !drop; ++j) {
        if (i == j) continue;
        if (!dominates(a.transitions[j], a.transitions[i], models)) continue;
        if (dominates(a.transitions[i], a.transitions[j], models) && i < j)
          continue;
        drop = true;
      }
      if (!drop) out.transitions.push_back(a.transitions[i]);
    }
    lo = hi;
  }
  return out;
}

Slaa remove_unreachable(const Slaa& a) {
  auto reach = reachable_states(a);
  if (reach.size() == a.state_formulas.size()) return a;
  std::vector<StateId> renum(a.state_formulas.size(), -1);
  Slaa out;
  out.ap = a.ap;
  out.marks = a.marks;
  out.acceptance = a.acceptance;
  for (StateId s : reach) {
    renum[s] = static_cast<StateId>(out.state_formulas.size());
    out.state_formulas.push_back(a.state_formulas[s]);
  }
  out.initial = renum[a.initial];
  for (const Transition& t : a.transitions) {
    if (renum[t.src] < 0) continue;
    Config dst;
    for (StateId d : t.dst) dst.push_back(renum[d]);
    std::sort(dst.begin(), dst.end());
    out.transitions.push_back({renum[t.src], t.letter, t.marks, std::move(dst)});
  }
  std::sort(out.transitions.begin(), out.transitions.end());
  return out;
}

Slaa prune_unused_marks(const Slaa& a) {
  std::set<MarkId> on_loops;
  for (const Transition& t : a.transitions)
    if (std::binary_search(t.dst.begin(), t.dst.end(), t.src))
      on_loops.insert(t.marks.begin(), t.marks.end());
  if (on_loops.size() == a.marks.size()) return a;

  std::vector<MarkId> renum(a.marks.size(), -1);
  Slaa out;
  out.ap = a.ap;
  out.state_formulas = a.state_formulas;
  out.initial = a.initial;
  AccFormula phi = a.acceptance;
  for (MarkId m = 0; m < static_cast<MarkId>(a.marks.size()); ++m) {
    if (on_loops.count(m)) {
      renum[m] = static_cast<MarkId>(out.marks.size());
      out.marks.push_back(a.marks[m]);
    } else {
      phi = acc_drop_mark(phi, m);
    }
  }
  out.acceptance = acc_remap(phi, renum);
  for (const Transition& t : a.transitions) {
    MarkVec marks;
    for (MarkId m : t.marks)
      if (renum[m] >= 0) marks.push_back(renum[m]);
    std::sort(marks.begin(), marks.end());
    out.transitions.push_back({t.src, t.letter, std::move(marks), t.dst});
  }
  std::sort(out.transitions.begin(), out.transitions.end());
  out.transitions.erase(
      std::unique(out.transitions.begin(), out.transitions.end()),
      out.transitions.end());
  return out;
}

Slaa simplify(const Slaa& a) {
  // Dominance runs exactly once, against the original acceptance formula:
  // re-running it after marks were pruned can judge transitions against a
  // weaker formula and erase loops the mark layout still depends on.
  Slaa cur = prune_dominated(a);
  for (;;) {
    std::size_t states = cur.state_formulas.size();
    std::size_t marks = cur.marks.size();
    cur = prune_unused_marks(remove_unreachable(cur));
    if (cur.state_formulas.size() == states && cur.marks.size() == marks)
      return cur;
  }
}

}  // namespace slaa
