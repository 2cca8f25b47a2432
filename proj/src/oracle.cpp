#include "slaa/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace slaa {

namespace {

// States ordered children-first along the cross-state successor relation,
// so accept values of every destination are available when a state is
// processed.
std::vector<StateId> topo_order(const Slaa& a) {
  int n = static_cast<int>(a.state_formulas.size());
  std::vector<std::set<StateId>> succ(n);
  for (const Transition& t : a.transitions)
    for (StateId d : t.dst)
      if (d != t.src) succ[t.src].insert(d);
  std::vector<StateId> order;
  std::vector<int> color(n, 0);
  // Iterative post-order DFS.
  for (StateId start = 0; start < n; ++start) {
    if (color[start]) continue;
    std::vector<std::pair<StateId, std::set<StateId>::const_iterator>> dfs;
    dfs.emplace_back(start, succ[start].begin());
    color[start] = 1;
    while (!dfs.empty()) {
      auto& [s, it] = dfs.back();
      if (it == succ[s].end()) {
        color[s] = 2;
        order.push_back(s);
        dfs.pop_back();
        continue;
      }
      StateId d = *it++;
      if (color[d] == 0) {
        color[d] = 1;
        dfs.emplace_back(d, succ[d].begin());
      }
    }
  }
  return order;
}

}  // namespace

bool membership(const Slaa& a, const LassoWord& w) {
  std::size_t n = w.prefix.size();
  std::size_t total = n + w.period.size();
  auto succ_pos = [&](std::size_t i) { return i + 1 < total ? i + 1 : n; };

  // Project each word position onto the automaton's proposition list.
  std::vector<Letter> letters(total, 0);
  for (std::size_t b = 0; b < a.ap.size(); ++b) {
    auto it = std::lower_bound(w.ap.begin(), w.ap.end(), a.ap[b]);
    if (it == w.ap.end() || *it != a.ap[b])
      throw std::invalid_argument("proposition '" + a.ap[b] +
                                  "' not in word universe");
    Letter bit = Letter{1} << (it - w.ap.begin());
    for (std::size_t i = 0; i < total; ++i) {
      Letter src = i < n ? w.prefix[i] : w.period[i - n];
      if (src & bit) letters[i] |= Letter{1} << b;
    }
  }

  auto models = minimal_models(a.acceptance);
  std::vector<std::vector<char>> accept(a.state_formulas.size(),
                                        std::vector<char>(total, 0));

  for (StateId s : topo_order(a)) {
    auto trans = a.transitions_from(s);
    auto is_loop = [&](const Transition* t) {
      return std::binary_search(t->dst.begin(), t->dst.end(), s);
    };
    // A transition is usable at position i when its letter matches and
    // every destination other than s itself accepts at the next position.
    auto usable = [&](const Transition* t, std::size_t i) {
      if (t->letter != letters[i]) return false;
      std::size_t nxt = succ_pos(i);
      for (StateId d : t->dst)
        if (d != s && !accept[d][nxt]) return false;
      return true;
    };

    std::vector<char> has_loop(total, 0), has_exit(total, 0);
    for (std::size_t i = 0; i < total; ++i)
      for (const Transition* t : trans) {
        if (!usable(t, i)) continue;
        (is_loop(t) ? has_loop : has_exit)[i] = 1;
      }

    // Case (b): loop in s forever.  All positions from i on must offer a
    // usable loop edge; on the periodic part, some minimal model O must be
    // realizable: every periodic position keeps a loop edge free of
    // Fin(O) marks, and the marks of those surviving edges jointly cover
    // Inf(O) (the branch can rotate between them).
    bool periodic_ok = false;
    for (const MinimalModel& o : models) {
      bool all_positions = true;
      MarkVec covered;
      for (std::size_t i = n; i < total && all_positions; ++i) {
        bool any = false;
        for (const Transition* t : trans) {
          if (!is_loop(t) || !usable(t, i)) continue;
          bool hits_fin = false;
          for (MarkId m : t->marks)
            if (std::binary_search(o.fin.begin(), o.fin.end(), m)) {
              hits_fin = true;
              break;
            }
          if (hits_fin) continue;
          any = true;
          covered.insert(covered.end(), t->marks.begin(), t->marks.end());
        }
        all_positions = any;
      }
      if (!all_positions) continue;
      std::sort(covered.begin(), covered.end());
      if (std::includes(covered.begin(), covered.end(), o.inf.begin(),
                        o.inf.end())) {
        periodic_ok = true;
        break;
      }
    }

    for (std::size_t i = 0; i < total; ++i) {
      // Case (a): ride loop edges for a while, then exit.
      bool ok = false;
      std::size_t j = i;
      for (std::size_t step = 0; step <= total; ++step) {
        if (has_exit[j]) {
          ok = true;
          break;
        }
        if (!has_loop[j]) break;
        j = succ_pos(j);
      }
      if (!ok && periodic_ok) {
        // Case (b) additionally needs loop edges on the finite ramp from
        // i into the period (mark-free choice is irrelevant there).
        ok = true;
        for (std::size_t k = i; k < n; ++k)
          if (!has_loop[k]) {
            ok = false;
            break;
          }
      }
      accept[s][i] = ok;
    }
  }
  return accept[a.initial][0];
}

CrossCheckReport cross_check(const Formula& f, const Slaa& a,
                             const std::vector<LassoWord>& words) {
  CrossCheckReport report;
  for (std::size_t i = 0; i < words.size(); ++i)
    if (eval_lasso(f, words[i]) != membership(a, words[i]))
      report.disagreements.push_back(i);
  return report;
}

}  // namespace slaa
