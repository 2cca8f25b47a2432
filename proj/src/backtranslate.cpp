#include "slaa/backtranslate.hpp"

#include <algorithm>
#include <set>

namespace slaa {

Formula letter_formula(Letter letter,
                       const std::vector<std::string>& ap_universe) {
  Formula out = Formula::tt();
  bool first = true;
  for (std::size_t b = 0; b < ap_universe.size(); ++b) {
    bool holds = (letter >> b) & 1u;
    Formula lit = holds ? Formula::ap(ap_universe[b])
                        : Formula::nap(ap_universe[b]);
    out = first ? lit : Formula::conj(out, lit);
    first = false;
  }
  return out;
}

namespace {

Formula fold_or(const std::vector<Formula>& parts) {
  Formula out = Formula::ff();
  for (const Formula& p : parts) {
    if (p.op() == Op::True) return Formula::tt();
    if (p.op() == Op::False) continue;
    out = out.op() == Op::False ? p : Formula::disj(out, p);
  }
  return out;
}

Formula fold_and(const std::vector<Formula>& parts) {
  Formula out = Formula::tt();
  for (const Formula& p : parts) {
    if (p.op() == Op::False) return Formula::ff();
    if (p.op() == Op::True) continue;
    out = out.op() == Op::True ? p : Formula::conj(out, p);
  }
  return out;
}

Formula fold_next(const Formula& f) {
  if (f.op() == Op::True || f.op() == Op::False) return f;
  return Formula::next(f);
}

Formula fold_until(const Formula& l, const Formula& r) {
  if (r.op() == Op::True || r.op() == Op::False) return r;
  if (l.op() == Op::False) return r;
  if (l.op() == Op::True) return Formula::eventually(r);
  return Formula::until(l, r);
}

Formula fold_always(const Formula& f) {
  if (f.op() == Op::True || f.op() == Op::False) return f;
  return Formula::always(f);
}

Formula fold_eventually(const Formula& f) {
  if (f.op() == Op::True || f.op() == Op::False) return f;
  return Formula::eventually(f);
}

std::vector<StateId> topo_order(const Slaa& a) {
  int n = static_cast<int>(a.state_formulas.size());
  std::vector<std::set<StateId>> succ(n);
  for (const Transition& t : a.transitions)
    for (StateId d : t.dst)
      if (d != t.src) succ[t.src].insert(d);
  std::vector<StateId> order;
  std::vector<int> color(n, 0);
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

Formula slaa_to_ltl(const Slaa& a) {
  auto models = minimal_models(a.acceptance);
  std::vector<Formula> phi(a.state_formulas.size(), Formula::ff());

  // Letter minterms are shared between all states.
  std::vector<Formula> alpha_formula;
  for (Letter l = 0; l < a.letter_count(); ++l)
    alpha_formula.push_back(letter_formula(l, a.ap));

  for (StateId s : topo_order(a)) {
    auto phi_of_config = [&](const Config& c, bool drop_self) {
      std::vector<Formula> parts;
      for (StateId d : c)
        if (!(drop_self && d == s)) parts.push_back(phi[d]);
      return fold_and(parts);
    };

    // One "step" formula per transition: the letter minterm followed by
    // the destination configuration one position later.
    struct Step {
      const Transition* t;
      Formula step;
    };
    std::vector<Step> loops, nonloops;
    for (const Transition* t : a.transitions_from(s)) {
      bool is_loop = std::binary_search(t->dst.begin(), t->dst.end(), s);
      Formula step = fold_and(
          {alpha_formula[t->letter],
           fold_next(phi_of_config(t->dst, /*drop_self=*/is_loop))});
      (is_loop ? loops : nonloops).push_back({t, step});
    }

    std::vector<Formula> loop_steps, nonloop_steps;
    for (const Step& st : loops) loop_steps.push_back(st.step);
    for (const Step& st : nonloops) nonloop_steps.push_back(st.step);

    Formula phi1 = fold_until(fold_or(loop_steps), fold_or(nonloop_steps));
    Formula phi2 = fold_always(fold_or(loop_steps));

    // A branch looping in s forever satisfies a model O iff eventually the
    // chosen loops carry no Fin(O)-mark at all, while each Inf(O)-mark keeps
    // occurring on such Fin(O)-free loops.  The Fin-marks of a model must be
    // avoided jointly: with two same-letter loops each carrying a different
    // Fin-mark, per-mark avoidance would hold on the word even though every
    // concrete branch keeps hitting one of the marks.
    std::vector<Formula> model_parts;
    for (const MinimalModel& o : models) {
      auto fin_free = [&](const Step& st) {
        for (MarkId m : o.fin)
          if (std::binary_search(st.t->marks.begin(), st.t->marks.end(), m))
            return false;
        return true;
      };
      std::vector<Formula> free_steps;
      for (const Step& st : loops)
        if (fin_free(st)) free_steps.push_back(st.step);

      std::vector<Formula> conj;
      if (!o.fin.empty())
        conj.push_back(fold_eventually(fold_always(fold_or(free_steps))));
      for (MarkId m : o.inf) {
        std::vector<Formula> with_m;
        for (const Step& st : loops)
          if (fin_free(st) &&
              std::binary_search(st.t->marks.begin(), st.t->marks.end(), m))
            with_m.push_back(st.step);
        conj.push_back(fold_always(fold_eventually(fold_or(with_m))));
      }
      model_parts.push_back(fold_and(conj));
    }
    Formula phi3 = fold_or(model_parts);

    phi[s] = fold_or({phi1, fold_and({phi2, phi3})});
  }
  return phi[a.initial];
}

}  // namespace slaa
