#include "slaa/translate.hpp"

#include <algorithm>
#include <deque>

namespace slaa {

namespace {

std::vector<Formula> formula_union(const std::vector<Formula>& a,
                                   const std::vector<Formula>& b) {
  std::vector<Formula> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out), FormulaLess{});
  return out;
}

std::vector<Formula> formula_difference(const std::vector<Formula>& a,
                                        const std::vector<Formula>& b) {
  std::vector<Formula> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out), FormulaLess{});
  return out;
}

bool formula_includes(const std::vector<Formula>& big,
                      const std::vector<Formula>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end(),
                       FormulaLess{});
}

MarkVec mark_union(const MarkVec& a, const MarkVec& b) {
  MarkVec out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

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

SuccessorSet dedup(SuccessorSet p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return p;
}

}  // namespace

bool SuccEntry::operator==(const SuccEntry& o) const {
  if (marks != o.marks) return false;
  if (config.size() != o.config.size()) return false;
  for (std::size_t i = 0; i < config.size(); ++i)
    if (config[i] != o.config[i]) return false;
  return true;
}

bool SuccEntry::operator<(const SuccEntry& o) const {
  for (std::size_t i = 0; i < config.size() && i < o.config.size(); ++i) {
    int d = config[i].compare(o.config[i]);
    if (d != 0) return d < 0;
  }
  if (config.size() != o.config.size())
    return config.size() < o.config.size();
  return marks < o.marks;
}

SuccessorSet product(const SuccessorSet& p, const SuccessorSet& q) {
  SuccessorSet out;
  out.reserve(p.size() * q.size());
  for (const SuccEntry& a : p)
    for (const SuccEntry& b : q)
      out.push_back(
          {mark_union(a.marks, b.marks), formula_union(a.config, b.config)});
  return dedup(std::move(out));
}

SuccessorSet marks_erase(const SuccessorSet& p) {
  SuccessorSet out;
  out.reserve(p.size());
  for (const SuccEntry& e : p) out.push_back({{}, e.config});
  return dedup(std::move(out));
}

bool g_rule_applies(const Formula& g) {
  if (g.op() != Op::Always) return false;
  for (const Formula& c : conjuncts(g.child()))
    if (!is_temporal(c) && !is_state_formula(c)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Translator

Translator::Translator(const Formula& root, TranslateOptions opt)
    : opt_(opt), root_(root), ap_(atomic_props(root)) {
  assign_marks(root);
  models_ = minimal_models(acceptance_);
  models_usable_ = models_.size() <= 4096;
}

void Translator::assign_marks(const Formula& root) {
  auto [f_subs, u_subs] = collect_f_and_u(root);
  switch (opt_.mode) {
    case Mode::Basic:
      mark_table_.push_back({MarkFamily::ULoop, root});
      acceptance_ = AccFormula::fin(0);
      break;

    case Mode::F: {
      mark_table_.push_back({MarkFamily::ULoop, root});
      if (opt_.reuse_marks) {
        for (const Formula& fpsi : f_subs)
          orange_count_ = std::max(
              orange_count_,
              static_cast<int>(dnf_decompose(fpsi.child()).size()));
        for (int i = 0; i < orange_count_; ++i)
          mark_table_.push_back({MarkFamily::FClause, root, i});
        for (const Formula& fpsi : f_subs) {
          auto clauses = dnf_decompose(fpsi.child());
          std::vector<MarkId> ids;
          for (int j = 0; j < static_cast<int>(clauses.size()); ++j)
            ids.push_back(1 + j);
          f_clause_[fpsi] = std::move(ids);
        }
        std::vector<AccFormula> orange;
        for (int i = 0; i < orange_count_; ++i)
          orange.push_back(AccFormula::fin(1 + i));
        acceptance_ =
            orange.empty()
                ? AccFormula::fin(0)
                : acc_simplify(AccFormula::conj(
                      {AccFormula::fin(0), AccFormula::disj(orange)}));
      } else {
        std::vector<AccFormula> conj{AccFormula::fin(0)};
        for (const Formula& fpsi : f_subs) {
          auto clauses = dnf_decompose(fpsi.child());
          std::vector<MarkId> ids;
          std::vector<AccFormula> disj;
          for (int j = 0; j < static_cast<int>(clauses.size()); ++j) {
            MarkId m = static_cast<MarkId>(mark_table_.size());
            mark_table_.push_back({MarkFamily::FClause, fpsi, j});
            ids.push_back(m);
            disj.push_back(AccFormula::fin(m));
          }
          f_clause_[fpsi] = std::move(ids);
          conj.push_back(AccFormula::disj(std::move(disj)));
        }
        acceptance_ = acc_simplify(AccFormula::conj(std::move(conj)));
      }
      break;
    }

    case Mode::FG: {
      std::vector<AccFormula> conj;
      for (const Formula& sub : subformulae(root)) {
        if (sub.op() == Op::Until) {
          MarkId loop = static_cast<MarkId>(mark_table_.size());
          mark_table_.push_back({MarkFamily::ULoop, sub});
          MarkId esc = static_cast<MarkId>(mark_table_.size());
          mark_table_.push_back({MarkFamily::GEscape, sub});
          u_loop_[sub] = loop;
          escape_[sub] = esc;
          conj.push_back(AccFormula::disj(
              {AccFormula::fin(loop), AccFormula::inf(esc)}));
        } else if (sub.op() == Op::Eventually) {
          MarkId loop = static_cast<MarkId>(mark_table_.size());
          mark_table_.push_back({MarkFamily::FLoop, sub});
          MarkId esc = static_cast<MarkId>(mark_table_.size());
          mark_table_.push_back({MarkFamily::GEscape, sub});
          f_loop_[sub] = loop;
          escape_[sub] = esc;
          auto clauses = dnf_decompose(sub.child());
          std::vector<MarkId> ids;
          std::vector<AccFormula> disj;
          for (int j = 0; j < static_cast<int>(clauses.size()); ++j) {
            MarkId m = static_cast<MarkId>(mark_table_.size());
            mark_table_.push_back({MarkFamily::FClause, sub, j});
            ids.push_back(m);
            disj.push_back(AccFormula::fin(m));
          }
          f_clause_[sub] = std::move(ids);
          conj.push_back(AccFormula::disj(
              {AccFormula::conj({AccFormula::fin(loop),
                                 AccFormula::disj(std::move(disj))}),
               AccFormula::inf(esc)}));
        }
      }
      acceptance_ = conj.empty() ? AccFormula::t()
                                 : acc_simplify(AccFormula::conj(std::move(conj)));
      break;
    }
  }
}

SuccessorSet Translator::delta(const Formula& state, Letter alpha) {
  auto [it, inserted] = memo_.try_emplace(state);
  if (inserted) it->second.resize(std::size_t{1} << ap_.size());
  std::optional<SuccessorSet>& slot = it->second[alpha];
  if (!slot) slot = delta_uncached(state, alpha);
  return *slot;
}

SuccessorSet Translator::delta_uncached(const Formula& f, Letter alpha) {
  auto ap_holds = [&](const std::string& name) {
    auto it = std::lower_bound(ap_.begin(), ap_.end(), name);
    return (alpha >> (it - ap_.begin())) & 1u;
  };
  switch (f.op()) {
    case Op::True:
      return {SuccEntry{{}, {}}};
    case Op::False:
      return {};
    case Op::Ap:
      return ap_holds(f.ap_name()) ? SuccessorSet{SuccEntry{{}, {}}}
                                   : SuccessorSet{};
    case Op::NotAp:
      return !ap_holds(f.ap_name()) ? SuccessorSet{SuccEntry{{}, {}}}
                                    : SuccessorSet{};
    case Op::And:
      return marks_erase(product(delta(f.left(), alpha),
                                 delta(f.right(), alpha)));
    case Op::Or: {
      SuccessorSet out = delta(f.left(), alpha);
      SuccessorSet r = delta(f.right(), alpha);
      out.insert(out.end(), r.begin(), r.end());
      return marks_erase(out);
    }
    case Op::Next:
      return {SuccEntry{{}, {f.child()}}};
    case Op::Until: {
      MarkId loop = opt_.mode == Mode::FG ? u_loop_.at(f) : 0;
      SuccessorSet out = marks_erase(delta(f.right(), alpha));
      SuccessorSet self{SuccEntry{{loop}, {f}}};
      SuccessorSet cont =
          product(self, marks_erase(delta(f.left(), alpha)));
      out.insert(out.end(), cont.begin(), cont.end());
      return dedup(std::move(out));
    }
    case Op::Release: {
      SuccessorSet both = marks_erase(
          product(delta(f.left(), alpha), delta(f.right(), alpha)));
      SuccessorSet self{SuccEntry{{}, {f}}};
      SuccessorSet cont =
          marks_erase(product(self, delta(f.right(), alpha)));
      both.insert(both.end(), cont.begin(), cont.end());
      return dedup(std::move(both));
    }
    case Op::Eventually:
      if (opt_.mode == Mode::Basic) {
        // F psi viewed as tt U psi.
        SuccessorSet out = marks_erase(delta(f.child(), alpha));
        out.push_back(SuccEntry{{0}, {f}});
        return dedup(std::move(out));
      }
      return delta_merged_f(f, alpha);
    case Op::Always:
      if (opt_.mode == Mode::FG && g_rule_applies(f))
        return delta_merged_g(f, alpha);
      // G psi viewed as ff R psi: every successor of psi extended with a
      // loop back to G psi.
      return marks_erase(
          product(SuccessorSet{SuccEntry{{}, {f}}}, delta(f.child(), alpha)));
  }
  return {};
}

SuccessorSet Translator::delta_merged_f(const Formula& f, Letter alpha) {
  MarkId loop = opt_.mode == Mode::F ? 0 : f_loop_.at(f);
  SuccessorSet out{SuccEntry{{loop}, {f}}};
  auto clauses = dnf_decompose(f.child());
  const std::vector<MarkId>& clause_marks = f_clause_.at(f);
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    const Clause& k = clauses[j];
    // The clause successor set is the product over the members *without*
    // erasing marks: a member's loop marks must survive onto entries that
    // become loops of the merged state, or an unfulfilled F/U obligation
    // folded into the merged state would lose its Fin discipline.
    SuccessorSet d{SuccEntry{{}, {}}};
    for (const Formula& member : k) d = product(d, delta(member, alpha));
    SuccessorSet looping, escaping;
    for (const SuccEntry& e : d) {
      if (formula_includes(e.config, k))
        looping.push_back({e.marks, formula_difference(e.config, k)});
      else
        escaping.push_back(e);
    }
    for (const SuccEntry& e : marks_erase(escaping)) out.push_back(e);
    MarkVec mk;
    for (std::size_t j2 = 0; j2 < clause_marks.size(); ++j2)
      if (j2 != j) mk.push_back(clause_marks[j2]);
    if (opt_.mode == Mode::F && opt_.reuse_marks) {
      // Shared pool: every orange mark except this clause's own.
      mk.clear();
      for (int i = 0; i < orange_count_; ++i)
        if (1 + i != clause_marks[j]) mk.push_back(1 + i);
    }
    std::sort(mk.begin(), mk.end());
    SuccessorSet back{SuccEntry{mk, {f}}};
    for (const SuccEntry& e : product(back, looping)) out.push_back(e);
  }
  return dedup(std::move(out));
}

SuccessorSet Translator::delta_merged_g(const Formula& f, Letter alpha) {
  SuccessorSet out{SuccEntry{{}, {f}}};
  for (const Formula& c : conjuncts(f.child()))
    out = product(out, delta_prime(c, alpha));
  return out;
}

SuccessorSet Translator::delta_prime(const Formula& conjunct, Letter alpha) {
  SuccessorSet d = delta(conjunct, alpha);
  SuccessorSet out;
  if (conjunct.op() == Op::Until || conjunct.op() == Op::Eventually) {
    MarkId esc = escape_.at(conjunct);
    for (const SuccEntry& e : d) {
      bool loops = std::binary_search(e.config.begin(), e.config.end(),
                                      conjunct, FormulaLess{});
      if (loops)
        out.push_back(
            {e.marks, formula_difference(e.config, {conjunct})});
      else
        out.push_back({{esc}, e.config});
    }
  } else {
    for (const SuccEntry& e : d)
      out.push_back({e.marks, formula_difference(e.config, {conjunct})});
  }
  return dedup(std::move(out));
}

SuccessorSet Translator::prune_entries(SuccessorSet entries) const {
  if (!models_usable_ || entries.size() < 2) return entries;
  std::sort(entries.begin(), entries.end());
  auto dominates = [&](const SuccEntry& a, const SuccEntry& b) {
    if (!formula_includes(b.config, a.config)) return false;
    for (const MinimalModel& o : models_) {
      if (disjoint(o.fin, b.marks) && !disjoint(o.fin, a.marks)) return false;
      if (disjoint(o.inf, a.marks) && !disjoint(o.inf, b.marks)) return false;
    }
    return true;
  };
  SuccessorSet kept;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < entries.size() && !drop; ++j) {
      if (i == j) continue;
      if (!dominates(entries[j], entries[i])) continue;
      // Mutual domination: the canonically smaller (earlier) one survives.
      if (dominates(entries[i], entries[j]) && i < j) continue;
      drop = true;
    }
    if (!drop) kept.push_back(entries[i]);
  }
  return kept;
}

Slaa Translator::build() {
  Slaa a;
  a.ap = ap_;
  a.marks = mark_table_;
  a.acceptance = acceptance_;
  a.initial = 0;

  std::map<Formula, StateId, FormulaLess> ids;
  std::deque<Formula> work;
  auto state_id = [&](const Formula& f) {
    auto [it, inserted] = ids.try_emplace(f, static_cast<StateId>(ids.size()));
    if (inserted) {
      a.state_formulas.push_back(f);
      work.push_back(f);
    }
    return it->second;
  };
  state_id(root_);

  Letter letters = static_cast<Letter>(std::size_t{1} << ap_.size());
  while (!work.empty()) {
    Formula s = work.front();
    work.pop_front();
    StateId sid = ids.at(s);
    for (Letter alpha = 0; alpha < letters; ++alpha) {
      SuccessorSet entries = delta(s, alpha);
      if (opt_.prune_while_building) entries = prune_entries(std::move(entries));
      for (const SuccEntry& e : entries) {
        Config dst;
        for (const Formula& g : e.config) dst.push_back(state_id(g));
        std::sort(dst.begin(), dst.end());
        a.transitions.push_back({sid, alpha, e.marks, std::move(dst)});
      }
    }
  }
  std::sort(a.transitions.begin(), a.transitions.end());
  a.transitions.erase(std::unique(a.transitions.begin(), a.transitions.end()),
                      a.transitions.end());
  return a;
}

Slaa translate(const Formula& root, const TranslateOptions& opt) {
  return Translator(root, opt).build();
}

Slaa translate_basic(const Formula& root) {
  return translate(root, {.mode = Mode::Basic});
}

Slaa translate_f(const Formula& root, bool reuse_marks) {
  return translate(root, {.mode = Mode::F, .reuse_marks = reuse_marks});
}

Slaa translate_fg(const Formula& root) {
  return translate(root, {.mode = Mode::FG});
}

}  // namespace slaa
