#include "slaa/hoa.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace slaa {

std::vector<LabelImplicant> condense_letters(std::vector<Letter> letters,
                                             std::size_t ap_count) {
  Letter full = ap_count ? static_cast<Letter>((std::uint64_t{1} << ap_count) - 1)
                         : 0;
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  std::vector<LabelImplicant> cur;
  for (Letter l : letters) cur.push_back({l, full});

  // Merge pairs equal everywhere but one constrained bit; repeat until no
  // pair merges.  Merging only ever combines implicants that are both
  // present, so the union of the result stays exactly the input set.
  for (;;) {
    std::vector<char> used(cur.size(), 0);
    std::vector<LabelImplicant> next;
    bool merged = false;
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        if (cur[i].mask != cur[j].mask) continue;
        Letter diff = cur[i].bits ^ cur[j].bits;
        if (diff == 0 || (diff & (diff - 1))) continue;
        LabelImplicant m{static_cast<Letter>(cur[i].bits & ~diff),
                         static_cast<Letter>(cur[i].mask & ~diff)};
        if (std::find(next.begin(), next.end(), m) == next.end())
          next.push_back(m);
        used[i] = used[j] = 1;
        merged = true;
      }
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (!used[i]) next.push_back(cur[i]);
    cur = std::move(next);
    if (!merged) break;
  }
  std::sort(cur.begin(), cur.end(), [](const LabelImplicant& a,
                                       const LabelImplicant& b) {
    if (a.mask != b.mask) return a.mask > b.mask;
    return a.bits < b.bits;
  });
  return cur;
}

namespace {

std::string render_label(const std::vector<LabelImplicant>& implicants,
                         std::size_t ap_count) {
  if (implicants.size() == 1 && implicants[0].mask == 0) return "t";
  std::ostringstream out;
  const char* or_sep = "";
  for (const LabelImplicant& imp : implicants) {
    out << or_sep;
    or_sep = " | ";
    if (imp.mask == 0) {
      out << 't';
      continue;
    }
    const char* and_sep = "";
    for (std::size_t b = 0; b < ap_count; ++b) {
      if (!((imp.mask >> b) & 1)) continue;
      out << and_sep;
      and_sep = "&";
      if (!((imp.bits >> b) & 1)) out << '!';
      out << b;
    }
  }
  return out.str();
}

bool has_universal_branching(const Slaa& a) {
  for (const Transition& t : a.transitions)
    if (t.dst.size() > 1) return true;
  return false;
}

bool has_empty_destination(const Slaa& a) {
  for (const Transition& t : a.transitions)
    if (t.dst.empty()) return true;
  return false;
}

}  // namespace

std::string emit_hoa(const Slaa& a) {
  bool need_sink = has_empty_destination(a);
  // An unmarked loop accepts iff the acceptance formula holds with no
  // recurring marks; otherwise the sink needs its own Inf mark.
  bool sink_needs_mark = need_sink && !eval_acc(a.acceptance, {});
  StateId sink = static_cast<StateId>(a.state_formulas.size());
  MarkId sink_mark = static_cast<MarkId>(a.marks.size());

  AccFormula phi = a.acceptance;
  if (sink_needs_mark)
    phi = acc_simplify(AccFormula::disj({phi, AccFormula::inf(sink_mark)}));

  int nstates = static_cast<int>(a.state_formulas.size()) + (need_sink ? 1 : 0);
  int nmarks = static_cast<int>(a.marks.size()) + (sink_needs_mark ? 1 : 0);

  std::ostringstream out;
  out << "HOA: v1\n";
  out << "States: " << nstates << "\n";
  out << "Start: " << a.initial << "\n";
  out << "AP: " << a.ap.size();
  for (const std::string& name : a.ap) out << " \"" << name << "\"";
  out << "\n";
  out << "Acceptance: " << nmarks << " " << phi.to_string() << "\n";
  out << "properties: trans-labels explicit-labels trans-acc";
  if (has_universal_branching(a)) out << " univ-branch";
  out << "\n";
  out << "--BODY--\n";

  for (StateId s = 0; s < static_cast<StateId>(a.state_formulas.size()); ++s) {
    out << "State: " << s << " \"" << a.state_formulas[s].to_string() << "\"\n";
    // Letters grouped by (destination, marks); groups in canonical order.
    std::map<std::pair<Config, MarkVec>, std::vector<Letter>> groups;
    for (const Transition& t : a.transitions)
      if (t.src == s) groups[{t.dst, t.marks}].push_back(t.letter);
    for (auto& [key, letters] : groups) {
      const auto& [dst, marks] = key;
      out << "[" << render_label(condense_letters(letters, a.ap.size()),
                                 a.ap.size())
          << "] ";
      if (dst.empty()) {
        out << sink;
      } else {
        const char* sep = "";
        for (StateId d : dst) {
          out << sep << d;
          sep = "&";
        }
      }
      if (!marks.empty()) {
        out << " {";
        const char* sep = "";
        for (MarkId m : marks) {
          out << sep << m;
          sep = " ";
        }
        out << "}";
      }
      out << "\n";
    }
  }
  if (need_sink) {
    out << "State: " << sink << " \"accept-all\"\n";
    out << "[t] " << sink;
    if (sink_needs_mark) out << " {" << sink_mark << "}";
    out << "\n";
  }
  out << "--END--\n";
  return out.str();
}

std::string emit_dot(const Slaa& a) {
  std::ostringstream out;
  out << "digraph slaa {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  out << "  init [shape=point];\n";
  out << "  init -> s" << a.initial << ";\n";
  for (StateId s = 0; s < static_cast<StateId>(a.state_formulas.size()); ++s)
    out << "  s" << s << " [label=\"" << a.state_formulas[s].to_string()
        << "\"];\n";

  bool accept_node = false;
  int fork = 0;
  for (const Transition& t : a.transitions) {
    std::ostringstream label;
    label << render_label(condense_letters({t.letter}, a.ap.size()),
                          a.ap.size());
    if (!t.marks.empty()) {
      label << " {";
      const char* sep = "";
      for (MarkId m : t.marks) {
        label << sep << m;
        sep = ",";
      }
      label << "}";
    }
    if (t.dst.empty()) {
      accept_node = true;
      out << "  s" << t.src << " -> accept [label=\"" << label.str()
          << "\"];\n";
    } else if (t.dst.size() == 1) {
      out << "  s" << t.src << " -> s" << t.dst[0] << " [label=\""
          << label.str() << "\"];\n";
    } else {
      out << "  fork" << fork << " [shape=point];\n";
      out << "  s" << t.src << " -> fork" << fork << " [label=\""
          << label.str() << "\" arrowhead=none];\n";
      for (StateId d : t.dst)
        out << "  fork" << fork << " -> s" << d << ";\n";
      ++fork;
    }
  }
  if (accept_node) out << "  accept [shape=doublecircle label=\"\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace slaa
