#include "slaa/lasso.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace slaa {

std::string LassoWord::to_string() const {
  auto render = [this](const std::vector<Letter>& part, std::ostringstream& out) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (i) out << ',';
      out << '{';
      bool first = true;
      for (std::size_t b = 0; b < ap.size(); ++b)
        if (part[i] & (Letter{1} << b)) {
          if (!first) out << ',';
          out << ap[b];
          first = false;
        }
      out << '}';
    }
  };
  std::ostringstream out;
  render(prefix, out);
  out << ';';
  render(period, out);
  return out.str();
}

namespace {

struct RawLetter {
  std::vector<std::string> names;
};

std::vector<RawLetter> parse_letter_list(std::string_view text,
                                         std::size_t offset) {
  std::vector<RawLetter> letters;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '{')
      throw ParseError("expected '{'", offset + i);
    ++i;
    RawLetter letter;
    skip_ws();
    while (i < text.size() && text[i] != '}') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_'))
        ++i;
      if (i == start) throw ParseError("expected proposition name", offset + i);
      letter.names.emplace_back(text.substr(start, i - start));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw ParseError("expected '}'", offset + i);
    ++i;  // '}'
    letters.push_back(std::move(letter));
    skip_ws();
    if (i < text.size()) {
      if (text[i] != ',') throw ParseError("expected ','", offset + i);
      ++i;
      skip_ws();
    }
  }
  return letters;
}

}  // namespace

LassoWord parse_lasso(std::string_view text,
                      const std::vector<std::string>& extra_universe) {
  std::size_t semi = text.find(';');
  if (semi == std::string_view::npos)
    throw ParseError("expected ';' separating prefix and period", text.size());
  auto raw_prefix = parse_letter_list(text.substr(0, semi), 0);
  auto raw_period = parse_letter_list(text.substr(semi + 1), semi + 1);
  if (raw_period.empty())
    throw ParseError("period must be nonempty", text.size());

  std::set<std::string> universe(extra_universe.begin(), extra_universe.end());
  for (const auto* part : {&raw_prefix, &raw_period})
    for (const RawLetter& l : *part) universe.insert(l.names.begin(), l.names.end());

  LassoWord w;
  w.ap.assign(universe.begin(), universe.end());
  auto encode = [&w](const std::vector<RawLetter>& part) {
    std::vector<Letter> out;
    for (const RawLetter& l : part) {
      Letter bits = 0;
      for (const std::string& name : l.names) {
        auto it = std::lower_bound(w.ap.begin(), w.ap.end(), name);
        bits |= Letter{1} << (it - w.ap.begin());
      }
      out.push_back(bits);
    }
    return out;
  };
  w.prefix = encode(raw_prefix);
  w.period = encode(raw_period);
  return w;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

class Evaluator {
public:
  explicit Evaluator(const LassoWord& w) : w_(w) {
    n_ = w.prefix.size();
    p_ = w.period.size();
    total_ = n_ + p_;
    letters_.reserve(total_);
    letters_.insert(letters_.end(), w.prefix.begin(), w.prefix.end());
    letters_.insert(letters_.end(), w.period.begin(), w.period.end());
  }

  std::size_t succ(std::size_t i) const { return i + 1 < total_ ? i + 1 : n_; }

  const std::vector<char>& eval(const Formula& f) {
    auto it = memo_.find(f.id());
    if (it != memo_.end()) return it->second;
    std::vector<char> val(total_, 0);
    switch (f.op()) {
      case Op::True:
        std::fill(val.begin(), val.end(), 1);
        break;
      case Op::False:
        break;
      case Op::Ap:
      case Op::NotAp: {
        auto ap_it = std::lower_bound(w_.ap.begin(), w_.ap.end(), f.ap_name());
        if (ap_it == w_.ap.end() || *ap_it != f.ap_name())
          throw std::invalid_argument("proposition '" + f.ap_name() +
                                      "' not in word universe");
        Letter bit = Letter{1} << (ap_it - w_.ap.begin());
        for (std::size_t i = 0; i < total_; ++i) {
          bool holds = (letters_[i] & bit) != 0;
          val[i] = (f.op() == Op::Ap) == holds;
        }
        break;
      }
      case Op::And: {
        const auto& l = eval(f.left());
        const auto& r = eval(f.right());
        for (std::size_t i = 0; i < total_; ++i) val[i] = l[i] && r[i];
        break;
      }
      case Op::Or: {
        const auto& l = eval(f.left());
        const auto& r = eval(f.right());
        for (std::size_t i = 0; i < total_; ++i) val[i] = l[i] || r[i];
        break;
      }
      case Op::Next: {
        const auto& c = eval(f.child());
        for (std::size_t i = 0; i < total_; ++i) val[i] = c[succ(i)];
        break;
      }
      case Op::Until: {
        const auto& l = eval(f.left());
        const auto& r = eval(f.right());
        least_fixpoint(val, [&](std::size_t i, bool nxt) {
          return r[i] || (l[i] && nxt);
        });
        break;
      }
      case Op::Eventually: {
        const auto& c = eval(f.child());
        least_fixpoint(val,
                       [&](std::size_t i, bool nxt) { return c[i] || nxt; });
        break;
      }
      case Op::Release: {
        const auto& l = eval(f.left());
        const auto& r = eval(f.right());
        greatest_fixpoint(val, [&](std::size_t i, bool nxt) {
          return r[i] && (l[i] || nxt);
        });
        break;
      }
      case Op::Always: {
        const auto& c = eval(f.child());
        greatest_fixpoint(val,
                          [&](std::size_t i, bool nxt) { return c[i] && nxt; });
        break;
      }
    }
    return memo_.emplace(f.id(), std::move(val)).first->second;
  }

private:
  template <typename Step>
  void iterate(std::vector<char>& val, Step step) {
    for (std::size_t pass = 0; pass <= total_ + 1; ++pass) {
      bool changed = false;
      for (std::size_t k = total_; k-- > 0;) {
        char v = step(k, val[succ(k)] != 0);
        if (v != val[k]) {
          val[k] = v;
          changed = true;
        }
      }
      if (!changed) break;
    }
  }

  template <typename Step>
  void least_fixpoint(std::vector<char>& val, Step step) {
    iterate(val, step);  // val starts all-false
  }

  template <typename Step>
  void greatest_fixpoint(std::vector<char>& val, Step step) {
    std::fill(val.begin(), val.end(), 1);
    iterate(val, step);
  }

  const LassoWord& w_;
  std::size_t n_ = 0, p_ = 0, total_ = 0;
  std::vector<Letter> letters_;
  std::unordered_map<const void*, std::vector<char>> memo_;
};

}  // namespace

bool eval_lasso(const Formula& f, const LassoWord& w) {
  if (w.period.empty()) throw std::invalid_argument("empty period");
  Evaluator ev(w);
  return ev.eval(f)[0] != 0;
}

LassoWord LassoSampler::next() {
  LassoWord w;
  w.ap = ap_;
  std::uniform_int_distribution<int> prefix_len(0, 3);
  std::uniform_int_distribution<int> period_len(1, 4);
  Letter max_letter =
      ap_.empty() ? 0 : static_cast<Letter>((1u << ap_.size()) - 1);
  std::uniform_int_distribution<Letter> letter(0, max_letter);
  int np = prefix_len(rng_);
  int pp = period_len(rng_);
  for (int i = 0; i < np; ++i) w.prefix.push_back(letter(rng_));
  for (int i = 0; i < pp; ++i) w.period.push_back(letter(rng_));
  return w;
}

}  // namespace slaa
