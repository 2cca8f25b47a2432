#include "doctest.h"
#include "helpers.hpp"
#include "slaa/random.hpp"

using namespace slaa;
using test_helpers::F;
using test_helpers::W;

TEST_CASE("lasso parsing and printing") {
  LassoWord w = W("{a},{a,b};{}");
  CHECK(w.ap == std::vector<std::string>{"a", "b"});
  CHECK(w.prefix.size() == 2);
  CHECK(w.period.size() == 1);
  CHECK(w.prefix[0] == 0b01);   // {a}
  CHECK(w.prefix[1] == 0b11);   // {a,b}
  CHECK(w.period[0] == 0);      // {}
  CHECK(parse_lasso(w.to_string()).to_string() == w.to_string());

  // Empty prefix is fine; universe can be extended explicitly.
  LassoWord v = W(";{a}", {"b", "c"});
  CHECK(v.prefix.empty());
  CHECK(v.ap == std::vector<std::string>{"a", "b", "c"});

  CHECK_THROWS_AS(W("{a};"), ParseError);   // empty period
  CHECK_THROWS_AS(W("{a"), ParseError);     // unclosed letter
  CHECK_THROWS_AS(W("{a}|{b}"), ParseError);
}

TEST_CASE("evaluator agrees with the semantics on hand cases") {
  CHECK(eval_lasso(F("G F a"), W(";{},{},{a}")));
  CHECK(!eval_lasso(F("G F a"), W(";{}", {"a"})));
  CHECK(eval_lasso(F("a U b"), W("{a},{a,b};{}")));
  CHECK(!eval_lasso(F("a U b"), W(";{a}", {"b"})));
  CHECK(eval_lasso(F("X a"), W("{};{a}")));
  CHECK(!eval_lasso(F("X a"), W("{a};{}")));
  CHECK(eval_lasso(F("a R b"), W(";{b}", {"a"})));
  CHECK(!eval_lasso(F("a R b"), W("{b};{}", {"a"})));
  CHECK(eval_lasso(F("a R b"), W("{b},{a,b};{}")));
  CHECK(eval_lasso(F("F G a"), W("{},{};{a}")));
  CHECK(!eval_lasso(F("F G a"), W(";{a},{}")));
  CHECK(eval_lasso(Formula::tt(), W(";{}")));
  CHECK(!eval_lasso(Formula::ff(), W(";{}")));
  CHECK(eval_lasso(F("!a"), W(";{}", {"a"})));
}

TEST_CASE("evaluator rejects propositions outside the universe") {
  CHECK_THROWS_AS(eval_lasso(F("z"), W(";{a}")), std::invalid_argument);
}

namespace {

// Reference evaluator for formulae without U/R/F/G: direct recursion over
// positions using the wrap map succ(i).
bool naive_eval(const Formula& f, const LassoWord& w, std::size_t pos) {
  std::size_t total = w.prefix.size() + w.period.size();
  std::size_t wrapped = pos < total ? pos : w.prefix.size() +
      (pos - w.prefix.size()) % w.period.size();
  Letter letter = wrapped < w.prefix.size()
                      ? w.prefix[wrapped]
                      : w.period[wrapped - w.prefix.size()];
  switch (f.op()) {
    case Op::True:
      return true;
    case Op::False:
      return false;
    case Op::Ap:
    case Op::NotAp: {
      auto it = std::find(w.ap.begin(), w.ap.end(), f.ap_name());
      bool holds = (letter >> (it - w.ap.begin())) & 1;
      return f.op() == Op::Ap ? holds : !holds;
    }
    case Op::And:
      return naive_eval(f.left(), w, pos) && naive_eval(f.right(), w, pos);
    case Op::Or:
      return naive_eval(f.left(), w, pos) || naive_eval(f.right(), w, pos);
    case Op::Next:
      return naive_eval(f.child(), w, pos + 1);
    default:
      throw std::logic_error("naive_eval: temporal operator");
  }
}

}  // namespace

TEST_CASE("evaluator matches naive unrolling on X/boolean formulae") {
  GenPriorities pr;
  pr.until = pr.release = pr.eventually = pr.always = 0;
  for (std::uint32_t seed = 0; seed < 200; ++seed) {
    Formula f = random_formula(seed, 3, 9, pr);
    LassoSampler sampler(seed, atomic_props(f));
    for (int i = 0; i < 10; ++i) {
      LassoWord w = sampler.next();
      CHECK(eval_lasso(f, w) == naive_eval(f, w, 0));
    }
  }
}

TEST_CASE("evaluation is invariant under period unrolling") {
  for (std::uint32_t seed = 0; seed < 120; ++seed) {
    Formula f = random_formula(seed, 3, 12, preset_priorities("rand4"));
    LassoSampler sampler(seed, atomic_props(f));
    for (int i = 0; i < 6; ++i) {
      LassoWord w = sampler.next();
      bool base = eval_lasso(f, w);
      for (int k = 2; k <= 3; ++k) {
        LassoWord u = w;
        for (int r = 1; r < k; ++r)
          u.period.insert(u.period.end(), w.period.begin(), w.period.end());
        CHECK(eval_lasso(f, u) == base);
      }
      // Rotating one period letter into the prefix also preserves the word.
      LassoWord rot = w;
      rot.prefix.push_back(rot.period.front());
      rot.period.erase(rot.period.begin());
      rot.period.push_back(rot.prefix.back());
      CHECK(eval_lasso(f, rot) == base);
    }
  }
}

TEST_CASE("sampler is deterministic and within documented bounds") {
  LassoSampler s1(42, {"a", "b"}), s2(42, {"a", "b"});
  for (int i = 0; i < 50; ++i) {
    LassoWord w1 = s1.next(), w2 = s2.next();
    CHECK(w1.to_string() == w2.to_string());
    CHECK(w1.prefix.size() <= 3);
    CHECK(w1.period.size() >= 1);
    CHECK(w1.period.size() <= 4);
  }
}
