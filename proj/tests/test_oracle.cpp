#include "doctest.h"
#include "helpers.hpp"
#include "slaa/oracle.hpp"
#include "slaa/random.hpp"
#include "slaa/simplify.hpp"
#include "slaa/translate.hpp"

using namespace slaa;
using test_helpers::F;
using test_helpers::W;
using test_helpers::sample_words;

TEST_CASE("membership on the merged GFa automaton") {
  Slaa a = simplify(translate_fg(F("G F a")));
  CHECK(membership(a, W(";{},{},{a}")));
  CHECK(!membership(a, W(";{}", {"a"})));
  CHECK(membership(a, W(";{a}")));
  CHECK(!membership(a, W("{a},{a};{}")));
}

TEST_CASE("membership on the basic until automaton") {
  Slaa a = translate_basic(F("a U b"));
  CHECK(!membership(a, W(";{a}", {"b"})));
  CHECK(membership(a, W("{a};{b}")));
  CHECK(membership(a, W("{a},{b};{}")));
  CHECK(membership(a, W(";{b}", {"a"})));
  CHECK(!membership(a, W(";{}", {"a", "b"})));
}

TEST_CASE("cross_check examples") {
  Formula gfa = F("G F a");
  Slaa a = simplify(translate_fg(gfa));
  CHECK(cross_check(gfa, a, sample_words(gfa, 3, 50)).ok());

  // The FGa automaton disagrees with GFa on a word where a occurs finitely.
  Slaa fga = simplify(translate_fg(F("F G a")));
  auto report = cross_check(gfa, fga, {W(";{a},{}")});
  CHECK(!report.ok());

  Slaa tt = translate_basic(Formula::tt());
  CHECK(cross_check(Formula::tt(), tt, {W(";{}"), W("{};{},{}")}).ok());
}

TEST_CASE("membership projects words onto the automaton alphabet") {
  Slaa a = translate_basic(F("G a"));
  // The word also talks about b; only a matters.
  CHECK(membership(a, W(";{a,b},{a}")));
  CHECK(!membership(a, W(";{b}", {"a"})));
  // An automaton proposition missing from the universe is an error.
  CHECK_THROWS_AS(membership(a, W(";{b}")), std::invalid_argument);
}

TEST_CASE("membership is invariant under period unrolling and restarts") {
  for (std::uint32_t seed = 0; seed < 50; ++seed) {
    Formula f = random_formula(seed, 3, 12, preset_priorities("randfg"));
    Slaa a = simplify(translate_fg(f));
    LassoSampler sampler(seed + 100, atomic_props(f));
    for (int i = 0; i < 6; ++i) {
      LassoWord w = sampler.next();
      bool base = membership(a, w);
      CHECK(membership(a, w) == base);  // memoization is per call
      for (int k = 2; k <= 3; ++k) {
        LassoWord u = w;
        for (int r = 1; r < k; ++r)
          u.period.insert(u.period.end(), w.period.begin(), w.period.end());
        CHECK(membership(a, u) == base);
      }
    }
  }
}

TEST_CASE("marks on non-looping edges are irrelevant under Fin-only acceptance") {
  for (const char* text : {"a U b", "F(G a | G F b)", "G(a & F b)"}) {
    Formula f = F(text);
    Slaa a = translate_basic(f);
    REQUIRE(a.acceptance == AccFormula::fin(0));
    Slaa marked = a;
    bool changed = false;
    for (Transition& t : marked.transitions) {
      bool is_loop = std::binary_search(t.dst.begin(), t.dst.end(), t.src);
      if (!is_loop && t.marks.empty()) {
        t.marks = {0};
        changed = true;
      }
    }
    REQUIRE(changed);
    for (const LassoWord& w : sample_words(f, 31, 25))
      CHECK(membership(a, w) == membership(marked, w));
  }
}

TEST_CASE("acceptance via a universal branch requires both children") {
  // Basic GFa: the a-edge universally spawns GFa and (the fulfilled) Fa.
  Slaa a = translate_basic(F("G F a"));
  CHECK(!stats(a).is_nonalternating);
  CHECK(membership(a, W(";{a},{}")));
  CHECK(!membership(a, W("{a};{}")));
}

TEST_CASE("oracle agrees with the evaluator across regimes") {
  for (const char* preset : {"rand1", "rand4", "randfg"}) {
    for (std::uint32_t seed = 200; seed < 260; ++seed) {
      Formula f = random_formula(seed, 4, 13, preset_priorities(preset));
      auto words = sample_words(f, seed, 15);
      for (Mode m : {Mode::Basic, Mode::F, Mode::FG})
        CHECK(cross_check(f, simplify(translate(f, {.mode = m})), words).ok());
    }
  }
}
