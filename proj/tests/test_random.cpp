#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "slaa/random.hpp"

using namespace slaa;

namespace {

bool contains_op(const Formula& f, std::initializer_list<Op> ops) {
  for (Op o : ops)
    if (f.op() == o) return true;
  switch (f.op()) {
    case Op::And:
    case Op::Or:
    case Op::Until:
    case Op::Release:
      return contains_op(f.left(), ops) || contains_op(f.right(), ops);
    case Op::Next:
    case Op::Eventually:
    case Op::Always:
      return contains_op(f.child(), ops);
    default:
      return false;
  }
}

}  // namespace

TEST_CASE("generator is deterministic in the seed") {
  for (std::uint32_t seed = 0; seed < 50; ++seed) {
    Formula a = random_formula(seed, 5, 15, preset_priorities("rand1"));
    Formula b = random_formula(seed, 5, 15, preset_priorities("rand1"));
    CHECK(a == b);
  }
  // Different seeds produce different formulae at least sometimes.
  std::set<std::string> distinct;
  for (std::uint32_t seed = 0; seed < 50; ++seed)
    distinct.insert(
        random_formula(seed, 5, 15, preset_priorities("rand1")).to_string());
  CHECK(distinct.size() > 25);
}

TEST_CASE("generator respects the size budget") {
  for (std::uint32_t seed = 0; seed < 200; ++seed)
    for (int size : {1, 2, 5, 15}) {
      Formula f = random_formula(seed, 5, size, preset_priorities("rand1"));
      CHECK(f.tree_size() <= size);
    }
}

TEST_CASE("generated formulae use only declared propositions") {
  for (std::uint32_t seed = 0; seed < 100; ++seed) {
    Formula f = random_formula(seed, 2, 15, preset_priorities("rand4"));
    for (const std::string& name : atomic_props(f))
      CHECK((name == "p0" || name == "p1"));
  }
}

TEST_CASE("randfg regime produces no X, U or R") {
  for (std::uint32_t seed = 0; seed < 200; ++seed) {
    Formula f = random_formula(seed, 5, 15, preset_priorities("randfg"));
    CHECK(!contains_op(f, {Op::Next, Op::Until, Op::Release}));
  }
  // ... but does produce F/G somewhere in the sample.
  bool saw_fg = false;
  for (std::uint32_t seed = 0; seed < 50 && !saw_fg; ++seed)
    saw_fg = contains_op(random_formula(seed, 5, 15,
                                        preset_priorities("randfg")),
                         {Op::Eventually, Op::Always});
  CHECK(saw_fg);
}

TEST_CASE("invalid generator configurations are rejected") {
  GenPriorities zero{};
  zero.ap = zero.and_ = zero.or_ = zero.next = zero.until = zero.release =
      zero.eventually = zero.always = 0;
  CHECK_THROWS_AS(random_formula(1, 3, 10, zero), std::invalid_argument);
  CHECK_THROWS_AS(preset_priorities("rand3"), std::invalid_argument);
  CHECK_THROWS_AS(random_formula(1, 0, 10, preset_priorities("rand1")),
                  std::invalid_argument);
  CHECK_THROWS_AS(random_formula(1, 3, 0, preset_priorities("rand1")),
                  std::invalid_argument);
}

TEST_CASE("presets differ only in the documented weights") {
  GenPriorities r1 = preset_priorities("rand1");
  GenPriorities r2 = preset_priorities("rand2");
  GenPriorities r4 = preset_priorities("rand4");
  GenPriorities fg = preset_priorities("randfg");
  CHECK(r1.eventually == 1);
  CHECK(r1.always == 1);
  CHECK(r2.eventually == 2);
  CHECK(r4.eventually == 4);
  CHECK(r4.always == 4);
  CHECK(fg.eventually == 2);
  CHECK(fg.always == 2);
  CHECK(fg.next == 0);
  CHECK(fg.until == 0);
  CHECK(fg.release == 0);
}
