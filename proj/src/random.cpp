#include "slaa/random.hpp"

#include <random>
#include <stdexcept>

namespace slaa {

GenPriorities preset_priorities(const std::string& name) {
  GenPriorities p;
  if (name == "rand1") {
    p.eventually = p.always = 1;
  } else if (name == "rand2") {
    p.eventually = p.always = 2;
  } else if (name == "rand4") {
    p.eventually = p.always = 4;
  } else if (name == "randfg") {
    p.eventually = p.always = 2;
    p.next = p.until = p.release = 0;
  } else {
    throw std::invalid_argument("unknown preset '" + name + "'");
  }
  return p;
}

namespace {

enum class Pick { Leaf, And, Or, Next, Until, Release, Eventually, Always };

class Generator {
public:
  Generator(std::uint32_t seed, int ap_count, const GenPriorities& pr)
      : rng_(seed), ap_count_(ap_count), pr_(pr) {}

  // Builds a tree of exactly `budget` nodes.
  Formula gen(int budget) {
    Pick pick = choose(budget);
    switch (pick) {
      case Pick::Leaf:
        return leaf();
      case Pick::Next:
        return Formula::next(gen(budget - 1));
      case Pick::Eventually:
        return Formula::eventually(gen(budget - 1));
      case Pick::Always:
        return Formula::always(gen(budget - 1));
      default: {
        int left = std::uniform_int_distribution<int>(1, budget - 2)(rng_);
        Formula l = gen(left);
        Formula r = gen(budget - 1 - left);
        switch (pick) {
          case Pick::And:
            return Formula::conj(l, r);
          case Pick::Or:
            return Formula::disj(l, r);
          case Pick::Until:
            return Formula::until(l, r);
          default:
            return Formula::release(l, r);
        }
      }
    }
  }

private:
  Pick choose(int budget) {
    struct Entry {
      Pick pick;
      int weight;
      int min_budget;
    };
    const Entry table[] = {
        {Pick::Leaf, pr_.ap, 1},
        {Pick::Next, pr_.next, 2},
        {Pick::Eventually, pr_.eventually, 2},
        {Pick::Always, pr_.always, 2},
        {Pick::And, pr_.and_, 3},
        {Pick::Or, pr_.or_, 3},
        {Pick::Until, pr_.until, 3},
        {Pick::Release, pr_.release, 3},
    };
    int total = 0;
    for (const Entry& e : table)
      if (budget >= e.min_budget) total += e.weight;
    // Only leaves fit in a budget of 1; fall back to one even when its
    // weight is zero, so the tree is always budget-exact.
    if (total == 0) return Pick::Leaf;
    int roll = std::uniform_int_distribution<int>(0, total - 1)(rng_);
    for (const Entry& e : table) {
      if (budget < e.min_budget) continue;
      roll -= e.weight;
      if (roll < 0) return e.pick;
    }
    return Pick::Leaf;
  }

  Formula leaf() {
    // Constants are rare relative to literals: each proposition appears
    // positively and negatively with weight 2, tt and ff with weight 1.
    int total = 4 * ap_count_ + 2;
    int roll = std::uniform_int_distribution<int>(0, total - 1)(rng_);
    if (roll < 4 * ap_count_) {
      std::string name = "p" + std::to_string(roll / 4);
      return roll % 4 == 3 ? Formula::nap(name) : Formula::ap(name);
    }
    return roll % 2 ? Formula::ff() : Formula::tt();
  }

  std::mt19937 rng_;
  int ap_count_;
  GenPriorities pr_;
};

}  // namespace

Formula random_formula(std::uint32_t seed, int ap_count, int tree_size,
                       const GenPriorities& pr) {
  if (ap_count < 1) throw std::invalid_argument("ap_count must be >= 1");
  if (tree_size < 1) throw std::invalid_argument("tree_size must be >= 1");
  if (pr.ap == 0 && pr.and_ == 0 && pr.or_ == 0 && pr.next == 0 &&
      pr.until == 0 && pr.release == 0 && pr.eventually == 0 && pr.always == 0)
    throw std::invalid_argument("all priorities are zero");
  Generator g(seed, ap_count, pr);
  return simplify_syntactic(g.gen(tree_size));
}

}  // namespace slaa
