#include <doctest.h>

#include "brouwer/errors.hpp"
#include "brouwer/structure.hpp"
#include "brouwer/tower.hpp"

using namespace brouwer;

TEST_SUITE("tower") {
  TEST_CASE("sizes follow the recurrence") {
    CHECK(jaskowski_size(1) == 2);
    CHECK(jaskowski_size(2) == 3);
    CHECK(jaskowski_size(3) == 10);
    CHECK(jaskowski_size(4) == 1001);
    CHECK(jaskowski_size(5) == 1001ULL * 1001 * 1001 * 1001 + 1);
    CHECK(jaskowski_size(6) == UINT64_MAX);
    for (int n = 1; n <= 4; ++n) CHECK(jaskowski_algebra(n).algebra.size() == jaskowski_size(n));
  }

  TEST_CASE("small levels") {
    const TowerLevel one = jaskowski_algebra(1);
    CHECK(one.algebra == chain_lattice(2));
    const TowerLevel two = jaskowski_algebra(2);
    CHECK(two.algebra.labels() == std::vector<std::string>{"0", "m", "1"});
    CHECK(lattice_isomorphic(two.algebra, chain_lattice(3)));
    const TowerLevel three = jaskowski_algebra(3);
    CHECK(three.algebra.top() == 9);
    CHECK(three.algebra.find("(m,0)"));
    CHECK(three.dual_algebra == dual(three.algebra));
    CHECK_THROWS_AS(jaskowski_algebra(5), SizeBudgetExceeded);
  }

  TEST_CASE("I_{n+1} is I_n^n with a new top") {
    for (int n = 1; n <= 3; ++n) {
      const DistLattice next = jaskowski_algebra(n + 1).algebra;
      const DistLattice base = power(jaskowski_algebra(n).algebra, static_cast<std::size_t>(n));
      CHECK(lattice_isomorphic(interval(next, next.bot(), static_cast<Elem>(next.size() - 2)), base));
      // The top is join-irreducible: exactly one lower cover.
      int covers = 0;
      for (Elem x = 0; x < next.size(); ++x) {
        if (next.lt(x, next.top())) {
          bool cover = true;
          for (Elem y = 0; y < next.size(); ++y) cover = cover && !(next.lt(x, y) && next.lt(y, next.top()));
          covers += cover;
        }
      }
      CHECK(covers == 1);
    }
  }

  TEST_CASE("every level and its dual is weakly projective") {
    for (int n = 1; n <= 4; ++n) {
      const TowerLevel t = jaskowski_algebra(n);
      CHECK(is_weakly_projective(t.algebra));
      CHECK(is_weakly_projective(t.dual_algebra));
      CHECK_FALSE(is_dd_like(t.algebra));
      CHECK_FALSE(is_dd_like(t.dual_algebra));
    }
  }
}
