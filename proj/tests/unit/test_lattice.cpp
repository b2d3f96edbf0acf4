#include <doctest.h>

#include <random>

#include "brouwer/errors.hpp"
#include "brouwer/lattice.hpp"
#include "oracles.hpp"

using namespace brouwer;

namespace {

DistLattice diamond_base_lattice() {
  // Downsets of the 4-point poset a, b < c, d.
  return downset_lattice(Poset::make({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}}));
}

void check_arrows(const DistLattice& l) {
  for (Elem a = 0; a < l.size(); ++a) {
    for (Elem b = 0; b < l.size(); ++b) {
      REQUIRE(l.brouwer_arrow(a, b) == oracle::brouwer_arrow(l, a, b));
      REQUIRE(l.heyting_arrow(a, b) == oracle::heyting_arrow(l, a, b));
    }
  }
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("3-chain arrows") {
    const DistLattice c = chain_lattice(3);
    // Brouwer: least c with a v c >= b.
    CHECK(c.brouwer_arrow(1, 2) == 2);
    CHECK(c.brouwer_arrow(2, 1) == 0);
    CHECK(c.brouwer_neg(1) == 2);
    CHECK(c.brouwer_neg(2) == 0);
    CHECK(c.heyting_neg(1) == 0);
    CHECK(c.heyting_neg(0) == 2);
    CHECK(c.heyting_arrow(2, 1) == 1);
  }

  TEST_CASE("arrows agree with brute force") {
    for (const DistLattice& l : oracle::small_lattices(5)) check_arrows(l);
    check_arrows(product(chain_lattice(3), chain_lattice(4)));
    check_arrows(stack_sum(power(chain_lattice(2), 2), chain_lattice(3)));
    check_arrows(dual(diamond_base_lattice()));
  }

  TEST_CASE("dual is an involution and swaps arrows") {
    for (const DistLattice& l : oracle::small_lattices(4)) {
      const DistLattice d = dual(l);
      CHECK(dual(d) == l);
      CHECK(d.bot() == l.top());
      for (Elem a = 0; a < l.size(); ++a) {
        for (Elem b = 0; b < l.size(); ++b) {
          CHECK(d.brouwer_arrow(a, b) == l.heyting_arrow(a, b));
          CHECK(d.leq(a, b) == l.leq(b, a));
        }
      }
    }
  }

  TEST_CASE("product, power and stack sum") {
    const DistLattice p = product(chain_lattice(2), chain_lattice(3));
    CHECK(p.size() == 6);
    CHECK(p.label(1) == "(1,0)");
    CHECK(power(chain_lattice(3), 2).size() == 9);
    const DistLattice s = stack_sum(chain_lattice(2), power(chain_lattice(2), 2));
    CHECK(s.size() == 5);
    CHECK(s.bot() == 0);
    CHECK(s.top() == 4);
    CHECK(s.leq(1, 2));
    CHECK(distributivity_violation(s) == std::nullopt);
  }

  TEST_CASE("intervals: brute-force arrow equals a v (x -> y)") {
    for (const DistLattice& l : oracle::small_lattices(4)) {
      for (Elem a = 0; a < l.size(); ++a) {
        for (Elem b = 0; b < l.size(); ++b) {
          if (!l.leq(a, b)) continue;
          const auto members = interval_members(l, a, b);
          const DistLattice in = interval(l, a, b);
          REQUIRE(in.size() == members.size());
          for (Elem i = 0; i < in.size(); ++i) {
            for (Elem j = 0; j < in.size(); ++j) {
              const Elem local = in.brouwer_arrow(i, j);
              REQUIRE(local == oracle::brouwer_arrow(in, i, j));
              CHECK(members[local] == l.join(a, l.brouwer_arrow(members[i], members[j])));
            }
          }
        }
      }
    }
  }

  TEST_CASE("the printed interval arrow formula fails on the 3-chain") {
    const DistLattice c = chain_lattice(3);
    const DistLattice in = interval(c, 1, 2);
    // Locally 0 = m, 1 = 1. arrow(1, m) = m, while x v (x -> y) would give 1.
    CHECK(in.brouwer_arrow(1, 0) == 0);
    CHECK(c.join(2, c.brouwer_arrow(2, 1)) == 2);
    CHECK_THROWS_AS(interval(c, 2, 1), EmptyInterval);
  }

  TEST_CASE("explicit input validation") {
    // N5: 0 < a < b < 1, 0 < c < 1.
    CHECK_THROWS_AS(DistLattice::from_order({"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}),
                    NotALattice);
    // M3.
    CHECK_THROWS_AS(
        DistLattice::from_order({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}),
        NotALattice);
    // Two maximal elements: no join.
    CHECK_THROWS_AS(DistLattice::from_order({"0", "a", "b"}, {{0, 1}, {0, 2}}), NotALattice);
    CHECK_THROWS_AS(DistLattice::from_order({"a", "b"}, {{0, 1}, {1, 0}}), CycleError);
    const DistLattice sq = DistLattice::from_order({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(sq.size() == 4);
    CHECK(lattice_isomorphic(sq, power(chain_lattice(2), 2)));
  }

  TEST_CASE("Birkhoff map is an isomorphism") {
    for (const DistLattice& l : oracle::small_lattices(5)) {
      const LatticeMap m = birkhoff_map(l);
      CHECK(m.injective());
      CHECK(m.surjective());
      CHECK(is_lattice_homomorphism(m).ok);
    }
  }

  TEST_CASE("principal quotients") {
    std::mt19937_64 rng(3);
    for (const DistLattice& l : oracle::small_lattices(4)) {
      for (Elem e = 0; e < l.size(); ++e) {
        const Quotient f = principal_quotient(l, e, QuotientKind::Filter);
        CHECK(is_lattice_homomorphism(f.map).ok);
        CHECK(f.map.surjective());
        const Quotient i = principal_quotient(l, e, QuotientKind::Ideal);
        CHECK(is_brouwer_homomorphism(i.map).ok);
        CHECK(i.map.surjective());
      }
    }
  }

  TEST_CASE("meet slice map and its preimage") {
    for (const DistLattice& l : oracle::small_lattices(4)) {
      for (Elem x = 0; x < l.size(); ++x) {
        for (Elem y = 0; y < l.size(); ++y) {
          if (!l.leq(x, y)) continue;
          for (Elem z = 0; z < l.size(); ++z) {
            const LatticeMap m = meet_slice_map(l, x, y, z);
            REQUIRE(is_lattice_homomorphism(m).ok);
            REQUIRE(m.surjective());
            for (Elem u : interval_members(l, l.meet(x, z), l.meet(y, z))) {
              CHECK(l.meet(meet_slice_preimage(l, x, y, u), z) == u);
            }
          }
        }
      }
    }
  }

  TEST_CASE("irreducibles") {
    const DistLattice b = diamond_base_lattice();
    CHECK(b.size() == 7);
    CHECK(b.join_irreducible_elements().size() == 4);
    CHECK(b.meet_irreducible_elements().size() == 4);
    const JoinIrreducibles j = join_irreducibles(b);
    CHECK(poset_isomorphic(j.poset, Poset::make({"a", "b", "c", "d"},
                                                {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}})));
    CHECK(chain_lattice(5).join_irreducible_elements().size() == 4);
  }

  TEST_CASE("size budgets") {
    CHECK_THROWS_AS(power(chain_lattice(10), 4, 5000), SizeBudgetExceeded);
    CHECK_THROWS_AS(downset_lattice(Poset::antichain(13)), SizeBudgetExceeded);
  }
}
