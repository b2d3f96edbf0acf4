#include <doctest.h>

#include "brouwer/structure.hpp"
#include "brouwer/tower.hpp"
#include "oracles.hpp"

using namespace brouwer;

namespace {

Poset double_diamond_base() {
  return Poset::make({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

bool is_forest(const Poset& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.upper_covers(i).size() > 1) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("examples") {
    const DistLattice dd = downset_lattice(double_diamond_base());
    CHECK(is_dd_like(dd));
    auto w = dd_like_witness(dd);
    REQUIRE(w);
    CHECK_FALSE(dd.leq(w->a0, w->a1));
    CHECK_FALSE(dd.leq(w->a1, w->a0));
    CHECK(dd.leq(dd.join(w->a0, w->a1), w->a2));
    CHECK(dd.leq(dd.join(w->a0, w->a1), w->a3));
    CHECK_FALSE(dd.leq(w->a2, w->a3));
    CHECK_FALSE(dd.leq(w->a3, w->a2));
    CHECK_FALSE(is_weakly_projective(dd));
    CHECK_FALSE(is_interval_embeddable(dd));

    const DistLattice sq = power(chain_lattice(2), 2);
    CHECK_FALSE(is_dd_like(sq));
    CHECK(is_weakly_projective(sq));
    CHECK_FALSE(is_initial_segment_embeddable(sq));
    CHECK(is_initial_segment_embeddable(chain_lattice(2)));
    CHECK(is_initial_segment_embeddable(stack_sum(chain_lattice(2), sq)));
    for (std::size_t n = 1; n <= 6; ++n) CHECK_FALSE(is_dd_like(chain_lattice(n)));
    CHECK(is_weakly_projective(jaskowski_algebra(3).algebra));
    CHECK(is_interval_embeddable(jaskowski_algebra(4).algebra));
  }

  TEST_CASE("dd-like iff not weakly projective, closed under duality") {
    for (std::size_t n = 0; n <= 5; ++n) {
      for (const Poset& p : posets_of_size(n)) {
        const DistLattice l = downset_lattice(p);
        const bool wp = is_weakly_projective(l);
        CHECK(is_dd_like(l) == !wp);
        CHECK(is_weakly_projective(dual(l)) == wp);
        if (is_forest(p)) CHECK(is_interval_embeddable(l));
      }
    }
  }

  TEST_CASE("subinterval criterion agrees") {
    for (std::size_t n = 0; n <= 4; ++n) {
      for (const Poset& p : posets_of_size(n)) {
        const StructureReport r = analyze(downset_lattice(p));
        CHECK(r.consistent);
        REQUIRE(r.subinterval_check);
        CHECK(*r.subinterval_check == r.interval_embeddable);
      }
    }
  }

  TEST_CASE("products of non-dd-like lattices are not dd-like") {
    std::vector<DistLattice> good;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const Poset& p : posets_of_size(n)) {
        DistLattice l = downset_lattice(p);
        if (!is_dd_like(l)) good.push_back(l);
      }
    }
    for (const auto& a : good) {
      for (const auto& b : good) CHECK_FALSE(is_dd_like(product(a, b)));
    }
  }

  TEST_CASE("initial segment: stack_sum(I_1, H) for weakly projective H") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (const Poset& p : posets_of_size(n)) {
        const DistLattice h = downset_lattice(p);
        if (is_weakly_projective(h)) CHECK(is_initial_segment_embeddable(stack_sum(chain_lattice(2), h)));
      }
    }
  }
}
