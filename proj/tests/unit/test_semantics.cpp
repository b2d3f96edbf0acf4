#include <doctest.h>

#include <random>

#include "brouwer/corpus.hpp"
#include "brouwer/errors.hpp"
#include "brouwer/semantics.hpp"
#include "brouwer/tower.hpp"
#include "oracles.hpp"

using namespace brouwer;

namespace {

// Direct recursive evaluation, independent of the compiled evaluator.
Elem naive(const Formula& f, const DistLattice& l, const Valuation& v, bool brouwer) {
  const Elem bot = brouwer ? l.top() : l.bot();
  const Elem top = brouwer ? l.bot() : l.top();
  switch (f.op()) {
    case Op::Var:
      return v.at(f.name());
    case Op::Bot:
      return bot;
    case Op::Top:
      return top;
    case Op::Not: {
      const Elem a = naive(f.lhs(), l, v, brouwer);
      return brouwer ? oracle::brouwer_arrow(l, a, l.top()) : oracle::heyting_arrow(l, a, l.bot());
    }
    case Op::And: {
      const Elem a = naive(f.lhs(), l, v, brouwer), b = naive(f.rhs(), l, v, brouwer);
      return brouwer ? l.join(a, b) : l.meet(a, b);
    }
    case Op::Or: {
      const Elem a = naive(f.lhs(), l, v, brouwer), b = naive(f.rhs(), l, v, brouwer);
      return brouwer ? l.meet(a, b) : l.join(a, b);
    }
    case Op::Imp: {
      const Elem a = naive(f.lhs(), l, v, brouwer), b = naive(f.rhs(), l, v, brouwer);
      return brouwer ? oracle::brouwer_arrow(l, a, b) : oracle::heyting_arrow(l, a, b);
    }
  }
  return 0;
}

Valuation random_valuation(std::mt19937_64& rng, const Formula& f, const DistLattice& l) {
  Valuation v;
  for (const auto& x : f.variables()) v[x] = static_cast<Elem>(rng() % l.size());
  return v;
}

}  // namespace

TEST_SUITE("semantics") {
  TEST_CASE("hand-evaluated examples") {
    const DistLattice c3 = chain_lattice(3);
    CHECK(eval_brouwer(parse("~p | ~~p"), c3, {{"p", 1}}) == 0);
    CHECK(eval_brouwer(parse("p | ~p"), c3, {{"p", 1}}) == 1);
    CHECK(eval_heyting(parse("~p | ~~p"), c3, {{"p", 1}}) == 2);
    CHECK(eval_heyting(parse("((p -> q) -> p) -> p"), c3, {{"p", 1}, {"q", 0}}) == 1);
    CHECK(eval_brouwer(parse("bot"), c3, {}) == 2);
    CHECK(eval_brouwer(parse("top"), c3, {}) == 0);
    CHECK_THROWS_AS(eval_heyting(parse("p & q"), c3, {{"p", 1}}), UnboundVariable);

    const DistLattice i3 = jaskowski_algebra(3).algebra;
    const Elem m0 = *i3.find("(m,0)");
    const Elem v = eval_heyting(parse("~p | ~~p"), i3, {{"p", m0}});
    CHECK(i3.label(v) == "(1,1)");
    CHECK(v != i3.top());
  }

  TEST_CASE("compiled evaluation matches naive recursion") {
    std::mt19937_64 rng(23);
    const std::vector<DistLattice> algebras = {chain_lattice(4), jaskowski_algebra(3).algebra,
                                               downset_lattice(oracle::random_poset(rng, 5, 0.3)),
                                               dual(power(chain_lattice(3), 2))};
    for (int i = 0; i < 600; ++i) {
      const Formula f = oracle::random_formula(rng, 4, {"p", "q", "r"}, true);
      const DistLattice& l = algebras[i % algebras.size()];
      const Valuation v = random_valuation(rng, f, l);
      CHECK(eval_heyting(f, l, v) == naive(f, l, v, false));
      CHECK(eval_brouwer(f, l, v) == naive(f, l, v, true));
      // Heyting reading of L is the Brouwer reading of its dual.
      CHECK(eval_heyting(f, l, v) == eval_brouwer(f, dual(l), v));
    }
  }

  TEST_CASE("validity examples") {
    const DistLattice c3 = chain_lattice(3);
    for (Semantics s : {Semantics::Brouwer, Semantics::Heyting}) {
      CHECK(is_valid(parse("p -> p"), c3, s).verdict == Verdict::Valid);
    }
    CHECK(is_valid(parse("~p | ~~p"), c3, Semantics::Brouwer).verdict == Verdict::Valid);
    const ValidityResult lem = is_valid(parse("p | ~p"), c3, Semantics::Brouwer);
    CHECK(lem.verdict == Verdict::Invalid);
    CHECK(lem.counterexample->at("p") == 1);

    const DistLattice i3 = jaskowski_algebra(3).algebra;
    const ValidityResult w = is_valid(parse("~p | ~~p"), i3, Semantics::Heyting);
    REQUIRE(w.verdict == Verdict::Invalid);
    CHECK(i3.label(w.counterexample->at("p")) == "(m,0)");
  }

  TEST_CASE("witness is the lexicographically least and thread independent") {
    std::mt19937_64 rng(29);
    const DistLattice i3 = jaskowski_algebra(3).algebra;
    for (int i = 0; i < 60; ++i) {
      const Formula f = oracle::random_formula(rng, 4, {"p", "q", "r", "s"});
      SearchOptions one;
      one.threads = 1;
      SearchOptions many;
      many.threads = 4;
      const ValidityResult a = is_valid(f, i3, Semantics::Heyting, one);
      const ValidityResult b = is_valid(f, i3, Semantics::Heyting, many);
      CHECK(a.verdict == b.verdict);
      CHECK(a.counterexample == b.counterexample);
      CHECK(a.valuations == b.valuations);
      if (a.counterexample) {
        // Nothing smaller refutes f.
        const auto vars = f.variables();
        Valuation v;
        for (const auto& x : vars) v[x] = 0;
        std::uint64_t checked = 0;
        while (v != *a.counterexample) {
          CHECK(eval_heyting(f, i3, v) == i3.top());
          ++checked;
          for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
            if (++v[*it] < i3.size()) break;
            v[*it] = 0;
          }
        }
        CHECK(checked + 1 == a.valuations);
      }
    }
  }

  TEST_CASE("validity duality") {
    std::mt19937_64 rng(31);
    for (const DistLattice& l : oracle::small_lattices(3)) {
      for (int i = 0; i < 10; ++i) {
        const Formula f = oracle::random_formula(rng, 3, {"p", "q"});
        CHECK(is_valid(f, l, Semantics::Brouwer).verdict == is_valid(f, dual(l), Semantics::Heyting).verdict);
      }
    }
  }

  TEST_CASE("budgets and sampling") {
    const DistLattice i4 = jaskowski_algebra(4).algebra;
    const Formula three = parse("(p -> q) | (q -> r) | (r -> p)");
    CHECK_THROWS_AS(is_valid(three, i4, Semantics::Heyting), ValuationBudgetExceeded);
    SearchOptions s;
    s.sampled = true;
    s.samples = 2000;
    const ValidityResult r = is_valid(parse("p -> p | q | r"), i4, Semantics::Heyting, s);
    CHECK(r.sampled);
    CHECK(r.verdict == Verdict::Unknown);
    const ValidityResult bad = is_valid(parse("p | ~p | q | r"), i4, Semantics::Heyting, s);
    CHECK(bad.verdict == Verdict::Invalid);
  }

  TEST_CASE("positive fragment is preserved by adding a new bottom") {
    std::mt19937_64 rng(37);
    const DistLattice one = chain_lattice(2);
    for (const DistLattice& h : oracle::small_lattices(3)) {
      const DistLattice plus = stack_sum(one, h);
      for (int i = 0; i < 20; ++i) {
        Formula f = oracle::random_formula(rng, 3, {"p", "q"});
        if (!f.positive()) continue;
        Valuation v = random_valuation(rng, f, h);
        Valuation w;
        // H's element x sits at index x + 1 in the sum (its bottom is identified with 1 of I_1).
        for (auto [k, x] : v) w[k] = static_cast<Elem>(x + 1);
        CHECK(eval_heyting(f, plus, w) == eval_heyting(f, h, v) + 1);
      }
    }
  }

  TEST_CASE("WLEM holds in I_1 + H") {
    std::mt19937_64 rng(41);
    for (const DistLattice& h : oracle::small_lattices(4)) {
      const DistLattice plus = stack_sum(chain_lattice(2), h);
      const Formula a = oracle::random_formula(rng, 2, {"p", "q"});
      CHECK(is_valid(Formula::disj(Formula::neg(a), Formula::neg(Formula::neg(a))), plus, Semantics::Heyting)
                .verdict == Verdict::Valid);
    }
  }

  TEST_CASE("refutations survive injective Brouwer homomorphisms") {
    // x -> x v e embeds L(>= e) ... use the inclusion of a chain into a product as a
    // concrete embedding: a |-> (a, a) is a Brouwer embedding of C3 into C3 x C3.
    const DistLattice c3 = chain_lattice(3);
    const DistLattice sq = product(c3, c3);
    std::vector<Elem> table;
    for (Elem a = 0; a < 3; ++a) table.push_back(static_cast<Elem>(a + 3 * a));
    REQUIRE(is_brouwer_homomorphism(LatticeMap{c3, sq, table}).ok);
    for (const Formula& f : generate_formulas(2)) {
      if (is_valid(f, c3, Semantics::Brouwer).verdict == Verdict::Invalid) {
        CHECK(is_valid(f, sq, Semantics::Brouwer).verdict == Verdict::Invalid);
      }
    }
  }

  TEST_CASE("countermodel search") {
    CHECK_FALSE(find_countermodel(parse("p -> p")));
    auto lem = find_countermodel(parse("p | ~p"));
    REQUIRE(lem);
    CHECK(lem->describe() == "I2");
    auto wlem = find_countermodel(parse("~p | ~~p"));
    REQUIRE(wlem);
    CHECK(wlem->describe() == "I3");
    CHECK(wlem->algebra.label(wlem->valuation.at("p")) == "(m,0)");
    CountermodelBudget b;
    b.semantics = Semantics::Brouwer;
    auto dual_lem = find_countermodel(parse("p | ~p"), Family::Tower, b);
    REQUIRE(dual_lem);
    CHECK(dual_lem->level == 2);
  }

  TEST_CASE("directed frames") {
    const std::size_t expected[] = {0, 1, 1, 2, 5, 16};
    for (std::size_t n = 0; n < std::size(expected); ++n) {
      CHECK(directed_frames(n).size() == expected[n]);
      for (const Poset& p : directed_frames(n)) CHECK(p.greatest());
    }
    // Every directed-frame algebra validates WLEM.
    for (std::size_t n = 1; n <= 5; ++n) {
      for (const DistLattice& l : directed_frame_algebras(n)) {
        CHECK(is_valid(parse("~p | ~~p"), l, Semantics::Heyting).verdict == Verdict::Valid);
      }
    }
  }
}
