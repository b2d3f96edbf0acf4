#include <doctest.h>

#include <random>

#include "brouwer/corpus.hpp"
#include "brouwer/errors.hpp"
#include "brouwer/formula.hpp"
#include "oracles.hpp"

using namespace brouwer;

TEST_SUITE("formula") {
  TEST_CASE("precedence and associativity") {
    const Formula f = parse("p -> q -> p");
    REQUIRE(f.op() == Op::Imp);
    CHECK(f.rhs() == parse("q -> p"));
    CHECK(f == Formula::imp(Formula::var("p"), Formula::imp(Formula::var("q"), Formula::var("p"))));

    const Formula w = parse("~p | ~~p");
    REQUIRE(w.op() == Op::Or);
    CHECK(w.lhs() == Formula::neg(Formula::var("p")));
    CHECK(w.rhs() == Formula::neg(Formula::neg(Formula::var("p"))));

    CHECK(parse("p & q | r") == parse("(p & q) | r"));
    CHECK(parse("p | q -> r") == parse("(p | q) -> r"));
    CHECK(parse("~p & q") == parse("(~p) & q"));
    CHECK(parse("(p -> q) -> p") != parse("p -> q -> p"));
  }

  TEST_CASE("syntax errors carry positions") {
    try {
      parse("p & | q");
      FAIL("no error");
    } catch (const SyntaxError& e) {
      CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse(""), SyntaxError);
    CHECK_THROWS_AS(parse("(p"), SyntaxError);
    CHECK_THROWS_AS(parse("p q"), SyntaxError);
    CHECK_THROWS_AS(parse("p $ q"), SyntaxError);
  }

  TEST_CASE("Unicode aliases and constants") {
    CHECK(parse("¬p ∨ ¬¬p") == parse("~p | ~~p"));
    CHECK(parse("p ∧ q → ⊥") == parse("p & q -> bot"));
    CHECK(parse("⊤") == Formula::top());
    CHECK(parse("~p | ~~p").to_string(Notation::Unicode) == "¬p ∨ ¬¬p");
    CHECK_THROWS_AS(parse("p -> bot", ParseOptions{true}), SyntaxError);
    CHECK_NOTHROW(parse("p -> ~p", ParseOptions{true}));
  }

  TEST_CASE("printing round-trips") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 2000; ++i) {
      const Formula f = oracle::random_formula(rng, 5, {"p", "q", "r"}, true);
      CHECK(parse(f.to_string()) == f);
      CHECK(parse(f.to_string(Notation::Unicode)) == f);
    }
    for (const Formula& f : generate_formulas(3)) CHECK(parse(f.to_string()) == f);
  }

  TEST_CASE("queries") {
    const Formula f = parse("(q -> p) & ~q | q");
    CHECK(f.variables() == std::vector<std::string>{"p", "q"});
    CHECK(f.connectives() == 4);
    CHECK_FALSE(f.positive());
    CHECK(parse("(p -> q) | r").positive());
    CHECK_FALSE(parse("p | bot").positive());
    const auto subs = parse("p -> p").subformulas();
    CHECK(subs.size() == 2);
    CHECK(subs.back() == parse("p -> p"));
  }
}
