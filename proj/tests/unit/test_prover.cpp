#include <doctest.h>

#include <functional>

#include "brouwer/corpus.hpp"
#include "brouwer/errors.hpp"
#include "brouwer/prover.hpp"
#include "brouwer/tower.hpp"

using namespace brouwer;

namespace {

Verdict ipc(const char* text) { return prove_ipc(parse(text)).verdict; }

}  // namespace

TEST_SUITE("prover") {
  TEST_CASE("textbook theorems and non-theorems") {
    for (const char* t : {"p -> p", "p -> q -> p", "(p -> q -> r) -> (p -> q) -> p -> r", "p & q -> q & p",
                          "p | q -> q | p", "~~(p | ~p)", "~~~p -> ~p", "(p -> q) -> ~q -> ~p", "bot -> p",
                          "top", "~(p & ~p)",
                          "(p | q -> r) -> (p -> r) & (q -> r)", "~p | ~~p -> ~~(~p | ~~p)"}) {
      CAPTURE(t);
      CHECK(ipc(t) == Verdict::Valid);
    }
    for (const char* t : {"p | ~p", "~p | ~~p", "((p -> q) -> p) -> p", "~~p -> p", "(p -> q) | (q -> p)",
                          "(~p -> q | r) -> (~p -> q) | (~p -> r)", "p", "bot", "(~~p -> p) -> p | ~p"}) {
      CAPTURE(t);
      CHECK(ipc(t) == Verdict::Invalid);
    }
  }

  TEST_CASE("proofs replay") {
    for (const Formula& f : generate_formulas(3)) {
      ProofSearch s = prove_ipc(f);
      if (s.verdict != Verdict::Valid) continue;
      CAPTURE(f.to_string());
      CHECK(check_proof(*s.proof, f) == std::nullopt);
    }
  }

  TEST_CASE("tampered proofs are rejected") {
    const Formula f = parse("p & q -> q & p");
    ProofSearch s = prove_ipc(f);
    REQUIRE(s.proof);
    CHECK_FALSE(check_proof(*s.proof, parse("p -> p")) == std::nullopt);

    ProofNode renamed = *s.proof;
    renamed.rule = "orR1";
    CHECK(check_proof(renamed, f).has_value());

    ProofNode dropped = *s.proof;
    dropped.premises.clear();
    CHECK(check_proof(dropped, f).has_value());

    // Swap the two premises of the andR step somewhere below the root.
    ProofNode swapped = *s.proof;
    std::function<bool(ProofNode&)> swap_first = [&](ProofNode& n) {
      if (n.rule == "andR") {
        std::swap(n.premises[0], n.premises[1]);
        return true;
      }
      for (ProofNode& p : n.premises) {
        if (swap_first(p)) return true;
      }
      return false;
    };
    REQUIRE(swap_first(swapped));
    CHECK(check_proof(swapped, f).has_value());
  }

  TEST_CASE("decide_ipc attaches evidence") {
    const Decision v = decide_ipc(parse("p -> p"));
    CHECK(v.verdict == Verdict::Valid);
    CHECK(v.proof);
    const Decision peirce = decide_ipc(parse("((p -> q) -> p) -> p"));
    REQUIRE(peirce.verdict == Verdict::Invalid);
    REQUIRE(peirce.countermodel);
    CHECK(peirce.countermodel->describe() == "I2");
    CHECK(peirce.countermodel->valuation.at("p") == 1);
    CHECK(peirce.countermodel->valuation.at("q") == 0);
    const Decision w = decide_ipc(parse("~p | ~~p"));
    REQUIRE(w.countermodel);
    CHECK(w.countermodel->describe() == "I3");
  }

  TEST_CASE("node budget gives unknown") {
    ProverOptions o;
    o.max_nodes = 3;
    CHECK(prove_ipc(parse("(p -> q -> r) -> (p -> q) -> p -> r"), o).verdict == Verdict::Unknown);
  }

  TEST_CASE("KC and CPC") {
    CHECK(decide_logic(parse("~p | ~~p"), Logic::KC).verdict == Verdict::Valid);
    const Decision lem = decide_logic(parse("p | ~p"), Logic::KC);
    REQUIRE(lem.verdict == Verdict::Invalid);
    REQUIRE(lem.countermodel);
    CHECK(lem.countermodel->family == "frame");
    CHECK(lem.countermodel->poset->greatest());
    CHECK(lem.countermodel->algebra.size() == 3);
    CHECK(decide_logic(parse("p | ~p"), Logic::CPC).verdict == Verdict::Valid);
    CHECK(decide_logic(parse("((p -> q) -> p) -> p"), Logic::CPC).verdict == Verdict::Valid);
    const Decision c = decide_logic(parse("p -> q"), Logic::CPC);
    CHECK(c.verdict == Verdict::Invalid);
    CHECK(c.countermodel->valuation.at("p") == 1);
    CHECK(decide_logic(parse("(p -> q) | (q -> p)"), Logic::KC).verdict == Verdict::Invalid);
    CHECK(decide_logic(parse("~~(p | ~p)"), Logic::KC).verdict == Verdict::Valid);
    CHECK(parse_logic("jan") == Logic::KC);
    CHECK_FALSE(parse_logic("S4"));
  }

  TEST_CASE("logics nest on a small corpus") {
    for (const Formula& f : generate_formulas(2)) {
      const Verdict i = decide_logic(f, Logic::IPC).verdict;
      const Verdict k = decide_logic(f, Logic::KC).verdict;
      const Verdict c = decide_logic(f, Logic::CPC).verdict;
      CAPTURE(f.to_string());
      if (i == Verdict::Valid) CHECK(k == Verdict::Valid);
      if (k == Verdict::Valid) CHECK(c == Verdict::Valid);
      CHECK(k != Verdict::Unknown);
    }
  }
}
