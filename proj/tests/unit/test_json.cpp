#include <doctest.h>

#include "brouwer/corpus.hpp"
#include "brouwer/errors.hpp"
#include "brouwer/json_io.hpp"
#include "brouwer/prover.hpp"
#include "brouwer/tower.hpp"
#include "oracles.hpp"

using namespace brouwer;

TEST_SUITE("json") {
  TEST_CASE("poset round trip") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
      const Poset p = oracle::random_poset(rng, 1 + i % 7, 0.4);
      const Poset q = poset_from_json(poset_to_json(p));
      CHECK(q == p);
      CHECK(q.labels() == p.labels());
    }
    CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"leq": []})")), Error);
    CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"points": ["a"], "leq": [["a", "b"]]})")), UnknownLabel);
    CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"points": ["a", "b"], "leq": [["a", "b"], ["b", "a"]]})")),
                    CycleError);
  }

  TEST_CASE("lattice round trip") {
    for (int n = 1; n <= 3; ++n) {
      const DistLattice l = jaskowski_algebra(n).algebra;
      const Json j = lattice_to_json(l);
      const DistLattice back = lattice_from_json(j);
      CHECK(back.labels() == l.labels());
      CHECK(lattice_isomorphic(back, l));
      for (Elem a = 0; a < l.size(); ++a) {
        for (Elem b = 0; b < l.size(); ++b) CHECK(back.leq(a, b) == l.leq(a, b));
      }
    }
    const Json pentagon = Json::parse(
        R"({"elements": ["0", "a", "b", "c", "1"], "leq": [[0, 1], [1, 2], [2, 4], [0, 3], [3, 4]]})");
    CHECK_THROWS_AS(lattice_from_json(pentagon), NotALattice);
  }

  TEST_CASE("decisions") {
    const Formula f = parse("((p -> q) -> p) -> p");
    const Decision d = decide_logic(f, Logic::IPC);
    const Json j = decision_to_json(d, f, true, true);
    CHECK(j["verdict"] == "invalid");
    CHECK(j["logic"] == "IPC");
    CHECK(j["countermodel"]["description"] == "I2");
    CHECK(j["countermodel"]["valuation"]["p"] == "m");
    CHECK(j["countermodel"]["valuation"]["q"] == "0");

    const Formula g = parse("p -> p");
    const Json k = decision_to_json(decide_logic(g, Logic::IPC), g, true, true);
    CHECK(k["verdict"] == "valid");
    CHECK(k["proof"].is_array());
    CHECK(k["proof"][0]["rule"] == "impR");
  }

  TEST_CASE("construction round trip") {
    const Construction c =
        build_master_poset({jaskowski_algebra(1).dual_algebra, jaskowski_algebra(2).dual_algebra}, 1);
    const Json j = construction_to_json(c);
    const Construction back = construction_from_json(j);
    CHECK(construction_to_json(back) == j);
    CHECK(back.master == c.master);
    CHECK(back.y_hat == c.y_hat);
    CHECK(verify_report_to_json(verify_construction(back, generate_formulas(1))) ==
          verify_report_to_json(verify_construction(c, generate_formulas(1))));
  }
}
