#include <doctest.h>

#include <sstream>

#include "brouwer/cli.hpp"
#include "brouwer/json_io.hpp"

using namespace brouwer;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "brouwer");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    CHECK(run({"decide", "--logic", "ipc", "p -> p"}).code == 0);
    CHECK(run({"decide", "--logic", "ipc", "p | ~p"}).code == 1);
    CHECK(run({"decide", "--logic", "kc", "~p | ~~p"}).code == 0);
    CHECK(run({"countermodel", "~p | ~~p"}).code == 1);
    CHECK(run({"parse", "p -> "}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--max-valuations", "10", "valid", "--in", "I(4)", "p | q | r -> p"}).code == 3);
  }

  TEST_CASE("countermodel json") {
    const Run r = run({"--format", "json", "countermodel", "~p | ~~p"});
    REQUIRE(r.code == 1);
    const Json j = Json::parse(r.out);
    CHECK(j["countermodel"]["description"] == "I3");
    CHECK(j["countermodel"]["valuation"]["p"] == "(m,0)");
    CHECK(r.err.empty());
  }

  TEST_CASE("thread count does not change output") {
    for (const std::vector<std::string> cmd :
         {std::vector<std::string>{"--format", "json", "countermodel", "~p | ~~p"},
          std::vector<std::string>{"--format", "json", "valid", "--in", "I(4)", "(p -> q) | (q -> p)"},
          std::vector<std::string>{"--format", "json", "decide", "--logic", "kc", "p | ~p", "--emit-countermodel"}}) {
      auto one = cmd, four = cmd;
      one.insert(one.begin(), {"--threads", "1"});
      four.insert(four.begin(), {"--threads", "4"});
      CHECK(run(one).out == run(four).out);
    }
  }

  TEST_CASE("expressions") {
    CHECK(cli::parse_poset_expr("diamond").size() == 4);
    CHECK(cli::parse_poset_expr("chain(3)").size() == 3);
    CHECK(cli::parse_poset_expr("poset(a<b<c, d)").size() == 4);
    CHECK(cli::parse_lattice_expr("I(3)").size() == 10);
    CHECK(cli::parse_lattice_expr("prod(chain(2), chain(3))").size() == 6);
    CHECK(cli::parse_lattice_expr("downsets(antichain(2))").size() == 4);
    CHECK(cli::parse_lattice_expr("interval(chain(5), 1, 3)").size() == 3);
    CHECK_THROWS(cli::parse_lattice_expr("nope(1)"));
  }

  TEST_CASE("tower and muchnik") {
    const Run sizes = run({"tower", "sizes"});
    CHECK(sizes.code == 0);
    CHECK(sizes.out.find("1001") != std::string::npos);
    CHECK(run({"muchnik", "leq", "diamond", "a", "b"}).code == 1);
    CHECK(run({"muchnik", "leq", "diamond", "0", "b"}).code == 0);
    const Run dot = run({"export-dot", "diamond"});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("digraph", 0) == 0);
  }
}
