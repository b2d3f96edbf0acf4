#include "brouwer/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "brouwer/corpus.hpp"
#include "brouwer/dot.hpp"
#include "brouwer/errors.hpp"
#include "brouwer/json_io.hpp"
#include "brouwer/muchnik.hpp"
#include "brouwer/prover.hpp"
#include "brouwer/semantics.hpp"
#include "brouwer/structure.hpp"
#include "brouwer/tower.hpp"

namespace brouwer::cli {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Splits at top-level commas, respecting (), {} and [].
std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

struct Call {
  std::string name;
  std::vector<std::string> args;
};

// "name(args)" with balanced parentheses, or nothing.
std::optional<Call> as_call(const std::string& text) {
  const std::string s = trim(text);
  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') return std::nullopt;
  const std::string name = trim(s.substr(0, open));
  if (name.empty() || name.find_first_of("/.\\ ") != std::string::npos) return std::nullopt;
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0 && i + 1 != s.size()) return std::nullopt;
  }
  return Call{name, split_args(s.substr(open + 1, s.size() - open - 2))};
}

std::size_t to_count(const std::string& s) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw Error("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw Error("expected a number, got '" + s + "'");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

void arity(const Call& c, std::size_t n) {
  if (c.args.size() != n) {
    throw Error(c.name + "(...) takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
  }
}

Elem element(const DistLattice& l, const std::string& label) {
  if (auto e = l.find(label)) return *e;
  throw UnknownLabel(label);
}

struct Settings {
  unsigned threads = 0;
  std::size_t max_elements = kDefaultMaxElements;
  std::uint64_t max_valuations = 100'000'000;
  std::size_t max_posets = 100'000;
  bool paper_signature = false;
  std::string format = "text";
};

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  return to_count(v);
}

Semantics semantics_of(const std::string& s) { return s == "brouwer" ? Semantics::Brouwer : Semantics::Heyting; }

Valuation parse_assignments(const std::vector<std::string>& items, const DistLattice& l) {
  Valuation v;
  for (const std::string& item : items) {
    for (const std::string& part : split_args(item)) {
      const auto eq = part.find('=');
      if (eq == std::string::npos) throw Error("assignment '" + part + "' is not of the form var=element");
      v[trim(part.substr(0, eq))] = element(l, trim(part.substr(eq + 1)));
    }
  }
  return v;
}

std::string valuation_text(const Valuation& v, const DistLattice& l) {
  std::string s;
  for (const auto& [name, e] : v) {
    if (!s.empty()) s += ", ";
    s += name + "=" + l.label(e);
  }
  return s;
}

SubsetMask members(const Poset& p, const std::string& spec) {
  SubsetMask m;
  std::string s = trim(spec);
  if (!s.empty() && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
  for (const std::string& label : split_args(s)) {
    if (label.empty()) continue;
    auto i = p.index_of(label);
    if (!i) throw UnknownLabel(label);
    m.set(*i);
  }
  return m;
}

std::string set_text(const Poset& p, const SubsetMask& m) {
  std::string s = "{";
  bool first = true;
  m.for_each([&](std::size_t i) {
    if (!first) s += ",";
    s += p.label(i);
    first = false;
  });
  return s + "}";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

Poset parse_poset_expr(const std::string& expr) {
  const std::string s = trim(expr);
  if (s == "diamond") return Poset::make({"0", "a", "b", "t"}, {{"0", "a"}, {"0", "b"}, {"a", "t"}, {"b", "t"}});
  if (auto c = as_call(s)) {
    if (c->name == "chain") {
      arity(*c, 1);
      return Poset::chain(to_count(c->args[0]));
    }
    if (c->name == "antichain") {
      arity(*c, 1);
      return Poset::antichain(to_count(c->args[0]));
    }
    if (c->name == "op") {
      arity(*c, 1);
      return parse_poset_expr(c->args[0]).opposite();
    }
    if (c->name == "poset") {
      std::vector<std::string> labels;
      std::vector<std::pair<std::string, std::string>> pairs;
      auto note = [&](const std::string& l) {
        if (l.empty()) throw Error("empty point label in poset(...)");
        if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
      };
      for (const std::string& item : c->args) {
        std::vector<std::string> chain;
        std::string cur;
        for (char ch : item) {
          if (ch == '<') {
            chain.push_back(trim(cur));
            cur.clear();
          } else {
            cur += ch;
          }
        }
        chain.push_back(trim(cur));
        for (const std::string& l : chain) note(l);
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) pairs.emplace_back(chain[i], chain[i + 1]);
      }
      return Poset::make(labels, pairs);
    }
    throw Error("unknown poset expression '" + c->name + "'");
  }
  return poset_from_json(read_json_file(s));
}

DistLattice parse_lattice_expr(const std::string& expr, std::size_t max_elements) {
  const std::string s = trim(expr);
  auto c = as_call(s);
  if (!c) {
    const Json j = read_json_file(s);
    if (j.contains("points")) return downset_lattice(poset_from_json(j), max_elements);
    return lattice_from_json(j, max_elements);
  }
  const std::string& n = c->name;
  if (n == "chain") {
    arity(*c, 1);
    return chain_lattice(to_count(c->args[0]));
  }
  if (n == "bool") {
    arity(*c, 1);
    return power(chain_lattice(2), to_count(c->args[0]), max_elements);
  }
  if (n == "I" || n == "B") {
    arity(*c, 1);
    const TowerLevel t = jaskowski_algebra(static_cast<int>(to_count(c->args[0])), max_elements);
    return n == "I" ? t.algebra : t.dual_algebra;
  }
  if (n == "dual") {
    arity(*c, 1);
    return dual(parse_lattice_expr(c->args[0], max_elements));
  }
  if (n == "prod") {
    arity(*c, 2);
    return product(parse_lattice_expr(c->args[0], max_elements), parse_lattice_expr(c->args[1], max_elements),
                   max_elements);
  }
  if (n == "sum") {
    arity(*c, 2);
    return stack_sum(parse_lattice_expr(c->args[0], max_elements), parse_lattice_expr(c->args[1], max_elements),
                     max_elements);
  }
  if (n == "interval") {
    arity(*c, 3);
    const DistLattice l = parse_lattice_expr(c->args[0], max_elements);
    return interval(l, element(l, c->args[1]), element(l, c->args[2]));
  }
  if (n == "downsets") {
    arity(*c, 1);
    return downset_lattice(parse_poset_expr(c->args[0]), max_elements);
  }
  if (n == "upsets") {
    arity(*c, 1);
    return upset_lattice(parse_poset_expr(c->args[0]), max_elements);
  }
  throw Error("unknown lattice expression '" + n + "'");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings st;
  CLI::App app{"Brouwer and Heyting algebras, the Jaskowski tower and a finite Muchnik lattice", "brouwer"};
  app.require_subcommand(1);
  app.fallthrough();
  try {
    st.max_elements = env_or("BROUWER_MAX_ELEMENTS", st.max_elements);
    st.max_valuations = env_or("BROUWER_MAX_VALUATIONS", st.max_valuations);
    st.max_posets = env_or("BROUWER_MAX_POSETS", st.max_posets);
  } catch (const Error& e) {
    err << "error: bad budget in environment: " << e.what() << "\n";
    return kUsage;
  }
  app.add_option("--threads", st.threads, "Worker threads (0 = available parallelism)");
  app.add_option("--max-elements", st.max_elements, "Largest algebra built")->check(CLI::PositiveNumber);
  app.add_option("--max-valuations", st.max_valuations, "Largest exhaustive valuation search")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-posets", st.max_posets, "Most poset algebras tried in countermodel searches")
      ->check(CLI::PositiveNumber);
  app.add_flag("--paper-signature", st.paper_signature, "Reject the constants bot and top");
  app.add_option("--format", st.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));

  std::string formula_text, algebra_expr, semantics = "heyting";
  std::vector<std::string> assignments;

  auto* parse_cmd = app.add_subcommand("parse", "Parse and print a formula");
  bool unicode = false;
  parse_cmd->add_option("formula", formula_text)->required();
  parse_cmd->add_flag("--unicode", unicode, "Print with Unicode connectives");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula under a valuation");
  eval_cmd->add_option("formula", formula_text)->required();
  eval_cmd->add_option("--in", algebra_expr, "Lattice expression")->required();
  eval_cmd->add_option("--assign", assignments, "var=element, comma separated")->required();
  eval_cmd->add_option("--semantics", semantics)->check(CLI::IsMember({"heyting", "brouwer"}));

  auto* valid_cmd = app.add_subcommand("valid", "Exhaustive validity check in one algebra");
  bool sampled = false;
  std::uint64_t samples = 1'000'000, seed = 1;
  valid_cmd->add_option("formula", formula_text)->required();
  valid_cmd->add_option("--in", algebra_expr, "Lattice expression")->required();
  valid_cmd->add_option("--semantics", semantics)->check(CLI::IsMember({"heyting", "brouwer"}));
  valid_cmd->add_flag("--sampled", sampled, "Sample valuations when over budget");
  valid_cmd->add_option("--samples", samples);
  valid_cmd->add_option("--seed", seed);

  auto* cm_cmd = app.add_subcommand("countermodel", "Search for a finite countermodel");
  std::string family = "tower+posets";
  int max_level = 4;
  std::size_t max_points = 6;
  cm_cmd->add_option("formula", formula_text)->required();
  cm_cmd->add_option("--family", family)->check(CLI::IsMember({"tower+posets", "tower", "posets", "frames"}));
  cm_cmd->add_option("--max-level", max_level)->check(CLI::Range(1, 8));
  cm_cmd->add_option("--max-points", max_points)->check(CLI::Range(1, 8));
  cm_cmd->add_option("--semantics", semantics)->check(CLI::IsMember({"heyting", "brouwer"}));

  auto* decide_cmd = app.add_subcommand("decide", "Decide membership in IPC, KC or CPC");
  std::string logic = "ipc";
  bool emit_proof = false, emit_countermodel = false;
  std::size_t kc_max_frame = 8;
  decide_cmd->add_option("formula", formula_text)->required();
  decide_cmd->add_option("--logic", logic)->check(CLI::IsMember({"ipc", "kc", "cpc", "IPC", "KC", "CPC"}));
  decide_cmd->add_flag("--emit-proof", emit_proof);
  decide_cmd->add_flag("--emit-countermodel", emit_countermodel);
  decide_cmd->add_option("--kc-max-frame", kc_max_frame)->check(CLI::Range(1, 8));

  auto* tower_cmd = app.add_subcommand("tower", "The Jaskowski algebras I_n and B_n");
  tower_cmd->require_subcommand(1);
  int level = 1, up_to = 5;
  bool full = false;
  auto* tower_build = tower_cmd->add_subcommand("build", "Build I_n and its dual");
  tower_build->add_option("n", level)->required()->check(CLI::Range(1, 16));
  tower_build->add_flag("--full", full, "Include the operation order of both algebras");
  auto* tower_sizes = tower_cmd->add_subcommand("sizes", "|I_n| from the recurrence");
  tower_sizes->add_option("--up-to", up_to)->check(CLI::Range(1, 16));
  auto* tower_wp = tower_cmd->add_subcommand("check-wp", "Weak projectivity of I_n and B_n");
  tower_wp->add_option("n", level)->required()->check(CLI::Range(1, 16));

  auto* analyze_cmd = app.add_subcommand("analyze", "Structural report for a lattice");
  analyze_cmd->add_option("lattice", algebra_expr)->required();

  auto* muchnik_cmd = app.add_subcommand("muchnik", "Finite Muchnik lattice simulation");
  muchnik_cmd->require_subcommand(1);
  std::string poset_expr, set_a, set_b, mode = "auto", output, construction_path, corpus_path;
  std::vector<std::string> level_exprs;
  std::size_t generics = 1, corpus_connectives = kDefaultCorpusConnectives;
  bool corrupt = false;
  auto* m_leq = muchnik_cmd->add_subcommand("leq", "A <=_w B");
  auto* m_arrow = muchnik_cmd->add_subcommand("arrow", "The arrow A -> B");
  auto* m_interval = muchnik_cmd->add_subcommand("interval", "The degree interval [X, Y]");
  for (auto* sub : {m_leq, m_arrow, m_interval}) {
    sub->add_option("poset", poset_expr, "Degree poset expression")->required();
    sub->add_option("A", set_a, "Comma-separated labels")->required();
    sub->add_option("B", set_b, "Comma-separated labels")->required();
  }
  m_arrow->add_option("--mode", mode)->check(CLI::IsMember({"auto", "formula", "lattice"}));
  auto* m_construct = muchnik_cmd->add_subcommand("construct", "Build the master degree poset");
  m_construct->add_option("--level", level_exprs, "Lattice expression for B_n (repeatable)")->required();
  m_construct->add_option("--generics", generics)->check(CLI::Range(1, 8));
  m_construct->add_option("-o,--output", output, "Write the construction here");
  auto* m_verify = muchnik_cmd->add_subcommand("verify", "Verify a construction");
  m_verify->add_option("construction", construction_path)->required();
  m_verify->add_option("--corpus", corpus_path, "Corpus file (default: generated)");
  m_verify->add_option("--max-connectives", corpus_connectives, "Bound for the generated corpus")
      ->check(CLI::Range(0, 7));
  m_verify->add_flag("--corrupt", corrupt, "Verify the negative control instead");

  auto* dot_cmd = app.add_subcommand("export-dot", "Hasse diagram in DOT");
  std::string dot_kind = "auto", dot_input;
  dot_cmd->add_option("input", dot_input, "Poset/lattice expression or JSON file")->required();
  dot_cmd->add_option("--kind", dot_kind)->check(CLI::IsMember({"auto", "poset", "lattice", "construction"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const bool json = st.format == "json";
  const ParseOptions popts{st.paper_signature};
  try {
    if (parse_cmd->parsed()) {
      const Formula f = parse(formula_text, popts);
      if (json) {
        print_json(out, {{"formula", f.to_string()},
                         {"unicode", f.to_string(Notation::Unicode)},
                         {"variables", f.variables()},
                         {"connectives", f.connectives()},
                         {"positive", f.positive()}});
      } else {
        out << f.to_string(unicode ? Notation::Unicode : Notation::Ascii) << "\n";
      }
      return kOk;
    }

    if (eval_cmd->parsed()) {
      const Formula f = parse(formula_text, popts);
      const DistLattice l = parse_lattice_expr(algebra_expr, st.max_elements);
      const Valuation v = parse_assignments(assignments, l);
      const Semantics s = semantics_of(semantics);
      const Elem value = evaluate(f, l, v, s);
      if (json) {
        print_json(out, {{"formula", f.to_string()},
                         {"algebra", algebra_expr},
                         {"semantics", to_string(s)},
                         {"valuation", valuation_to_json(v, l)},
                         {"value", l.label(value)},
                         {"designated", value == designated(l, s)}});
      } else {
        out << l.label(value) << "\n";
      }
      return kOk;
    }

    if (valid_cmd->parsed()) {
      const Formula f = parse(formula_text, popts);
      const DistLattice l = parse_lattice_expr(algebra_expr, st.max_elements);
      const Semantics s = semantics_of(semantics);
      SearchOptions so{st.max_valuations, st.threads, sampled, samples, seed};
      ValidityResult r;
      std::string note;
      try {
        r = is_valid(f, l, s, so);
      } catch (const ValuationBudgetExceeded& e) {
        r.verdict = Verdict::Unknown;
        note = e.what();
      }
      if (json) {
        Json j{{"formula", f.to_string()},
               {"algebra", algebra_expr},
               {"size", l.size()},
               {"semantics", to_string(s)},
               {"verdict", to_string(r.verdict)},
               {"valuations", r.valuations},
               {"sampled", r.sampled}};
        j["counterexample"] = r.counterexample ? valuation_to_json(*r.counterexample, l) : Json(nullptr);
        if (!note.empty()) j["note"] = note;
        print_json(out, j);
      } else {
        out << to_string(r.verdict);
        if (r.counterexample) out << ": " << valuation_text(*r.counterexample, l);
        if (!note.empty()) out << " (" << note << ")";
        out << "\n";
      }
      return r.verdict == Verdict::Valid ? kOk : r.verdict == Verdict::Invalid ? kInvalid : kUnknown;
    }

    if (cm_cmd->parsed()) {
      const Formula f = parse(formula_text, popts);
      CountermodelBudget b;
      b.max_tower_level = max_level;
      b.max_poset_points = max_points;
      b.max_posets = st.max_posets;
      b.max_elements = st.max_elements;
      b.max_valuations = st.max_valuations;
      b.threads = st.threads;
      b.semantics = semantics_of(semantics);
      const Family fam = family == "tower"    ? Family::Tower
                         : family == "posets" ? Family::Posets
                         : family == "frames" ? Family::DirectedFrames
                                              : Family::TowerThenPosets;
      CountermodelSearch r = search_countermodel(f, fam, b);
      // Every family member is a Heyting algebra (or the dual of one), so an
      // IPC theorem has no countermodel at all.
      const bool theorem = !r.countermodel && prove_ipc(f).verdict == Verdict::Valid;
      if (json) {
        Json j{{"formula", f.to_string()}, {"family", family}, {"algebras_tried", r.algebras_tried}};
        j["countermodel"] = r.countermodel ? countermodel_to_json(*r.countermodel) : Json(nullptr);
        j["status"] = r.countermodel ? "found" : theorem ? "none (IPC theorem)" : "budget exhausted";
        print_json(out, j);
      } else if (r.countermodel) {
        out << "refuted in " << r.countermodel->describe() << ": "
            << valuation_text(r.countermodel->valuation, r.countermodel->algebra) << "\n";
      } else {
        out << (theorem ? "no countermodel: IPC theorem" : "no countermodel within budget") << "\n";
      }
      return r.countermodel ? kInvalid : theorem ? kOk : kUnknown;
    }

    if (decide_cmd->parsed()) {
      const Formula f = parse(formula_text, popts);
      DecideOptions o;
      o.countermodels.max_elements = st.max_elements;
      o.countermodels.max_valuations = st.max_valuations;
      o.countermodels.max_posets = st.max_posets;
      o.countermodels.threads = st.threads;
      o.kc_max_frame = kc_max_frame;
      const Decision d = decide_logic(f, *parse_logic(logic), o);
      if (json) {
        print_json(out, decision_to_json(d, f, emit_proof, emit_countermodel));
      } else {
        out << to_string(d.verdict) << " (" << to_string(d.logic) << "): " << d.evidence << "\n";
        if (emit_proof && d.proof) {
          for (const Json& step : proof_to_json(*d.proof)) {
            out << "  " << step["rule"].get<std::string>() << ": " << step["sequent_before"].get<std::string>()
                << "\n";
          }
        }
        if (emit_countermodel && d.countermodel) {
          out << "  countermodel " << d.countermodel->describe() << ": "
              << valuation_text(d.countermodel->valuation, d.countermodel->algebra) << "\n";
        }
      }
      return d.verdict == Verdict::Valid ? kOk : d.verdict == Verdict::Invalid ? kInvalid : kUnknown;
    }

    if (tower_cmd->parsed()) {
      if (tower_sizes->parsed()) {
        Json sizes = Json::array();
        for (int n = 1; n <= up_to; ++n) {
          const std::uint64_t s = jaskowski_size(n);
          if (json) {
            sizes.push_back({{"n", n}, {"size", s}, {"saturated", s == UINT64_MAX}});
          } else {
            out << "I" << n << " " << (s == UINT64_MAX ? std::string(">= 2^64") : std::to_string(s)) << "\n";
          }
        }
        if (json) print_json(out, sizes);
        return kOk;
      }
      const TowerLevel t = jaskowski_algebra(level, st.max_elements);
      if (tower_build->parsed()) {
        if (json) {
          Json j{{"n", level},
                 {"size", t.algebra.size()},
                 {"join_irreducibles", t.algebra.join_irreducible_elements().size()},
                 {"dual_join_irreducibles", t.dual_algebra.join_irreducible_elements().size()}};
          if (full) {
            j["algebra"] = lattice_to_json(t.algebra);
            j["dual_algebra"] = lattice_to_json(t.dual_algebra);
          }
          print_json(out, j);
        } else {
          out << "I" << level << ": " << t.algebra.size() << " elements, "
              << t.algebra.join_irreducible_elements().size() << " join-irreducibles; B" << level << ": "
              << t.dual_algebra.join_irreducible_elements().size() << " join-irreducibles\n";
        }
        return kOk;
      }
      const bool wp_i = is_weakly_projective(t.algebra);
      const bool wp_b = is_weakly_projective(t.dual_algebra);
      const bool dd_i = is_dd_like(t.algebra);
      const bool dd_b = is_dd_like(t.dual_algebra);
      if (json) {
        print_json(out, {{"n", level},
                         {"I", {{"weakly_projective", wp_i}, {"dd_like", dd_i}}},
                         {"B", {{"weakly_projective", wp_b}, {"dd_like", dd_b}}}});
      } else {
        out << "I" << level << " weakly projective: " << (wp_i ? "yes" : "no") << ", dd-like: " << (dd_i ? "yes" : "no")
            << "\nB" << level << " weakly projective: " << (wp_b ? "yes" : "no")
            << ", dd-like: " << (dd_b ? "yes" : "no") << "\n";
      }
      return wp_i && wp_b ? kOk : kInvalid;
    }

    if (analyze_cmd->parsed()) {
      const DistLattice l = parse_lattice_expr(algebra_expr, st.max_elements);
      const StructureReport r = analyze(l);
      if (json) {
        print_json(out, structure_to_json(r, l));
      } else {
        const Json j = structure_to_json(r, l);
        for (const auto& [k, v] : j.items()) out << k << ": " << v.dump() << "\n";
      }
      return kOk;
    }

    if (muchnik_cmd->parsed()) {
      if (m_leq->parsed() || m_arrow->parsed() || m_interval->parsed()) {
        const DegreePoset d(parse_poset_expr(poset_expr));
        const MassProblem a{d, members(d.order(), set_a)};
        const MassProblem b{d, members(d.order(), set_b)};
        if (m_leq->parsed()) {
          const bool r = muchnik_leq(a, b);
          if (json) {
            print_json(out, {{"A", mass_problem_to_json(d.order(), a.members)},
                             {"B", mass_problem_to_json(d.order(), b.members)},
                             {"leq", r}});
          } else {
            out << (r ? "true" : "false") << "\n";
          }
          return r ? kOk : kInvalid;
        }
        if (m_arrow->parsed()) {
          const ArrowMode am = mode == "formula" ? ArrowMode::Formula
                               : mode == "lattice" ? ArrowMode::Lattice
                                                   : ArrowMode::Auto;
          const MassProblem r = muchnik_arrow(a, b, am);
          if (json) {
            print_json(out, {{"members", mass_problem_to_json(d.order(), r.members)},
                             {"degree", mass_problem_to_json(d.order(), degree_of(r).closure)}});
          } else {
            out << set_text(d.order(), r.members) << "\n";
          }
          return kOk;
        }
        const DistLattice l = degree_interval(a, b, st.max_elements);
        if (json) {
          print_json(out, lattice_to_json(l));
        } else if (st.format == "dot") {
          out << lattice_to_dot(l, "interval");
        } else {
          out << l.size() << " elements\n";
          for (Elem e = 0; e < l.size(); ++e) out << "  " << l.label(e) << "\n";
        }
        return kOk;
      }
      if (m_construct->parsed()) {
        std::vector<DistLattice> levels;
        for (const std::string& e : level_exprs) levels.push_back(parse_lattice_expr(e, st.max_elements));
        const Construction c = build_master_poset(levels, generics);
        const std::string text = construction_to_json(c).dump(2) + "\n";
        if (!output.empty()) {
          std::ofstream f(output);
          if (!f) throw Error("cannot write " + output);
          f << text;
          out << "wrote " << output << " (" << c.master.size() << " degrees)\n";
        } else {
          out << text;
        }
        return kOk;
      }
      if (m_verify->parsed()) {
        Construction c = construction_from_json(read_json_file(construction_path));
        if (corrupt) {
          auto bad = corrupt_generic_below_cover(c);
          if (!bad) throw Error("no point of the construction has an upper cover to corrupt");
          c = std::move(*bad);
        }
        const std::vector<Formula> corpus =
            corpus_path.empty() ? default_corpus(corpus_connectives) : load_corpus(corpus_path, popts);
        VerifyOptions vo;
        vo.search.max_valuations = st.max_valuations;
        vo.search.threads = st.threads;
        vo.max_elements = st.max_elements;
        const VerifyReport r = verify_construction(c, corpus, vo);
        if (json) {
          print_json(out, verify_report_to_json(r));
        } else {
          for (const CheckResult& ch : r.checks) {
            out << (ch.ok ? "PASS " : "FAIL ") << ch.check;
            if (ch.level) out << " level " << ch.level;
            if (!ch.detail.empty()) out << ": " << ch.detail;
            out << "\n";
          }
        }
        return r.ok() ? kOk : kInvalid;
      }
    }

    if (dot_cmd->parsed()) {
      std::string kind = dot_kind;
      Json j;
      if (!as_call(dot_input) && dot_input != "diamond") {
        j = read_json_file(dot_input);
        if (kind == "auto") kind = j.contains("master") ? "construction" : j.contains("points") ? "poset" : "lattice";
      } else if (kind == "auto") {
        const auto c = as_call(dot_input);
        const bool poset_like = dot_input == "diamond" || (c && (c->name == "poset" || c->name == "antichain" ||
                                                                  c->name == "op"));
        kind = poset_like ? "poset" : "lattice";
      }
      if (kind == "construction") {
        out << construction_to_dot(construction_from_json(j));
      } else if (kind == "poset") {
        out << poset_to_dot(j.is_null() ? parse_poset_expr(dot_input) : poset_from_json(j));
      } else {
        out << lattice_to_dot(j.is_null() ? parse_lattice_expr(dot_input, st.max_elements)
                                          : lattice_from_json(j, st.max_elements));
      }
      return kOk;
    }
  } catch (const ValuationBudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kUnknown;
  } catch (const SizeBudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kUnknown;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace brouwer::cli
