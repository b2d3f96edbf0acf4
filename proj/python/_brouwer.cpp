#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "brouwer/cli.hpp"
#include "brouwer/corpus.hpp"
#include "brouwer/errors.hpp"
#include "brouwer/json_io.hpp"
#include "brouwer/muchnik.hpp"
#include "brouwer/prover.hpp"
#include "brouwer/semantics.hpp"
#include "brouwer/structure.hpp"
#include "brouwer/tower.hpp"

namespace py = pybind11;
using namespace brouwer;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string dump(const Json& j) { return j.dump(); }

Semantics semantics_of(const std::string& s) {
  if (s == "heyting") return Semantics::Heyting;
  if (s == "brouwer") return Semantics::Brouwer;
  throw py::value_error("semantics must be 'heyting' or 'brouwer'");
}

Logic logic_of(const std::string& s) {
  auto l = parse_logic(s);
  if (!l) throw py::value_error("unknown logic '" + s + "'");
  return *l;
}

Family family_of(const std::string& s) {
  if (s == "tower+posets") return Family::TowerThenPosets;
  if (s == "tower") return Family::Tower;
  if (s == "posets") return Family::Posets;
  if (s == "frames") return Family::DirectedFrames;
  throw py::value_error("unknown family '" + s + "'");
}

Valuation valuation_of(const DistLattice& l, const std::map<std::string, std::string>& labels) {
  Valuation v;
  for (const auto& [var, label] : labels) {
    auto e = l.find(label);
    if (!e) throw UnknownLabel(label);
    v[var] = *e;
  }
  return v;
}

MassProblem problem_of(const DegreePoset& d, const std::vector<std::string>& labels) {
  return MassProblem::of(d, labels);
}

std::vector<std::string> labels_of(const Poset& p, const SubsetMask& m) {
  std::vector<std::string> out;
  m.for_each([&](std::size_t i) { out.push_back(p.label(i)); });
  return out;
}

}  // namespace

PYBIND11_MODULE(_brouwer, m) {
  m.doc() = "Finite Brouwer and Heyting algebras, intermediate logics and simulated Muchnik degrees";

  py::register_exception<Error>(m, "BrouwerError", PyExc_ValueError);
  py::register_exception<ValuationBudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Formula>(m, "Formula")
      .def("variables", &Formula::variables)
      .def_property_readonly("connectives", &Formula::connectives)
      .def("positive", &Formula::positive)
      .def(
          "to_string", [](const Formula& f, bool unicode) { return f.to_string(unicode ? Notation::Unicode : Notation::Ascii); },
          py::arg("unicode") = false)
      .def("__str__", [](const Formula& f) { return f.to_string(); })
      .def("__repr__", [](const Formula& f) { return "<Formula " + f.to_string() + ">"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__lt__", [](const Formula& a, const Formula& b) { return a < b; })
      .def("__hash__", [](const Formula& f) { return std::hash<std::string>{}(f.to_string()); });

  m.def(
      "parse",
      [](const std::string& text, bool paper_signature) {
        ParseOptions o;
        o.paper_signature = paper_signature;
        return parse(text, o);
      },
      py::arg("text"), py::arg("paper_signature") = false);
  m.def("generate_formulas", [](std::size_t n) { return generate_formulas(n); }, py::arg("max_connectives"));
  m.def("default_corpus", &default_corpus, py::arg("max_connectives") = kDefaultCorpusConnectives);

  py::class_<Poset>(m, "Poset")
      .def(py::init(&Poset::make), py::arg("points"), py::arg("leq") = std::vector<std::pair<std::string, std::string>>{})
      .def_static("chain", &Poset::chain)
      .def_static("antichain", &Poset::antichain)
      .def("__len__", &Poset::size)
      .def_property_readonly("labels", &Poset::labels)
      .def("leq",
           [](const Poset& p, const std::string& a, const std::string& b) {
             auto i = p.index_of(a), j = p.index_of(b);
             if (!i) throw UnknownLabel(a);
             if (!j) throw UnknownLabel(b);
             return p.leq(*i, *j);
           })
      .def("covers",
           [](const Poset& p) {
             std::vector<std::pair<std::string, std::string>> out;
             for (auto [a, b] : p.covers()) out.emplace_back(p.label(a), p.label(b));
             return out;
           })
      .def("to_json", [](const Poset& p) { return dump(poset_to_json(p)); })
      .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; });
  m.def("posets_of_size", &posets_of_size, py::arg("n"), py::return_value_policy::copy);

  py::class_<DistLattice>(m, "Lattice")
      .def("__len__", &DistLattice::size)
      .def_property_readonly("labels", &DistLattice::labels)
      .def_property_readonly("bot", [](const DistLattice& l) { return l.label(l.bot()); })
      .def_property_readonly("top", [](const DistLattice& l) { return l.label(l.top()); })
      .def_property_readonly("provenance", &DistLattice::provenance)
      .def("index", [](const DistLattice& l, const std::string& label) {
        auto e = l.find(label);
        if (!e) throw UnknownLabel(label);
        return *e;
      })
      .def("leq", [](const DistLattice& l, Elem a, Elem b) { return l.leq(a, b); })
      .def("join", [](const DistLattice& l, Elem a, Elem b) { return l.join(a, b); })
      .def("meet", [](const DistLattice& l, Elem a, Elem b) { return l.meet(a, b); })
      .def("brouwer_arrow", [](const DistLattice& l, Elem a, Elem b) { return l.brouwer_arrow(a, b); })
      .def("heyting_arrow", [](const DistLattice& l, Elem a, Elem b) { return l.heyting_arrow(a, b); })
      .def("join_irreducibles", [](const DistLattice& l) { return join_irreducibles(l).poset; })
      .def("to_json", [](const DistLattice& l) { return dump(lattice_to_json(l)); })
      .def("__eq__", [](const DistLattice& a, const DistLattice& b) { return a == b; });

  m.def("lattice", &cli::parse_lattice_expr, py::arg("expr"), py::arg("max_elements") = kDefaultMaxElements,
        "Builds a lattice from an expression such as 'I(3)' or 'downsets(diamond)'.");
  m.def("chain_lattice", &chain_lattice);
  m.def("downset_lattice", [](const Poset& p) { return downset_lattice(p); });
  m.def("upset_lattice", [](const Poset& p) { return upset_lattice(p); });
  m.def("dual", &dual);
  m.def("product", [](const DistLattice& a, const DistLattice& b) { return product(a, b); });
  m.def("stack_sum", [](const DistLattice& a, const DistLattice& b) { return stack_sum(a, b); });
  m.def("interval", [](const DistLattice& l, Elem a, Elem b) { return interval(l, a, b); });
  m.def("isomorphic", [](const DistLattice& a, const DistLattice& b) { return lattice_isomorphic(a, b).has_value(); });

  m.def("jaskowski_size", &jaskowski_size);
  m.def(
      "jaskowski_algebra",
      [](int n, bool dual_algebra) {
        const TowerLevel t = jaskowski_algebra(n);
        return dual_algebra ? t.dual_algebra : t.algebra;
      },
      py::arg("n"), py::arg("dual") = false);

  m.def(
      "evaluate",
      [](const Formula& f, const DistLattice& l, const std::map<std::string, std::string>& valuation,
         const std::string& semantics) {
        return l.label(evaluate(f, l, valuation_of(l, valuation), semantics_of(semantics)));
      },
      py::arg("formula"), py::arg("lattice"), py::arg("valuation"), py::arg("semantics") = "heyting");

  m.def(
      "is_valid_json",
      [](const Formula& f, const DistLattice& l, const std::string& semantics, unsigned threads) {
        SearchOptions o;
        o.threads = threads;
        ValidityResult r;
        {
          py::gil_scoped_release release;
          r = is_valid(f, l, semantics_of(semantics), o);
        }
        Json j{{"verdict", to_string(r.verdict)}, {"valuations", r.valuations}};
        if (r.counterexample) j["counterexample"] = valuation_to_json(*r.counterexample, l);
        return dump(j);
      },
      py::arg("formula"), py::arg("lattice"), py::arg("semantics") = "heyting", py::arg("threads") = 0);

  m.def(
      "countermodel_json",
      [](const Formula& f, const std::string& family, const std::string& semantics, unsigned threads) {
        CountermodelBudget b;
        b.threads = threads;
        b.semantics = semantics_of(semantics);
        CountermodelSearch s;
        {
          py::gil_scoped_release release;
          s = search_countermodel(f, family_of(family), b);
        }
        Json j{{"found", s.countermodel.has_value()}, {"exhausted_budget", s.exhausted_budget},
               {"algebras_tried", s.algebras_tried}};
        if (s.countermodel) j["countermodel"] = countermodel_to_json(*s.countermodel);
        return dump(j);
      },
      py::arg("formula"), py::arg("family") = "tower+posets", py::arg("semantics") = "heyting",
      py::arg("threads") = 0);

  m.def(
      "decide_json",
      [](const Formula& f, const std::string& logic, bool proof, bool countermodel) {
        Decision d;
        {
          py::gil_scoped_release release;
          d = decide_logic(f, logic_of(logic));
        }
        return dump(decision_to_json(d, f, proof, countermodel));
      },
      py::arg("formula"), py::arg("logic") = "ipc", py::arg("proof") = false, py::arg("countermodel") = true);

  m.def("is_dd_like", &is_dd_like);
  m.def("is_weakly_projective", &is_weakly_projective);
  m.def("analyze_json", [](const DistLattice& l) { return dump(structure_to_json(analyze(l), l)); });

  py::class_<DegreePoset>(m, "DegreePoset")
      .def(py::init<Poset>())
      .def("__len__", &DegreePoset::size)
      .def_property_readonly("order", &DegreePoset::order)
      .def_property_readonly("has_joins", &DegreePoset::has_joins);
  m.def("muchnik_leq", [](const DegreePoset& d, const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return muchnik_leq(problem_of(d, a), problem_of(d, b));
  });
  m.def(
      "muchnik_arrow",
      [](const DegreePoset& d, const std::vector<std::string>& a, const std::vector<std::string>& b,
         const std::string& mode) {
        ArrowMode am = ArrowMode::Auto;
        if (mode == "formula") am = ArrowMode::Formula;
        else if (mode == "lattice") am = ArrowMode::Lattice;
        else if (mode != "auto") throw py::value_error("mode must be auto, formula or lattice");
        return labels_of(d.order(), muchnik_arrow(problem_of(d, a), problem_of(d, b), am).members);
      },
      py::arg("degrees"), py::arg("a"), py::arg("b"), py::arg("mode") = "auto");
  m.def("degree_closure", [](const DegreePoset& d, const std::vector<std::string>& a) {
    return labels_of(d.order(), degree_of(problem_of(d, a)).closure);
  });
  m.def("degree_interval", [](const DegreePoset& d, const std::vector<std::string>& x,
                              const std::vector<std::string>& y) {
    return degree_interval(problem_of(d, x), problem_of(d, y));
  });

  m.def(
      "construct_json",
      [](const std::vector<DistLattice>& levels, std::size_t generics) {
        return dump(construction_to_json(build_master_poset(levels, generics)));
      },
      py::arg("levels"), py::arg("generics_per_point") = 1);
  m.def(
      "verify_json",
      [](const std::string& construction, std::size_t max_connectives, unsigned threads) {
        const Construction c = construction_from_json(Json::parse(construction));
        VerifyOptions o;
        o.search.threads = threads;
        VerifyReport r;
        {
          py::gil_scoped_release release;
          r = verify_construction(c, default_corpus(max_connectives), o);
        }
        return dump(verify_report_to_json(r));
      },
      py::arg("construction"), py::arg("max_connectives") = 2, py::arg("threads") = 0);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> full{"brouwer"};
        full.insert(full.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : full) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
