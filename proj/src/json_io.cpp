#include "brouwer/json_io.hpp"

#include <algorithm>

#include "brouwer/errors.hpp"

namespace brouwer {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> lattice_covers(const DistLattice& l) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (Elem a = 0; a < l.size(); ++a) {
    for (Elem b = 0; b < l.size(); ++b) {
      if (!l.lt(a, b)) continue;
      bool cover = true;
      for (Elem c = 0; c < l.size() && cover; ++c) {
        if (l.lt(a, c) && l.lt(c, b)) cover = false;
      }
      if (cover) out.emplace_back(a, b);
    }
  }
  return out;
}

Json labels_of(const Poset& p, const SubsetMask& m) {
  Json out = Json::array();
  m.for_each([&](std::size_t i) { out.push_back(p.label(i)); });
  return out;
}

std::size_t point(const Poset& p, const Json& label) {
  auto i = p.index_of(label.get<std::string>());
  if (!i) throw UnknownLabel(label.get<std::string>());
  return *i;
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

Json poset_to_json(const Poset& p) {
  Json leq = Json::array();
  for (auto [a, b] : p.covers()) leq.push_back({p.label(a), p.label(b)});
  return Json{{"points", p.labels()}, {"leq", leq}};
}

Poset poset_from_json(const Json& j) {
  return guarded("poset", [&] {
    std::vector<std::string> labels = j.at("points").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> pairs;
    if (j.contains("leq")) {
      for (const Json& pr : j.at("leq")) {
        if (!pr.is_array() || pr.size() != 2) throw Error("poset leq entries must be pairs");
        pairs.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
      }
    }
    return Poset::make(std::move(labels), pairs);
  });
}

Json lattice_to_json(const DistLattice& l) {
  Json leq = Json::array();
  for (auto [a, b] : lattice_covers(l)) leq.push_back({a, b});
  return Json{{"elements", l.labels()}, {"leq", leq}, {"bot", l.bot()}, {"top", l.top()},
              {"provenance", l.provenance()}};
}

DistLattice lattice_from_json(const Json& j, std::size_t max_elements) {
  return guarded("lattice", [&] {
    std::vector<std::string> labels = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const Json& pr : j.at("leq")) {
      if (!pr.is_array() || pr.size() != 2) throw Error("lattice leq entries must be pairs");
      auto index = [&](const Json& x) -> std::size_t {
        if (x.is_string()) {
          auto it = std::find(labels.begin(), labels.end(), x.get<std::string>());
          if (it == labels.end()) throw UnknownLabel(x.get<std::string>());
          return static_cast<std::size_t>(it - labels.begin());
        }
        const auto i = x.get<std::size_t>();
        if (i >= labels.size()) throw Error("lattice element index out of range");
        return i;
      };
      pairs.emplace_back(index(pr[0]), index(pr[1]));
    }
    DistLattice l = DistLattice::from_order(std::move(labels), pairs, max_elements);
    if (j.contains("provenance")) l = l.with_provenance(j.at("provenance").get<std::string>());
    return l;
  });
}

Json valuation_to_json(const Valuation& v, const DistLattice& l) {
  Json out = Json::object();
  for (const auto& [name, e] : v) out[name] = l.label(e);
  return out;
}

Json countermodel_to_json(const Countermodel& c) {
  Json out{{"family", c.family},
           {"level", c.level},
           {"description", c.describe()},
           {"semantics", to_string(c.semantics)},
           {"algebra_size", c.algebra.size()},
           {"valuation", valuation_to_json(c.valuation, c.algebra)}};
  if (c.poset) out["poset"] = poset_to_json(*c.poset);
  return out;
}

Json proof_to_json(const ProofNode& proof) {
  Json steps = Json::array();
  std::vector<const ProofNode*> stack{&proof};
  while (!stack.empty()) {
    const ProofNode* n = stack.back();
    stack.pop_back();
    Json after = Json::array();
    for (const ProofNode& p : n->premises) after.push_back(p.conclusion.to_string());
    steps.push_back({{"rule", n->rule}, {"sequent_before", n->conclusion.to_string()}, {"sequent_after", after}});
    for (auto it = n->premises.rbegin(); it != n->premises.rend(); ++it) stack.push_back(&*it);
  }
  return steps;
}

Json decision_to_json(const Decision& d, const Formula& f, bool with_proof, bool with_countermodel) {
  Json out{{"formula", f.to_string()},
           {"logic", to_string(d.logic)},
           {"verdict", to_string(d.verdict)},
           {"evidence", d.evidence}};
  if (d.proof) {
    out["proof_steps"] = proof_size(*d.proof);
    if (with_proof) out["proof"] = proof_to_json(*d.proof);
  }
  if (d.countermodel && with_countermodel) out["countermodel"] = countermodel_to_json(*d.countermodel);
  return out;
}

Json structure_to_json(const StructureReport& r, const DistLattice& l) {
  Json out{{"size", r.size},
           {"join_irreducibles", r.join_irreducibles},
           {"dd_like", r.dd_like},
           {"weakly_projective", r.weakly_projective},
           {"interval_embeddable", r.interval_embeddable},
           {"initial_segment", r.initial_segment},
           {"consistent", r.consistent}};
  out["dd_witness"] = r.dd_witness ? Json{l.label(r.dd_witness->a0), l.label(r.dd_witness->a1),
                                          l.label(r.dd_witness->a2), l.label(r.dd_witness->a3)}
                                   : Json(nullptr);
  out["wp_witness"] = r.wp_witness ? Json{{"a", l.label(r.wp_witness->a)},
                                          {"b", l.label(r.wp_witness->b)},
                                          {"meet", l.label(r.wp_witness->meet)}}
                                   : Json(nullptr);
  out["subinterval_check"] = r.subinterval_check ? Json(*r.subinterval_check) : Json(nullptr);
  return out;
}

Json mass_problem_to_json(const Poset& p, const SubsetMask& m) { return labels_of(p, m); }

Json construction_to_json(const Construction& c) {
  const Poset& p = c.master.order();
  Json levels = Json::array();
  for (const ConstructionLevel& l : c.levels) {
    Json points = Json::array();
    Json generics = Json::array();
    for (std::size_t i = 0; i < l.j_points.size(); ++i) {
      points.push_back(p.label(l.j_points[i]));
      Json gs = Json::array();
      for (std::size_t g : l.generics[i]) gs.push_back(p.label(g));
      generics.push_back(gs);
    }
    levels.push_back({{"algebra", lattice_to_json(l.algebra)},
                      {"j_points", points},
                      {"generics", generics},
                      {"sets",
                       {{"J", labels_of(p, l.j_image)},
                        {"J_hat", labels_of(p, l.j_hat)},
                        {"Z", labels_of(p, l.z)},
                        {"X", labels_of(p, l.x)},
                        {"Y", labels_of(p, l.y)},
                        {"X_hat", labels_of(p, l.x_hat)},
                        {"Y_hat", labels_of(p, l.y_hat)}}}});
  }
  return Json{{"policy", c.policy},
              {"generics_per_point", c.generics_per_point},
              {"master", poset_to_json(p)},
              {"top", p.label(c.top)},
              {"levels", levels},
              {"sets", {{"Z_hat", labels_of(p, c.z_hat)}, {"Y_hat", labels_of(p, c.y_hat)}}}};
}

Construction construction_from_json(const Json& j) {
  return guarded("construction", [&] {
    DegreePoset master(poset_from_json(j.at("master")));
    const Poset& p = master.order();
    std::vector<ConstructionLevel> levels;
    for (const Json& lj : j.at("levels")) {
      ConstructionLevel l{lattice_from_json(lj.at("algebra")), {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
      JoinIrreducibles ji = join_irreducibles(l.algebra);
      l.j_poset = ji.poset;
      l.j_elements = ji.elements;
      for (const Json& x : lj.at("j_points")) l.j_points.push_back(point(p, x));
      for (const Json& gs : lj.at("generics")) {
        std::vector<std::size_t> v;
        for (const Json& g : gs) v.push_back(point(p, g));
        l.generics.push_back(std::move(v));
      }
      if (l.j_points.size() != l.j_poset.size() || l.generics.size() != l.j_points.size()) {
        throw Error("construction level does not match the join-irreducibles of its algebra");
      }
      levels.push_back(std::move(l));
    }
    Construction c = assemble_construction(std::move(master), std::move(levels), point(p, j.at("top")),
                                           j.value("generics_per_point", std::size_t{1}));
    c.policy = j.value("policy", c.policy);
    return c;
  });
}

Json verify_report_to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) {
    checks.push_back({{"check", c.check}, {"level", c.level}, {"ok", c.ok}, {"detail", c.detail}});
  }
  return Json{{"ok", r.ok()},
              {"factor_size", r.factor_size},
              {"corpus_size", r.corpus_size},
              {"refuted_by_levels", r.refuted_by_levels},
              {"refuted_by_factor", r.refuted_by_factor},
              {"checks", checks}};
}

}  // namespace brouwer
