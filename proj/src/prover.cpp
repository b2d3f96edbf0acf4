#include "brouwer/prover.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "brouwer/errors.hpp"
#include "brouwer/tower.hpp"

namespace brouwer {

namespace {

void normalize(std::vector<Formula>& gamma) {
  std::sort(gamma.begin(), gamma.end());
  gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
}

bool contains(const std::vector<Formula>& gamma, const Formula& f) {
  return std::binary_search(gamma.begin(), gamma.end(), f);
}

std::vector<Formula> without(const std::vector<Formula>& gamma, std::size_t i) {
  std::vector<Formula> rest = gamma;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
  return rest;
}

Sequent extend(std::vector<Formula> gamma, std::initializer_list<Formula> add, const Formula& c) {
  gamma.insert(gamma.end(), add.begin(), add.end());
  return Sequent(std::move(gamma), c);
}

// Premises of the left rule applied to principal formula gamma[i], or
// nothing if no left rule has that principal formula. `rule` receives the
// rule name. L->-> (nested implication) is handled separately.
std::optional<std::vector<Sequent>> left_rule(const Sequent& s, std::size_t i, std::string& rule) {
  const Formula& a = s.left[i];
  const std::vector<Formula> rest = without(s.left, i);
  switch (a.op()) {
    case Op::Top:
      rule = "topL";
      return std::vector<Sequent>{Sequent(rest, s.right)};
    case Op::And:
      rule = "andL";
      return std::vector<Sequent>{extend(rest, {a.lhs(), a.rhs()}, s.right)};
    case Op::Or:
      rule = "orL";
      return std::vector<Sequent>{extend(rest, {a.lhs()}, s.right), extend(rest, {a.rhs()}, s.right)};
    case Op::Imp: {
      const Formula& d = a.lhs();
      const Formula& b = a.rhs();
      switch (d.op()) {
        case Op::Var:
          if (!contains(rest, d)) return std::nullopt;
          rule = "impL_atom";
          return std::vector<Sequent>{extend(rest, {b}, s.right)};
        case Op::Top:
          rule = "impL_top";
          return std::vector<Sequent>{extend(rest, {b}, s.right)};
        case Op::Bot:
          rule = "impL_bot";
          return std::vector<Sequent>{Sequent(rest, s.right)};
        case Op::And:
          rule = "impL_and";
          return std::vector<Sequent>{
              extend(rest, {Formula::imp(d.lhs(), Formula::imp(d.rhs(), b))}, s.right)};
        case Op::Or:
          rule = "impL_or";
          return std::vector<Sequent>{extend(rest, {Formula::imp(d.lhs(), b), Formula::imp(d.rhs(), b)}, s.right)};
        default:
          return std::nullopt;
      }
    }
    default:
      return std::nullopt;
  }
}

// Premises of L->-> with principal formula gamma[i] = (d1 -> d2) -> b.
std::optional<std::vector<Sequent>> imp_imp_rule(const Sequent& s, std::size_t i) {
  const Formula& a = s.left[i];
  if (a.op() != Op::Imp || a.lhs().op() != Op::Imp) return std::nullopt;
  const Formula& d = a.lhs();
  const Formula& b = a.rhs();
  const std::vector<Formula> rest = without(s.left, i);
  return std::vector<Sequent>{extend(rest, {Formula::imp(d.rhs(), b)}, d), extend(rest, {b}, s.right)};
}

class Search {
 public:
  explicit Search(std::uint64_t max_nodes) : max_nodes_(max_nodes) {}

  std::optional<ProofNode> prove(const Sequent& s) {
    if (++nodes_ > max_nodes_) {
      exhausted_ = true;
      return std::nullopt;
    }
    if (failed_.count(s)) return std::nullopt;
    auto r = attempt(s);
    if (!r && !exhausted_) failed_.insert(s);
    return r;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

 private:
  std::optional<ProofNode> finish(const Sequent& s, std::string rule, const std::vector<Sequent>& premises) {
    ProofNode node{std::move(rule), s, {}};
    for (const Sequent& p : premises) {
      auto sub = prove(p);
      if (!sub) return std::nullopt;
      node.premises.push_back(std::move(*sub));
    }
    return node;
  }

  std::optional<ProofNode> attempt(const Sequent& s) {
    const Formula& c = s.right;
    if (contains(s.left, c)) return ProofNode{"id", s, {}};
    if (contains(s.left, Formula::bot())) return ProofNode{"botL", s, {}};
    if (c.op() == Op::Top) return ProofNode{"topR", s, {}};

    // Invertible rules: the first applicable one decides.
    for (std::size_t i = 0; i < s.left.size(); ++i) {
      std::string rule;
      if (auto premises = left_rule(s, i, rule)) return finish(s, rule, *premises);
    }
    if (c.op() == Op::And) return finish(s, "andR", {Sequent(s.left, c.lhs()), Sequent(s.left, c.rhs())});
    if (c.op() == Op::Imp) return finish(s, "impR", {extend(s.left, {c.lhs()}, c.rhs())});

    // Non-invertible choices.
    if (c.op() == Op::Or) {
      if (auto r = finish(s, "orR1", {Sequent(s.left, c.lhs())})) return r;
      if (exhausted_) return std::nullopt;
      if (auto r = finish(s, "orR2", {Sequent(s.left, c.rhs())})) return r;
      if (exhausted_) return std::nullopt;
    }
    for (std::size_t i = 0; i < s.left.size(); ++i) {
      if (auto premises = imp_imp_rule(s, i)) {
        if (auto r = finish(s, "impL_imp", *premises)) return r;
        if (exhausted_) return std::nullopt;
      }
    }
    return std::nullopt;
  }

  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::set<Sequent> failed_;
};

bool has_negation(const Formula& f) {
  for (const Formula& s : f.subformulas()) {
    if (s.op() == Op::Not) return true;
  }
  return false;
}

std::optional<std::string> check_node(const ProofNode& node) {
  const Sequent& s = node.conclusion;
  auto fail = [&](const std::string& why) {
    return std::optional<std::string>(node.rule + " at " + s.to_string() + ": " + why);
  };
  for (const Formula& f : s.left) {
    if (has_negation(f)) return fail("negation in antecedent");
  }
  if (has_negation(s.right)) return fail("negation in succedent");
  if (!std::is_sorted(s.left.begin(), s.left.end()) ||
      std::adjacent_find(s.left.begin(), s.left.end()) != s.left.end()) {
    return fail("antecedent not normalized");
  }

  std::vector<Sequent> got;
  for (const ProofNode& p : node.premises) got.push_back(p.conclusion);
  auto matches = [&](const std::vector<Sequent>& expected) { return expected == got; };
  const Formula& c = s.right;
  const std::string& r = node.rule;

  bool ok = false;
  if (r == "id") {
    ok = got.empty() && contains(s.left, c);
  } else if (r == "botL") {
    ok = got.empty() && contains(s.left, Formula::bot());
  } else if (r == "topR") {
    ok = got.empty() && c.op() == Op::Top;
  } else if (r == "andR") {
    ok = c.op() == Op::And && matches({Sequent(s.left, c.lhs()), Sequent(s.left, c.rhs())});
  } else if (r == "impR") {
    ok = c.op() == Op::Imp && matches({extend(s.left, {c.lhs()}, c.rhs())});
  } else if (r == "orR1" || r == "orR2") {
    ok = c.op() == Op::Or && matches({Sequent(s.left, r == "orR1" ? c.lhs() : c.rhs())});
  } else if (r == "impL_imp") {
    for (std::size_t i = 0; i < s.left.size() && !ok; ++i) {
      auto expected = imp_imp_rule(s, i);
      ok = expected && matches(*expected);
    }
  } else {
    for (std::size_t i = 0; i < s.left.size() && !ok; ++i) {
      std::string rule;
      auto expected = left_rule(s, i, rule);
      ok = expected && rule == r && matches(*expected);
    }
  }
  if (!ok) return fail("premises do not match the rule");
  for (const ProofNode& p : node.premises) {
    if (auto e = check_node(p)) return e;
  }
  return std::nullopt;
}

Formula conjunction(const std::vector<Formula>& fs) {
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::conj(acc, fs[i]);
  return acc;
}

}  // namespace

Sequent::Sequent(std::vector<Formula> gamma, Formula c) : left(std::move(gamma)), right(std::move(c)) {
  normalize(left);
}

std::string Sequent::to_string(Notation n) const {
  std::string out;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (i) out += ", ";
    out += left[i].to_string(n);
  }
  out += n == Notation::Unicode ? " ⇒ " : " => ";
  return out + right.to_string(n);
}

bool operator<(const Sequent& a, const Sequent& b) {
  if (a.right != b.right) return a.right < b.right;
  return a.left < b.left;
}

Formula without_negation(const Formula& f) {
  switch (f.op()) {
    case Op::Var:
    case Op::Bot:
    case Op::Top:
      return f;
    case Op::Not:
      return Formula::imp(without_negation(f.lhs()), Formula::bot());
    default:
      return Formula::binary(f.op(), without_negation(f.lhs()), without_negation(f.rhs()));
  }
}

ProofSearch prove_ipc(const Formula& f, const ProverOptions& options) {
  Search search(options.max_nodes);
  ProofSearch out;
  out.proof = search.prove(Sequent({}, without_negation(f)));
  out.nodes = search.nodes();
  if (out.proof) {
    out.verdict = Verdict::Valid;
  } else {
    out.verdict = search.exhausted() ? Verdict::Unknown : Verdict::Invalid;
  }
  return out;
}

std::optional<std::string> check_proof(const ProofNode& proof, const Formula& goal) {
  if (!(proof.conclusion == Sequent({}, without_negation(goal)))) return "root does not conclude the goal";
  return check_node(proof);
}

std::size_t proof_size(const ProofNode& proof) {
  std::size_t n = 1;
  for (const ProofNode& p : proof.premises) n += proof_size(p);
  return n;
}

const char* to_string(Logic l) {
  switch (l) {
    case Logic::IPC:
      return "IPC";
    case Logic::KC:
      return "KC";
    default:
      return "CPC";
  }
}

std::optional<Logic> parse_logic(std::string_view s) {
  std::string u(s);
  for (char& ch : u) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (u == "IPC") return Logic::IPC;
  if (u == "KC" || u == "JAN") return Logic::KC;
  if (u == "CPC") return Logic::CPC;
  return std::nullopt;
}

Decision decide_ipc(const Formula& f, const DecideOptions& options) {
  Decision d;
  d.logic = Logic::IPC;
  ProofSearch search = prove_ipc(f, options.prover);
  d.verdict = search.verdict;
  if (search.verdict == Verdict::Valid) {
    if (auto problem = check_proof(*search.proof, f)) throw std::logic_error("prover emitted a bad proof: " + *problem);
    d.proof = std::move(search.proof);
    d.evidence = "G4ip proof with " + std::to_string(proof_size(*d.proof)) + " steps";
  } else if (search.verdict == Verdict::Invalid) {
    CountermodelBudget budget = options.countermodels;
    budget.semantics = Semantics::Heyting;
    d.countermodel = find_countermodel(f, Family::TowerThenPosets, budget);
    if (!d.countermodel) {
      throw ValuationBudgetExceeded("not IPC-valid, but no countermodel found within budget");
    }
    d.evidence = "no G4ip proof (" + std::to_string(search.nodes) + " sequents); refuted in " +
                 d.countermodel->describe();
  } else {
    d.evidence = "proof search exceeded " + std::to_string(options.prover.max_nodes) + " sequents";
  }
  return d;
}

Decision decide_logic(const Formula& f, Logic logic, const DecideOptions& options) {
  if (logic == Logic::IPC) return decide_ipc(f, options);
  Decision d;
  d.logic = logic;

  if (logic == Logic::CPC) {
    const TowerLevel two = jaskowski_algebra(1);
    SearchOptions opts;
    opts.max_valuations = options.countermodels.max_valuations;
    opts.threads = 1;
    try {
      ValidityResult r = is_valid(f, two.algebra, Semantics::Heyting, opts);
      d.verdict = r.verdict;
      d.evidence = "truth table, " + std::to_string(r.valuations) + " rows checked";
      if (r.counterexample) {
        d.countermodel = Countermodel{"tower", 1, std::nullopt, two.algebra, *r.counterexample, Semantics::Heyting};
      }
    } catch (const ValuationBudgetExceeded& e) {
      d.verdict = Verdict::Unknown;
      d.evidence = e.what();
    }
    return d;
  }

  // KC, side (a): derive f from WLEM instances over its subformulas.
  std::vector<Formula> instances;
  for (const Formula& a : f.subformulas()) {
    instances.push_back(Formula::disj(Formula::neg(a), Formula::neg(Formula::neg(a))));
  }
  ProofSearch search = prove_ipc(Formula::imp(conjunction(instances), f), options.prover);
  if (search.verdict == Verdict::Valid) {
    d.verdict = Verdict::Valid;
    d.proof = std::move(search.proof);
    d.evidence = "G4ip proof from " + std::to_string(instances.size()) + " instances of ~a | ~~a";
    return d;
  }

  // Side (b): directed frames.
  CountermodelBudget budget = options.countermodels;
  budget.semantics = Semantics::Heyting;
  budget.max_poset_points = options.kc_max_frame;
  CountermodelSearch frames = search_countermodel(f, Family::DirectedFrames, budget);
  if (frames.countermodel) {
    d.verdict = Verdict::Invalid;
    d.countermodel = std::move(frames.countermodel);
    d.evidence = "refuted on a directed frame with " + std::to_string(d.countermodel->level) + " points";
    return d;
  }
  d.verdict = Verdict::Unknown;
  d.evidence = "no proof from subformula instances; no directed frame up to " +
               std::to_string(options.kc_max_frame) + " points refutes it";
  return d;
}

}  // namespace brouwer
