#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brouwer/formula.hpp"
#include "brouwer/semantics.hpp"

namespace brouwer {

/// Gamma => C with Gamma kept sorted and duplicate-free. Negation never
/// occurs: the prover works on formulas where ~A is rewritten to A -> bot.
struct Sequent {
  std::vector<Formula> left;
  Formula right;

  Sequent(std::vector<Formula> gamma, Formula c);
  std::string to_string(Notation n = Notation::Ascii) const;
  friend bool operator==(const Sequent& a, const Sequent& b) { return a.left == b.left && a.right == b.right; }
  friend bool operator<(const Sequent& a, const Sequent& b);
};

/// One rule application with its subproofs.
struct ProofNode {
  std::string rule;
  Sequent conclusion;
  std::vector<ProofNode> premises;
};

/// Replaces every ~A by A -> bot.
Formula without_negation(const Formula& f);

struct ProverOptions {
  /// Cap on visited sequents; exceeding it makes the answer unknown.
  std::uint64_t max_nodes = 20'000'000;
};

struct ProofSearch {
  Verdict verdict = Verdict::Unknown;
  std::optional<ProofNode> proof;
  std::uint64_t nodes = 0;
};

/// Contraction-free sequent calculus G4ip (Dyckhoff). Valid iff provable.
ProofSearch prove_ipc(const Formula& f, const ProverOptions& options = {});

/// Replays a proof tree. Returns the first problem found, or nothing if every
/// step is an instance of its rule and the root concludes => goal.
std::optional<std::string> check_proof(const ProofNode& proof, const Formula& goal);

/// Total number of rule applications in the tree.
std::size_t proof_size(const ProofNode& proof);

enum class Logic { IPC, KC, CPC };

const char* to_string(Logic l);
std::optional<Logic> parse_logic(std::string_view s);

struct DecideOptions {
  ProverOptions prover;
  /// Budget for the attached countermodel (IPC) search.
  CountermodelBudget countermodels;
  /// Largest directed frame tried on the KC refutation side.
  std::size_t kc_max_frame = 8;
};

struct Decision {
  Logic logic = Logic::IPC;
  Verdict verdict = Verdict::Unknown;
  std::optional<ProofNode> proof;
  std::optional<Countermodel> countermodel;
  /// What was checked: truth-table rows, frames tried, budget notes.
  std::string evidence;
};

/// valid: a checked G4ip proof is attached. invalid: a finite Heyting
/// countermodel is attached; throws ValuationBudgetExceeded if the
/// countermodel search runs out of budget.
Decision decide_ipc(const Formula& f, const DecideOptions& options = {});

/// IPC as decide_ipc; CPC by truth tables (the countermodel is the
/// two-element algebra); KC by proving (conjunction of ~a | ~~a over the
/// subformulas a) -> f, or by a directed-frame countermodel, else unknown.
Decision decide_logic(const Formula& f, Logic logic, const DecideOptions& options = {});

}  // namespace brouwer
