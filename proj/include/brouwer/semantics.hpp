#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brouwer/formula.hpp"
#include "brouwer/lattice.hpp"
#include "brouwer/poset.hpp"

namespace brouwer {

/// Brouwer: connective & is lattice join, | is meet, true means "= bottom".
/// Heyting: the usual reading, true means "= top".
enum class Semantics { Brouwer, Heyting };

enum class Verdict { Valid, Invalid, Unknown };

const char* to_string(Semantics s);
const char* to_string(Verdict v);

/// Variable name -> lattice element.
using Valuation = std::map<std::string, Elem>;

Elem eval_brouwer(const Formula& f, const DistLattice& l, const Valuation& v);
Elem eval_heyting(const Formula& f, const DistLattice& l, const Valuation& v);
Elem evaluate(const Formula& f, const DistLattice& l, const Valuation& v, Semantics s);

/// The element a formula must take everywhere to be true.
Elem designated(const DistLattice& l, Semantics s);

/// Resolves the thread count: 0 means available parallelism.
unsigned effective_threads(unsigned requested);

struct SearchOptions {
  std::uint64_t max_valuations = 100'000'000;
  /// 0 = available parallelism.
  unsigned threads = 0;
  /// Over budget: test `samples` random valuations instead of failing. A
  /// sampled search never reports Valid.
  bool sampled = false;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
};

struct ValidityResult {
  Verdict verdict = Verdict::Valid;
  /// Lexicographically least refuting valuation (variables sorted by name,
  /// the first one most significant).
  std::optional<Valuation> counterexample;
  std::uint64_t valuations = 0;
  bool sampled = false;
};

/// Exhaustive validity check. Throws ValuationBudgetExceeded when
/// |L|^#vars exceeds the budget and sampling is off.
ValidityResult is_valid(const Formula& f, const DistLattice& l, Semantics s, const SearchOptions& options = {});

/// Where find_countermodel looks, in order.
enum class Family {
  /// I_1, I_2, ... then downset algebras of posets of increasing size.
  TowerThenPosets,
  Tower,
  Posets,
  /// Up-set algebras of posets with a greatest element (directed frames).
  DirectedFrames,
};

struct CountermodelBudget {
  int max_tower_level = 4;
  std::size_t max_poset_points = 6;
  /// Cap on poset-based algebras tried.
  std::size_t max_posets = 100'000;
  std::size_t max_elements = kDefaultMaxElements;
  std::uint64_t max_valuations = 100'000'000;
  unsigned threads = 0;
  Semantics semantics = Semantics::Heyting;
};

struct Countermodel {
  /// "tower", "downsets" or "frame".
  std::string family;
  /// Tower level for "tower", point count of the poset otherwise.
  int level = 0;
  std::optional<Poset> poset;
  DistLattice algebra;
  Valuation valuation;
  Semantics semantics = Semantics::Heyting;

  /// e.g. "I3" or "downsets(poset#4 of size 3)".
  std::string describe() const;
};

struct CountermodelSearch {
  std::optional<Countermodel> countermodel;
  /// True when some member was skipped for budget reasons or the family was
  /// cut off; an absent countermodel then means "unknown", not "none exists".
  bool exhausted_budget = false;
  std::size_t algebras_tried = 0;
};

CountermodelSearch search_countermodel(const Formula& f, Family family, const CountermodelBudget& budget = {});

/// The first refuting family member, or nothing when the budget ran out.
std::optional<Countermodel> find_countermodel(const Formula& f, Family family = Family::TowerThenPosets,
                                              const CountermodelBudget& budget = {});

/// Cached downset algebras H(P), one per isomorphism class of n-point posets.
const std::vector<DistLattice>& downset_algebras(std::size_t n);

/// Cached up-set algebras of n-point posets with a greatest element.
const std::vector<DistLattice>& directed_frame_algebras(std::size_t n);
/// The frames behind directed_frame_algebras(n), same order.
const std::vector<Poset>& directed_frames(std::size_t n);

}  // namespace brouwer
