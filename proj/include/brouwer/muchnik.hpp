#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "brouwer/formula.hpp"
#include "brouwer/lattice.hpp"
#include "brouwer/poset.hpp"
#include "brouwer/semantics.hpp"

namespace brouwer {

/// A finite poset of simulated Turing degrees with a least element 0 (the
/// computable degree). When every pair has a least upper bound the join
/// table is kept.
class DegreePoset {
 public:
  /// Throws Error when `order` has no least element.
  explicit DegreePoset(Poset order);

  const Poset& order() const { return d_->order; }
  std::size_t size() const { return d_->order.size(); }
  std::size_t zero() const { return d_->zero; }
  const std::string& label(std::size_t i) const { return d_->order.label(i); }
  bool leq(std::size_t a, std::size_t b) const { return d_->order.leq(a, b); }

  bool has_joins() const { return !d_->join.empty(); }
  /// Least upper bound; throws NoJoinTable when the poset has none.
  std::size_t join(std::size_t a, std::size_t b) const;
  /// A pair without a least upper bound, if any.
  std::optional<std::pair<std::size_t, std::size_t>> join_failure() const { return d_->join_failure; }

  /// Same underlying order (shared or equal).
  friend bool operator==(const DegreePoset& a, const DegreePoset& b) {
    return a.d_ == b.d_ || a.d_->order == b.d_->order;
  }

 private:
  struct Data {
    Poset order;
    std::size_t zero = 0;
    std::vector<std::uint8_t> join;
    std::optional<std::pair<std::size_t, std::size_t>> join_failure;
  };
  std::shared_ptr<const Data> d_;
};

/// A finite set of simulated functions, i.e. a subset of the degree poset.
struct MassProblem {
  DegreePoset ambient;
  SubsetMask members;

  static MassProblem of(const DegreePoset& d, const std::vector<std::string>& labels);
  /// The mass problem with no solutions; the greatest degree.
  static MassProblem empty(const DegreePoset& d) { return {d, SubsetMask{}}; }
  static MassProblem everything(const DegreePoset& d) { return {d, d.order().all()}; }
};

/// The Muchnik degree of a mass problem: its up-closure A^w.
struct SimDegree {
  SubsetMask closure;
  friend bool operator==(const SimDegree& a, const SimDegree& b) { return a.closure == b.closure; }
};

/// A <=_w B: every member of B is above some member of A.
bool muchnik_leq(const MassProblem& a, const MassProblem& b);
SimDegree degree_of(const MassProblem& a);
/// Infimum: closure of the union.
SimDegree degree_meet(const MassProblem& a, const MassProblem& b);
/// Supremum: intersection of the closures.
SimDegree degree_join(const MassProblem& a, const MassProblem& b);

enum class ArrowMode {
  /// Formula mode when the degree poset has joins, lattice mode otherwise.
  Auto,
  /// {f : for all g in A some h in B has h <= g (+) f}. Needs joins.
  Formula,
  /// Brouwer arrow of the up-set lattice: {x : up(x) n cl(A) in cl(B)}.
  Lattice,
};

MassProblem muchnik_arrow(const MassProblem& a, const MassProblem& b, ArrowMode mode = ArrowMode::Auto);

/// {f}': the strict upper cone of f.
MassProblem solvability_successor(const DegreePoset& d, std::size_t f);

/// The interval [X, Y] of the degree lattice: up-sets U with
/// cl(Y) in U in cl(X), ordered by reverse inclusion, so cl(X) is the bottom.
/// Elements carry their up-sets as masks and are listed from the bottom
/// (largest set) up. Throws EmptyInterval unless X <=_w Y, and
/// SizeBudgetExceeded past `max_elements`.
DistLattice degree_interval(const MassProblem& x, const MassProblem& y,
                            std::size_t max_elements = kDefaultMaxElements);

/// All up-sets of a degree poset as a lattice (reverse inclusion).
DistLattice degree_lattice(const DegreePoset& d, std::size_t max_elements = kDefaultMaxElements);

/// One level of the master construction.
struct ConstructionLevel {
  /// B_n, read as a Brouwer algebra.
  DistLattice algebra;
  /// J(B_n) and the lattice elements behind its points.
  Poset j_poset;
  std::vector<Elem> j_elements;
  /// Degree of each J_n point in the master poset.
  std::vector<std::size_t> j_points;
  /// generics[i]: the points realizing Z_n^f for f = j_points[i].
  std::vector<std::vector<std::size_t>> generics;
  SubsetMask j_image, j_hat, z, x, y, x_hat, y_hat;
};

struct Construction {
  DegreePoset master;
  std::vector<ConstructionLevel> levels;
  std::size_t generics_per_point = 1;
  std::size_t top = 0;
  /// How joins across components are resolved.
  std::string policy = "collapse-to-top";
  SubsetMask z_hat, y_hat;

  MassProblem problem(const SubsetMask& m) const { return {master, m}; }
};

/// Lays out 0, one component per J(B_n), k generics above each f in J_n
/// and a global top. Throws PolicyUnsatisfiable when a level is dd-like or
/// the result is not an upper semilattice.
Construction build_master_poset(const std::vector<DistLattice>& levels, std::size_t generics_per_point = 1);

struct PropertyCheck {
  /// "(2)", "(3)" or "(4)".
  std::string property;
  bool ok = true;
  std::string witness;
};

/// Certifies properties (2)-(4): generics sit strictly above their f and are
/// incomparable with the covers of f; no J_n point is above Z_m (m != n);
/// f (+) h is strictly above g for f in J_m-hat, g in J_n-hat, h in J_n.
std::vector<PropertyCheck> check_properties(const Construction& c);

struct CheckResult {
  /// "a", "b", "c", "d" or a property name.
  std::string check;
  /// 1-based level, 0 for global checks.
  std::size_t level = 0;
  bool ok = true;
  std::string detail;
};

struct VerifyOptions {
  SearchOptions search;
  std::size_t max_elements = kDefaultMaxElements;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::size_t factor_size = 0;
  std::size_t corpus_size = 0;
  /// Corpus formulas refuted by some level, and how many of those the factor
  /// refutes as well.
  std::size_t refuted_by_levels = 0;
  std::size_t refuted_by_factor = 0;
  bool ok() const;
};

/// Checks per level: (a) [X_n, Y_n] iso B_n; (b) U -> U n Z-hat is an
/// isomorphism onto [X-hat_n, Y-hat_n]; (c) Y-hat v X-hat_n = Y-hat_n; and
/// (d) every corpus formula some B_n refutes (Brouwer reading) is refuted by
/// the factor [bottom, Y-hat] too.
VerifyReport verify_construction(const Construction& c, const std::vector<Formula>& corpus,
                                 const VerifyOptions& options = {});

/// Negative control: puts the first generic of the first point with an upper
/// cover below that cover. Returns nothing if no point has a cover.
std::optional<Construction> corrupt_generic_below_cover(const Construction& c);

/// A construction rebuilt from a master poset and level data, used when
/// reading JSON. Recomputes all named sets.
Construction assemble_construction(DegreePoset master, std::vector<ConstructionLevel> levels, std::size_t top,
                                   std::size_t generics_per_point);

}  // namespace brouwer
