#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brouwer/poset.hpp"
#include "brouwer/subset_mask.hpp"

namespace brouwer {

/// Index of an element inside a DistLattice.
using Elem = std::uint16_t;

/// Default cap on lattice carriers. Operation tables are n x n, so this is a
/// memory bound as much as a time bound.
inline constexpr std::size_t kDefaultMaxElements = 4096;

namespace detail {
struct LatticeData;
}

/// A finite distributive lattice with dense join/meet tables.
///
/// The same object is read as a Brouwer algebra (brouwer_arrow: least c with
/// a v c >= b) and as a Heyting algebra (heyting_arrow: greatest c with
/// a ^ c <= b). Copies share the underlying immutable tables; arrow tables are
/// built once on first use, safely under concurrent access.
class DistLattice {
 public:
  /// The one-element lattice.
  DistLattice();

  /// Validates an explicitly given order: closure, antisymmetry, existence of
  /// all joins and meets, bounds, and distributivity (exhaustive up to 200
  /// elements, deterministic sampling above).
  static DistLattice from_order(std::vector<std::string> labels,
                                const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs,
                                std::size_t max_elements = kDefaultMaxElements);

  /// Trusted constructor for lattices that are distributive by construction.
  static DistLattice from_tables(std::size_t n, std::vector<Elem> join, std::vector<Elem> meet, Elem bot,
                                 Elem top, std::vector<std::string> labels, std::string provenance,
                                 std::vector<SubsetMask> masks = {});

  std::size_t size() const;
  Elem bot() const;
  Elem top() const;

  bool leq(Elem a, Elem b) const { return join_[index(a, b)] == b; }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  Elem join(Elem a, Elem b) const { return join_[index(a, b)]; }
  Elem meet(Elem a, Elem b) const { return meet_[index(a, b)]; }

  Elem brouwer_arrow(Elem a, Elem b) const { return brouwer_table()[index(a, b)]; }
  Elem heyting_arrow(Elem a, Elem b) const { return heyting_table()[index(a, b)]; }
  /// Brouwer negation a -> 1.
  Elem brouwer_neg(Elem a) const { return brouwer_arrow(a, top()); }
  /// Heyting negation a -> 0.
  Elem heyting_neg(Elem a) const { return heyting_arrow(a, bot()); }

  const std::string& label(Elem e) const;
  const std::vector<std::string>& labels() const;
  std::optional<Elem> find(std::string_view label) const;
  const std::string& provenance() const;
  /// For lattices of sets (downsets, degree intervals): the set behind each
  /// element. Empty otherwise.
  std::span<const SubsetMask> masks() const;

  std::span<const Elem> join_table() const { return {join_, n_ * n_}; }
  std::span<const Elem> meet_table() const { return {meet_, n_ * n_}; }
  std::span<const Elem> brouwer_table() const;
  std::span<const Elem> heyting_table() const;

  /// Nonzero join-irreducible elements, ascending.
  std::span<const Elem> join_irreducible_elements() const;
  /// Non-top meet-irreducible elements, ascending.
  std::span<const Elem> meet_irreducible_elements() const;

  DistLattice with_labels(std::vector<std::string> labels) const;
  DistLattice with_provenance(std::string provenance) const;

  /// Element-wise equality of the operation tables and bounds.
  friend bool operator==(const DistLattice& a, const DistLattice& b);

 private:
  explicit DistLattice(std::shared_ptr<const detail::LatticeData> d);
  std::size_t index(Elem a, Elem b) const { return static_cast<std::size_t>(a) * n_ + b; }

  std::shared_ptr<const detail::LatticeData> d_;
  // Cached from d_ for the hot paths.
  std::size_t n_ = 1;
  const Elem* join_ = nullptr;
  const Elem* meet_ = nullptr;
};

/// The n-element chain 0 < 1 < ... < n-1.
DistLattice chain_lattice(std::size_t n);

/// Downsets of `p` under inclusion (union/intersection as join/meet). Element
/// i's downset is masks()[i]; elements are ordered by size, then mask value.
DistLattice downset_lattice(const Poset& p, std::size_t max_elements = kDefaultMaxElements);

/// Up-sets of `p` under inclusion; this is the Heyting algebra of `p` read as
/// a Kripke frame. Equal to downset_lattice(p.opposite()).
DistLattice upset_lattice(const Poset& p, std::size_t max_elements = kDefaultMaxElements);

struct JoinIrreducibles {
  Poset poset;
  /// Lattice element behind each point of `poset`.
  std::vector<Elem> elements;
};

/// The poset of nonzero join-irreducible elements, with its index map.
JoinIrreducibles join_irreducibles(const DistLattice& l);

/// Order dual: same elements, order reversed, join/meet and bot/top swapped.
DistLattice dual(const DistLattice& l);

/// Cartesian product; element (a, b) has index a + |A| * b.
DistLattice product(const DistLattice& a, const DistLattice& b,
                    std::size_t max_elements = kDefaultMaxElements);

/// The k-fold power with flat tuple labels, first coordinate varying fastest.
DistLattice power(const DistLattice& a, std::size_t k, std::size_t max_elements = kDefaultMaxElements);

/// B stacked on top of A with 1_A identified with 0_B. A keeps its indices;
/// the non-bottom elements of B follow in B's order.
DistLattice stack_sum(const DistLattice& a, const DistLattice& b,
                      std::size_t max_elements = kDefaultMaxElements);

/// Elements x with a <= x <= b, ascending. Throws EmptyInterval if a </= b.
std::vector<Elem> interval_members(const DistLattice& l, Elem a, Elem b);

/// The sublattice [a, b]. Element i of the result is interval_members(l,a,b)[i].
DistLattice interval(const DistLattice& l, Elem a, Elem b);

/// A map between lattices given by its table.
struct LatticeMap {
  DistLattice source;
  DistLattice target;
  std::vector<Elem> table;

  Elem operator()(Elem x) const { return table[x]; }
  bool injective() const;
  bool surjective() const;
};

enum class QuotientKind { Filter, Ideal };

struct Quotient {
  DistLattice lattice;
  LatticeMap map;
};

/// Quotient by the principal filter of e (realized as L(<= e), x -> x ^ e) or
/// by the principal ideal of e (realized as L(>= e), x -> x v e).
Quotient principal_quotient(const DistLattice& l, Elem e, QuotientKind kind);

struct HomomorphismReport {
  bool ok = true;
  /// First failing operation: "bot", "top", "join", "meet" or "arrow".
  std::string failure;
  Elem a = 0;
  Elem b = 0;
};

/// Checks preservation of bounds, join and meet.
HomomorphismReport is_lattice_homomorphism(const LatticeMap& f);
/// Additionally checks preservation of the Brouwer arrow.
HomomorphismReport is_brouwer_homomorphism(const LatticeMap& f);

/// c -> c ^ z from [x, y] onto [x ^ z, y ^ z]. Requires x <= y.
LatticeMap meet_slice_map(const DistLattice& l, Elem x, Elem y, Elem z);

/// For u in [x ^ z, y ^ z]: the element x v (u ^ y) of [x, y], which
/// meet_slice_map sends to u.
Elem meet_slice_preimage(const DistLattice& l, Elem x, Elem y, Elem u);

/// The canonical map from downsets of J(L) to L, D -> join of D. Returned with
/// source downset_lattice(join_irreducibles(l).poset).
LatticeMap birkhoff_map(const DistLattice& l);

/// A lattice isomorphism A -> B, found through an order isomorphism of the
/// join-irreducible posets and then verified on every pair.
std::optional<std::vector<Elem>> lattice_isomorphic(const DistLattice& a, const DistLattice& b);

/// A triple (a, b, c) with a ^ (b v c) != (a ^ b) v (a ^ c), if any.
std::optional<std::array<Elem, 3>> distributivity_violation(const DistLattice& l);

}  // namespace brouwer
