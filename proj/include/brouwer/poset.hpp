#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brouwer/subset_mask.hpp"

namespace brouwer {

/// Default cap on the number of downsets/up-sets enumerated from one poset.
inline constexpr std::size_t kDefaultDownsetCap = std::size_t{1} << 20;

/// A finite partial order on at most kMaxPoints labelled points.
///
/// The order is stored as the down-closure and up-closure of every point, so
/// `leq` is a single bit test. Instances are immutable once built.
class Poset {
 public:
  Poset() = default;

  /// Builds the reflexive-transitive closure of `pairs` (each pair reads
  /// first <= second). Throws CycleError if the closure is not antisymmetric
  /// and UnknownLabel for labels not in `labels`.
  static Poset make(std::vector<std::string> labels,
                    const std::vector<std::pair<std::string, std::string>>& pairs);

  /// Same as make() over point indices; labels default to "0", "1", ...
  static Poset from_indices(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                            std::vector<std::string> labels = {});

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool leq(std::size_t a, std::size_t b) const { return down_[b].test(a); }
  bool lt(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  /// Principal downset and up-set, both containing the point itself.
  const SubsetMask& down(std::size_t i) const { return down_[i]; }
  const SubsetMask& up(std::size_t i) const { return up_[i]; }
  SubsetMask all() const { return SubsetMask::first(size()); }

  /// Covering pairs (a, b), a < b with nothing strictly between; sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  /// Points covering i.
  std::vector<std::size_t> upper_covers(std::size_t i) const;

  /// Length of the longest chain ending at i (minimal points have height 0).
  std::size_t height(std::size_t i) const;

  /// The induced subposet on `subset`, points kept in ascending index order.
  Poset induced(const SubsetMask& subset) const;
  Poset opposite() const;

  bool is_downset(const SubsetMask& s) const;
  bool is_upset(const SubsetMask& s) const;

  std::optional<std::size_t> least() const;
  std::optional<std::size_t> greatest() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.down_ == b.down_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<SubsetMask> down_;
  std::vector<SubsetMask> up_;
};

/// Smallest up-closed superset of `a`.
SubsetMask up_closure(const Poset& p, const SubsetMask& a);
SubsetMask down_closure(const Poset& p, const SubsetMask& a);

/// Elements of `a` with no strictly larger element in `a`.
SubsetMask maximal_elements(const Poset& p, const SubsetMask& a);
SubsetMask minimal_elements(const Poset& p, const SubsetMask& a);

/// All downsets of `p`, ordered by size and then by mask value (so the empty
/// set comes first and the whole poset last). Throws SizeBudgetExceeded when
/// more than `cap` exist.
std::vector<SubsetMask> enumerate_downsets(const Poset& p, std::size_t cap = kDefaultDownsetCap);

/// All subsets U of `region` that are up-closed in the order induced on
/// `region`, in the same order as enumerate_downsets.
std::vector<SubsetMask> enumerate_upsets(const Poset& p, const SubsetMask& region,
                                         std::size_t cap = kDefaultDownsetCap);

/// An order isomorphism from `p` onto `q` (as a map of point indices), or
/// nothing. The search is deterministic for fixed inputs.
std::optional<std::vector<std::size_t>> poset_isomorphic(const Poset& p, const Poset& q);

/// A string that is equal for two posets iff they are isomorphic. Intended for
/// small posets (brute force within invariant classes).
std::string canonical_code(const Poset& p);

/// One representative of every isomorphism class of posets with exactly `n`
/// points, in a deterministic order. Results are cached; n <= 8 is practical.
const std::vector<Poset>& posets_of_size(std::size_t n);

}  // namespace brouwer
