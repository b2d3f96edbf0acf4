#pragma once

#include <cstddef>
#include <optional>

#include "brouwer/lattice.hpp"

namespace brouwer {

/// a0, a1 incomparable join-irreducibles with two distinct minimal upper
/// bounds a2, a3 among the join-irreducibles.
struct DdWitness {
  Elem a0, a1, a2, a3;
};

/// Join-irreducibles a, b whose meet is neither 0 nor join-irreducible.
struct WpWitness {
  Elem a, b, meet;
};

std::optional<DdWitness> dd_like_witness(const DistLattice& l);
bool is_dd_like(const DistLattice& l);

std::optional<WpWitness> weak_projectivity_witness(const DistLattice& l);
bool is_weakly_projective(const DistLattice& l);

/// Not dd-like: embeddable as an interval of the Muchnik lattice.
bool is_interval_embeddable(const DistLattice& l);

/// No subinterval [x, y] of l is dd-like. Enumerates all intervals, so only
/// run on small lattices.
bool no_dd_like_subinterval(const DistLattice& l);

/// Weakly projective and 0 is not the meet of two nonzero elements.
bool is_initial_segment_embeddable(const DistLattice& l);

inline constexpr std::size_t kSubintervalCheckLimit = 64;

struct StructureReport {
  std::size_t size = 0;
  std::size_t join_irreducibles = 0;
  bool dd_like = false;
  std::optional<DdWitness> dd_witness;
  bool weakly_projective = true;
  std::optional<WpWitness> wp_witness;
  bool interval_embeddable = true;
  bool initial_segment = true;
  /// Result of no_dd_like_subinterval, for lattices up to kSubintervalCheckLimit.
  std::optional<bool> subinterval_check;
  /// dd_like == !weakly_projective and, where computed, the subinterval
  /// check agrees with interval_embeddable.
  bool consistent = true;
};

StructureReport analyze(const DistLattice& l);

}  // namespace brouwer
