#pragma once

#include <cstddef>
#include <cstdint>

#include "brouwer/lattice.hpp"

namespace brouwer {

/// One level of the Jaskowski sequence I_1 = 2, I_{n+1} = I_n^n + I_1.
struct TowerLevel {
  int n = 1;
  /// I_n, read as a Heyting algebra.
  DistLattice algebra;
  /// dual(I_n), read as a Brouwer algebra.
  DistLattice dual_algebra;
};

/// |I_n| from the recurrence, saturating at UINT64_MAX.
std::uint64_t jaskowski_size(int n);

/// Builds I_n by iterated power and stack sum. The top added by the final
/// "+ I_1" is the last index. Results are cached. Throws SizeBudgetExceeded
/// when |I_n| exceeds `max_elements` (n >= 5 at the default).
TowerLevel jaskowski_algebra(int n, std::size_t max_elements = kDefaultMaxElements);

}  // namespace brouwer
