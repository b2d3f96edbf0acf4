#include "brouwer/tower.hpp"

#include <limits>
#include <map>
#include <mutex>

#include "brouwer/errors.hpp"

namespace brouwer {

std::uint64_t jaskowski_size(int n) {
  if (n < 1) throw Error("tower levels start at 1");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t size = 2;
  for (int k = 1; k < n; ++k) {
    std::uint64_t p = 1;
    for (int i = 0; i < k; ++i) {
      if (p > kMax / size) return kMax;
      p *= size;
    }
    if (p == kMax) return kMax;
    size = p + 1;
  }
  return size;
}

TowerLevel jaskowski_algebra(int n, std::size_t max_elements) {
  const std::uint64_t size = jaskowski_size(n);
  if (size > max_elements) {
    throw SizeBudgetExceeded("I_" + std::to_string(n) + " has " + std::to_string(size) + " elements (cap " +
                             std::to_string(max_elements) + ")");
  }
  static std::mutex mu;
  static std::map<int, TowerLevel> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  const DistLattice two = chain_lattice(2).with_labels({"0", "1"});
  DistLattice current = two;
  for (int k = 1; k < n; ++k) {
    DistLattice next = stack_sum(power(current, static_cast<std::size_t>(k), max_elements), two, max_elements);
    if (k == 1) next = next.with_labels({"0", "m", "1"});
    current = next;
  }
  current = current.with_provenance("I" + std::to_string(n));
  TowerLevel level{n, current, dual(current).with_provenance("B" + std::to_string(n))};
  cache.emplace(n, level);
  return level;
}

}  // namespace brouwer
