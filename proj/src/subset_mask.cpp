#include "brouwer/subset_mask.hpp"

namespace brouwer {

SubsetMask SubsetMask::first(std::size_t n) {
  SubsetMask m;
  if (n >= 64) {
    m.words_[0] = ~std::uint64_t{0};
    n -= 64;
    m.words_[1] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  } else {
    m.words_[0] = (std::uint64_t{1} << n) - 1;
  }
  return m;
}

std::string SubsetMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](std::size_t i) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  });
  return s + "}";
}

}  // namespace brouwer
