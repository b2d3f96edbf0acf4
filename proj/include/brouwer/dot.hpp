#pragma once

#include <string>

#include "brouwer/lattice.hpp"
#include "brouwer/muchnik.hpp"
#include "brouwer/poset.hpp"

namespace brouwer {

/// Hasse diagram (covering pairs, bottom-up).
std::string poset_to_dot(const Poset& p, const std::string& name = "P");
std::string lattice_to_dot(const DistLattice& l, const std::string& name = "L");
/// The master degree poset with one fill colour per level.
std::string construction_to_dot(const Construction& c, const std::string& name = "D");

}  // namespace brouwer
