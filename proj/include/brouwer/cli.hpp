#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "brouwer/lattice.hpp"
#include "brouwer/poset.hpp"

namespace brouwer::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2, kUnknown = 3 };

/// Runs one command line; results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// chain(n), antichain(n), diamond, poset(a<b<c, d), op(P) or a JSON file.
Poset parse_poset_expr(const std::string& expr);

/// chain(n), bool(n), I(n), B(n), dual(X), prod(X,Y), sum(X,Y),
/// interval(X,a,b), downsets(P), upsets(P) or a JSON file.
DistLattice parse_lattice_expr(const std::string& expr, std::size_t max_elements = kDefaultMaxElements);

}  // namespace brouwer::cli
