#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "brouwer/formula.hpp"

namespace brouwer {

/// Default connective bound for the generated corpus.
inline constexpr std::size_t kDefaultCorpusConnectives = 3;

/// All formulas over `variables` with at most `max_connectives` connectives
/// from ~, &, |, ->, one representative per commutativity class of & and |
/// (operands of & and | in structural order). Sorted, no duplicates.
std::vector<Formula> generate_formulas(std::size_t max_connectives,
                                       const std::vector<std::string>& variables = {"p", "q"});

/// LEM, WLEM, Peirce, double negation elimination, Dummett, Kreisel-Putnam.
const std::vector<std::pair<std::string, Formula>>& named_formulas();

/// generate_formulas over p, q followed by the named formulas not already
/// present.
std::vector<Formula> default_corpus(std::size_t max_connectives = kDefaultCorpusConnectives);

/// One formula per line; blank lines and text after '#' are ignored. Throws
/// Error naming the line on a syntax error.
std::vector<Formula> load_corpus(const std::string& path, const ParseOptions& options = {});
std::vector<Formula> parse_corpus(const std::string& text, const ParseOptions& options = {});

}  // namespace brouwer
