#include "brouwer/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "brouwer/errors.hpp"

namespace brouwer {

std::vector<Formula> generate_formulas(std::size_t max_connectives, const std::vector<std::string>& variables) {
  // by_count[c]: formulas with exactly c connectives.
  std::vector<std::vector<Formula>> by_count(max_connectives + 1);
  for (const std::string& v : variables) by_count[0].push_back(Formula::var(v));
  std::sort(by_count[0].begin(), by_count[0].end());
  for (std::size_t c = 1; c <= max_connectives; ++c) {
    std::vector<Formula>& out = by_count[c];
    for (const Formula& a : by_count[c - 1]) out.push_back(Formula::neg(a));
    for (std::size_t i = 0; i <= c - 1; ++i) {
      const std::size_t j = c - 1 - i;
      for (const Formula& a : by_count[i]) {
        for (const Formula& b : by_count[j]) {
          out.push_back(Formula::imp(a, b));
          if (!(b < a)) {
            out.push_back(Formula::conj(a, b));
            out.push_back(Formula::disj(a, b));
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  std::vector<Formula> all;
  for (auto& level : by_count) all.insert(all.end(), level.begin(), level.end());
  std::sort(all.begin(), all.end());
  return all;
}

const std::vector<std::pair<std::string, Formula>>& named_formulas() {
  static const std::vector<std::pair<std::string, Formula>> named = {
      {"LEM", parse("p | ~p")},
      {"WLEM", parse("~p | ~~p")},
      {"Peirce", parse("((p -> q) -> p) -> p")},
      {"DNE", parse("~~p -> p")},
      {"Dummett", parse("(p -> q) | (q -> p)")},
      {"Kreisel-Putnam", parse("(~p -> q | r) -> (~p -> q) | (~p -> r)")},
  };
  return named;
}

std::vector<Formula> default_corpus(std::size_t max_connectives) {
  std::vector<Formula> out = generate_formulas(max_connectives);
  std::set<Formula> seen(out.begin(), out.end());
  for (const auto& [name, f] : named_formulas()) {
    if (seen.insert(f).second) out.push_back(f);
  }
  return out;
}

std::vector<Formula> parse_corpus(const std::string& text, const ParseOptions& options) {
  std::vector<Formula> out;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse(line, options));
    } catch (const SyntaxError& e) {
      throw Error("corpus line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Formula> load_corpus(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str(), options);
}

}  // namespace brouwer
