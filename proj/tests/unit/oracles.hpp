// Brute-force reference implementations and random generators for tests.
#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "brouwer/formula.hpp"
#include "brouwer/lattice.hpp"
#include "brouwer/poset.hpp"

namespace oracle {

using brouwer::DistLattice;
using brouwer::Elem;

/// Least c with a v c >= b, by scanning all elements.
inline Elem brouwer_arrow(const DistLattice& l, Elem a, Elem b) {
  std::vector<Elem> ok;
  for (Elem c = 0; c < l.size(); ++c) {
    if (l.leq(b, l.join(a, c))) ok.push_back(c);
  }
  for (Elem c : ok) {
    bool least = true;
    for (Elem d : ok) least = least && l.leq(c, d);
    if (least) return c;
  }
  throw std::logic_error("no least solution");
}

/// Greatest c with a ^ c <= b.
inline Elem heyting_arrow(const DistLattice& l, Elem a, Elem b) {
  std::vector<Elem> ok;
  for (Elem c = 0; c < l.size(); ++c) {
    if (l.leq(l.meet(a, c), b)) ok.push_back(c);
  }
  for (Elem c : ok) {
    bool greatest = true;
    for (Elem d : ok) greatest = greatest && l.leq(d, c);
    if (greatest) return c;
  }
  throw std::logic_error("no greatest solution");
}

/// Random poset: each pair i < j is related with probability p (then closed).
inline brouwer::Poset random_poset(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) pairs.emplace_back(i, j);
    }
  }
  // Shuffle labels so the index order is not a linear extension.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [a, b] : pairs) {
    a = perm[a];
    b = perm[b];
  }
  return brouwer::Poset::from_indices(n, pairs);
}

inline brouwer::Formula random_formula(std::mt19937_64& rng, int depth, const std::vector<std::string>& vars,
                                       bool constants = false) {
  using brouwer::Formula;
  std::uniform_int_distribution<int> pick(0, 9);
  const int r = pick(rng);
  if (depth <= 0 || r < 2) {
    if (constants && r == 0) return pick(rng) < 5 ? Formula::bot() : Formula::top();
    return Formula::var(vars[std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(rng)]);
  }
  if (r < 4) return Formula::neg(random_formula(rng, depth - 1, vars, constants));
  const brouwer::Op op = r < 6 ? brouwer::Op::And : r < 8 ? brouwer::Op::Or : brouwer::Op::Imp;
  return Formula::binary(op, random_formula(rng, depth - 1, vars, constants),
                         random_formula(rng, depth - 1, vars, constants));
}

/// All lattices used for "small" exhaustive checks: downset algebras of every
/// poset with up to `points` points.
inline std::vector<DistLattice> small_lattices(std::size_t points) {
  std::vector<DistLattice> out;
  for (std::size_t n = 0; n <= points; ++n) {
    for (const auto& p : brouwer::posets_of_size(n)) out.push_back(brouwer::downset_lattice(p));
  }
  return out;
}

}  // namespace oracle
