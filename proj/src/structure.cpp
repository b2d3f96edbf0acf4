#include "brouwer/structure.hpp"

#include <vector>

namespace brouwer {

std::optional<DdWitness> dd_like_witness(const DistLattice& l) {
  const auto j = l.join_irreducible_elements();
  for (std::size_t i0 = 0; i0 < j.size(); ++i0) {
    for (std::size_t i1 = i0 + 1; i1 < j.size(); ++i1) {
      const Elem a0 = j[i0], a1 = j[i1];
      if (l.leq(a0, a1) || l.leq(a1, a0)) continue;
      std::vector<Elem> bounds;
      for (Elem c : j) {
        if (l.leq(a0, c) && l.leq(a1, c)) bounds.push_back(c);
      }
      std::vector<Elem> minimal;
      for (Elem c : bounds) {
        bool is_min = true;
        for (Elem d : bounds) {
          if (d != c && l.leq(d, c)) {
            is_min = false;
            break;
          }
        }
        if (is_min) minimal.push_back(c);
      }
      if (minimal.size() >= 2) return DdWitness{a0, a1, minimal[0], minimal[1]};
    }
  }
  return std::nullopt;
}

bool is_dd_like(const DistLattice& l) { return dd_like_witness(l).has_value(); }

std::optional<WpWitness> weak_projectivity_witness(const DistLattice& l) {
  const auto j = l.join_irreducible_elements();
  std::vector<bool> irreducible(l.size(), false);
  for (Elem e : j) irreducible[e] = true;
  for (std::size_t i = 0; i < j.size(); ++i) {
    for (std::size_t k = i + 1; k < j.size(); ++k) {
      const Elem m = l.meet(j[i], j[k]);
      if (m != l.bot() && !irreducible[m]) return WpWitness{j[i], j[k], m};
    }
  }
  return std::nullopt;
}

bool is_weakly_projective(const DistLattice& l) { return !weak_projectivity_witness(l).has_value(); }

bool is_interval_embeddable(const DistLattice& l) { return !is_dd_like(l); }

bool no_dd_like_subinterval(const DistLattice& l) {
  for (Elem x = 0; x < l.size(); ++x) {
    for (Elem y = 0; y < l.size(); ++y) {
      if (!l.leq(x, y)) continue;
      if (is_dd_like(interval(l, x, y))) return false;
    }
  }
  return true;
}

bool is_initial_segment_embeddable(const DistLattice& l) {
  if (!is_weakly_projective(l)) return false;
  for (Elem x = 0; x < l.size(); ++x) {
    if (x == l.bot()) continue;
    for (Elem y = x + 1; y < l.size(); ++y) {
      if (y != l.bot() && l.meet(x, y) == l.bot()) return false;
    }
  }
  return true;
}

StructureReport analyze(const DistLattice& l) {
  StructureReport r;
  r.size = l.size();
  r.join_irreducibles = l.join_irreducible_elements().size();
  r.dd_witness = dd_like_witness(l);
  r.dd_like = r.dd_witness.has_value();
  r.wp_witness = weak_projectivity_witness(l);
  r.weakly_projective = !r.wp_witness.has_value();
  r.interval_embeddable = !r.dd_like;
  r.initial_segment = is_initial_segment_embeddable(l);
  r.consistent = r.dd_like != r.weakly_projective;
  if (l.size() <= kSubintervalCheckLimit) {
    r.subinterval_check = no_dd_like_subinterval(l);
    r.consistent = r.consistent && *r.subinterval_check == r.interval_embeddable;
  }
  return r;
}

}  // namespace brouwer
