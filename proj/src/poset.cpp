#include "brouwer/poset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "brouwer/errors.hpp"

namespace brouwer {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

Poset Poset::from_indices(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                          std::vector<std::string> labels) {
  if (n > kMaxPoints) {
    throw SizeBudgetExceeded("poset with " + std::to_string(n) + " points exceeds the " +
                             std::to_string(kMaxPoints) + "-point limit");
  }
  if (labels.empty()) labels = default_labels(n);
  if (labels.size() != n) throw Error("label count does not match point count");

  Poset p;
  p.labels_ = std::move(labels);
  p.down_.assign(n, SubsetMask{});
  for (std::size_t i = 0; i < n; ++i) p.down_[i].set(i);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error("relation pair out of range");
    p.down_[b].set(a);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (p.down_[i].test(k)) p.down_[i] |= p.down_[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    p.down_[i].for_each([&](std::size_t j) {
      if (j != i && p.down_[j].test(i)) {
        throw CycleError("order relation has a cycle through '" + p.labels_[i] + "' and '" +
                         p.labels_[j] + "'");
      }
    });
  }
  p.up_.assign(n, SubsetMask{});
  for (std::size_t i = 0; i < n; ++i) {
    p.down_[i].for_each([&](std::size_t j) { p.up_[j].set(i); });
  }
  return p;
}

Poset Poset::make(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) throw Error("duplicate label '" + labels[i] + "'");
  }
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  idx.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    if (ia == index.end()) throw UnknownLabel(a);
    auto ib = index.find(b);
    if (ib == index.end()) throw UnknownLabel(b);
    idx.emplace_back(ia->second, ib->second);
  }
  const std::size_t n = labels.size();
  return from_indices(n, idx, std::move(labels));
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i < n; ++i) pairs.emplace_back(i - 1, i);
  return from_indices(n, pairs);
}

Poset Poset::antichain(std::size_t n) { return from_indices(n, {}); }

std::optional<std::size_t> Poset::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t b = 0; b < size(); ++b) {
    SubsetMask strict = down_[b];
    strict.reset(b);
    maximal_elements(*this, strict).for_each([&](std::size_t a) { out.emplace_back(a, b); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> Poset::upper_covers(std::size_t i) const {
  SubsetMask strict = up_[i];
  strict.reset(i);
  return minimal_elements(*this, strict).to_vector();
}

std::size_t Poset::height(std::size_t i) const {
  // Longest chain below i: count the layers of minimal elements peeled off.
  SubsetMask rest = down_[i];
  std::size_t h = 0;
  while (true) {
    SubsetMask mins = minimal_elements(*this, rest);
    rest -= mins;
    if (rest.empty()) return h;
    ++h;
  }
}

Poset Poset::induced(const SubsetMask& subset) const {
  std::vector<std::size_t> keep = subset.to_vector();
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    labels.push_back(labels_[keep[a]]);
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (a != b && leq(keep[a], keep[b])) pairs.emplace_back(a, b);
    }
  }
  return from_indices(keep.size(), pairs, std::move(labels));
}

Poset Poset::opposite() const {
  Poset p = *this;
  std::swap(p.down_, p.up_);
  return p;
}

bool Poset::is_downset(const SubsetMask& s) const {
  bool ok = true;
  s.for_each([&](std::size_t i) { ok = ok && down_[i].subset_of(s); });
  return ok;
}

bool Poset::is_upset(const SubsetMask& s) const {
  bool ok = true;
  s.for_each([&](std::size_t i) { ok = ok && up_[i].subset_of(s); });
  return ok;
}

std::optional<std::size_t> Poset::least() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (up_[i] == all()) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Poset::greatest() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (down_[i] == all()) return i;
  }
  return std::nullopt;
}

SubsetMask up_closure(const Poset& p, const SubsetMask& a) {
  SubsetMask out;
  a.for_each([&](std::size_t i) { out |= p.up(i); });
  return out;
}

SubsetMask down_closure(const Poset& p, const SubsetMask& a) {
  SubsetMask out;
  a.for_each([&](std::size_t i) { out |= p.down(i); });
  return out;
}

SubsetMask maximal_elements(const Poset& p, const SubsetMask& a) {
  SubsetMask out;
  a.for_each([&](std::size_t i) {
    SubsetMask above = p.up(i) & a;
    above.reset(i);
    if (above.empty()) out.set(i);
  });
  return out;
}

SubsetMask minimal_elements(const Poset& p, const SubsetMask& a) {
  SubsetMask out;
  a.for_each([&](std::size_t i) {
    SubsetMask below = p.down(i) & a;
    below.reset(i);
    if (below.empty()) out.set(i);
  });
  return out;
}

namespace {

// Points of `region` in a linear extension of the induced order.
std::vector<std::size_t> linear_extension(const Poset& p, const SubsetMask& region) {
  std::vector<std::size_t> pts = region.to_vector();
  std::vector<std::size_t> below(p.size(), 0);
  for (std::size_t i : pts) below[i] = (p.down(i) & region).count();
  std::stable_sort(pts.begin(), pts.end(),
                   [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  return pts;
}

void sort_lattice_order(std::vector<SubsetMask>& sets) {
  std::sort(sets.begin(), sets.end(), [](const SubsetMask& a, const SubsetMask& b) {
    const std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
}

}  // namespace

std::vector<SubsetMask> enumerate_downsets(const Poset& p, std::size_t cap) {
  const std::vector<std::size_t> order = linear_extension(p, p.all());
  std::vector<SubsetMask> out;
  // Iterative DFS over include/exclude decisions in linear-extension order;
  // a point may be included only when its whole strict downset already is.
  struct Frame {
    std::size_t depth;
    SubsetMask current;
  };
  std::vector<Frame> stack{{0, SubsetMask{}}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.depth == order.size()) {
      if (out.size() >= cap) {
        throw SizeBudgetExceeded("more than " + std::to_string(cap) + " downsets");
      }
      out.push_back(f.current);
      continue;
    }
    const std::size_t pt = order[f.depth];
    stack.push_back({f.depth + 1, f.current});
    SubsetMask strict = p.down(pt);
    strict.reset(pt);
    if (strict.subset_of(f.current)) {
      SubsetMask with = f.current;
      with.set(pt);
      stack.push_back({f.depth + 1, with});
    }
  }
  sort_lattice_order(out);
  return out;
}

std::vector<SubsetMask> enumerate_upsets(const Poset& p, const SubsetMask& region, std::size_t cap) {
  std::vector<std::size_t> order = linear_extension(p, region);
  std::reverse(order.begin(), order.end());
  std::vector<SubsetMask> out;
  struct Frame {
    std::size_t depth;
    SubsetMask current;
  };
  std::vector<Frame> stack{{0, SubsetMask{}}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.depth == order.size()) {
      if (out.size() >= cap) {
        throw SizeBudgetExceeded("more than " + std::to_string(cap) + " up-sets");
      }
      out.push_back(f.current);
      continue;
    }
    const std::size_t pt = order[f.depth];
    stack.push_back({f.depth + 1, f.current});
    SubsetMask strict = p.up(pt) & region;
    strict.reset(pt);
    if (strict.subset_of(f.current)) {
      SubsetMask with = f.current;
      with.set(pt);
      stack.push_back({f.depth + 1, with});
    }
  }
  sort_lattice_order(out);
  return out;
}

namespace {

using Invariant = std::vector<std::size_t>;

// Per-point invariants preserved by isomorphisms: height, depth, principal
// cone sizes, then one refinement round over the cones.
std::vector<Invariant> point_invariants(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> height(n, 0), depth(n, 0);
  const std::vector<std::size_t> order = linear_extension(p, p.all());
  for (std::size_t i : order) {
    p.down(i).for_each([&](std::size_t j) {
      if (j != i) height[i] = std::max(height[i], height[j] + 1);
    });
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t i = *it;
    p.up(i).for_each([&](std::size_t j) {
      if (j != i) depth[i] = std::max(depth[i], depth[j] + 1);
    });
  }
  std::vector<Invariant> base(n);
  for (std::size_t i = 0; i < n; ++i) {
    base[i] = {height[i], depth[i], p.down(i).count(), p.up(i).count()};
  }
  std::map<Invariant, std::size_t> rank;
  for (const auto& b : base) rank.emplace(b, 0);
  std::size_t r = 0;
  for (auto& [k, v] : rank) v = r++;
  std::vector<Invariant> refined(n);
  for (std::size_t i = 0; i < n; ++i) {
    Invariant below, above;
    p.down(i).for_each([&](std::size_t j) { below.push_back(rank[base[j]]); });
    p.up(i).for_each([&](std::size_t j) { above.push_back(rank[base[j]]); });
    std::sort(below.begin(), below.end());
    std::sort(above.begin(), above.end());
    refined[i] = base[i];
    refined[i].push_back(below.size());
    refined[i].insert(refined[i].end(), below.begin(), below.end());
    refined[i].push_back(above.size());
    refined[i].insert(refined[i].end(), above.begin(), above.end());
  }
  return refined;
}

}  // namespace

std::optional<std::vector<std::size_t>> poset_isomorphic(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return std::nullopt;
  const auto ip = point_invariants(p);
  const auto iq = point_invariants(q);
  {
    auto sp = ip, sq = iq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return std::nullopt;
  }
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (ip[i] == iq[j]) candidates[i].push_back(j);
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return candidates[a].size() < candidates[b].size();
  });

  std::vector<std::size_t> map(n, kMaxPoints);
  std::vector<bool> used(n, false);
  auto consistent = [&](std::size_t depth, std::size_t x, std::size_t y) {
    for (std::size_t k = 0; k < depth; ++k) {
      const std::size_t u = order[k];
      if (p.leq(u, x) != q.leq(map[u], y) || p.leq(x, u) != q.leq(y, map[u])) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t x = order[depth];
    for (std::size_t y : candidates[x]) {
      if (used[y] || !consistent(depth, x, y)) continue;
      used[y] = true;
      map[x] = y;
      if (self(self, depth + 1)) return true;
      used[y] = false;
    }
    map[x] = kMaxPoints;
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return map;
}

std::string canonical_code(const Poset& p) {
  const std::size_t n = p.size();
  const auto inv = point_invariants(p);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return inv[a] < inv[b]; });
  // Cells of equal invariants; permute within each cell.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::string best;
  std::string code(n * n, '0');
  auto emit = [&]() {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) code[a * n + b] = p.leq(order[a], order[b]) ? '1' : '0';
    }
    if (best.empty() || code < best) best = code;
  };
  auto recurse = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      emit();
      return;
    }
    auto [lo, hi] = cells[cell];
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      self(self, cell + 1);
    } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                   order.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  recurse(recurse, 0);
  return std::to_string(n) + ":" + best;
}

const std::vector<Poset>& posets_of_size(std::size_t n) {
  static std::mutex mu;
  static std::deque<std::vector<Poset>> cache{{Poset::from_indices(0, {})}};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    const std::size_t m = cache.size();  // building posets with m points
    std::vector<Poset> next;
    std::unordered_set<std::string> seen;
    for (const Poset& base : cache[m - 1]) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t a = 0; a < base.size(); ++a) {
        for (std::size_t b = 0; b < base.size(); ++b) {
          if (a != b && base.leq(a, b)) pairs.emplace_back(a, b);
        }
      }
      // Every poset arises from a smaller one by adding a maximal point on
      // top of some downset.
      for (const SubsetMask& d : enumerate_downsets(base)) {
        auto ext = pairs;
        d.for_each([&](std::size_t a) { ext.emplace_back(a, m - 1); });
        Poset candidate = Poset::from_indices(m, ext);
        if (seen.insert(canonical_code(candidate)).second) next.push_back(std::move(candidate));
      }
    }
    cache.push_back(std::move(next));
  }
  return cache[n];
}

}  // namespace brouwer
