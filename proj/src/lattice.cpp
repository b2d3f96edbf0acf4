#include "brouwer/lattice.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <random>
#include <unordered_map>

#include "brouwer/errors.hpp"

namespace brouwer {

namespace detail {

struct LatticeData {
  std::size_t n = 1;
  std::vector<Elem> join{0};
  std::vector<Elem> meet{0};
  Elem bot = 0;
  Elem top = 0;
  std::vector<std::string> labels{"0"};
  std::string provenance = "trivial";
  std::vector<SubsetMask> masks;

  mutable std::once_flag arrows_once;
  mutable std::vector<Elem> brouwer;
  mutable std::vector<Elem> heyting;
  mutable std::once_flag irreducibles_once;
  mutable std::vector<Elem> join_irr;
  mutable std::vector<Elem> meet_irr;

  void build_irreducibles() const {
    std::call_once(irreducibles_once, [this] {
      for (std::size_t x = 0; x < n; ++x) {
        Elem below = bot;
        Elem above = top;
        for (std::size_t y = 0; y < n; ++y) {
          if (y == x) continue;
          if (join[y * n + x] == x) below = join[below * n + y];
          if (join[x * n + y] == y) above = meet[above * n + y];
        }
        if (x != bot && below != x) join_irr.push_back(static_cast<Elem>(x));
        if (x != top && above != x) meet_irr.push_back(static_cast<Elem>(x));
      }
    });
  }

  // Arrows from irreducible decompositions (valid in distributive lattices):
  //   heyting(a, b) = join of { j in J : a ^ j <= b }
  //   brouwer(a, b) = meet of { m in M : b <= a v m }
  void build_arrows() const {
    build_irreducibles();
    std::call_once(arrows_once, [this] {
      brouwer.assign(n * n, 0);
      heyting.assign(n * n, 0);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          Elem h = bot;
          for (Elem j : join_irr) {
            const Elem aj = meet[a * n + j];
            if (join[aj * n + b] == b) h = join[h * n + j];
          }
          heyting[a * n + b] = h;
          Elem r = top;
          for (Elem m : meet_irr) {
            const Elem am = join[a * n + m];
            if (join[b * n + am] == am) r = meet[r * n + m];
          }
          brouwer[a * n + b] = r;
        }
      }
    });
  }
};

}  // namespace detail

namespace {

void check_size(std::size_t n, std::size_t max_elements, const char* what) {
  const std::size_t hard = std::size_t{1} << 16;
  if (n > max_elements || n >= hard) {
    throw SizeBudgetExceeded(std::string(what) + " would have " + std::to_string(n) +
                             " elements (cap " + std::to_string(std::min(max_elements, hard - 1)) + ")");
  }
}

// Dense bit rows for order closure of explicitly given lattices (which may be
// larger than a Poset can hold).
struct BitRows {
  std::size_t n, words;
  std::vector<std::uint64_t> bits;
  explicit BitRows(std::size_t n_) : n(n_), words((n_ + 63) / 64), bits(n_ * ((n_ + 63) / 64), 0) {}
  std::uint64_t* row(std::size_t i) { return bits.data() + i * words; }
  const std::uint64_t* row(std::size_t i) const { return bits.data() + i * words; }
  bool test(std::size_t i, std::size_t j) const { return (row(i)[j >> 6] >> (j & 63)) & 1U; }
  void set(std::size_t i, std::size_t j) { row(i)[j >> 6] |= std::uint64_t{1} << (j & 63); }
};

}  // namespace

DistLattice::DistLattice() : DistLattice(std::make_shared<const detail::LatticeData>()) {}

DistLattice::DistLattice(std::shared_ptr<const detail::LatticeData> d)
    : d_(std::move(d)), n_(d_->n), join_(d_->join.data()), meet_(d_->meet.data()) {}

DistLattice DistLattice::from_tables(std::size_t n, std::vector<Elem> join, std::vector<Elem> meet, Elem bot,
                                     Elem top, std::vector<std::string> labels, std::string provenance,
                                     std::vector<SubsetMask> masks) {
  auto d = std::make_shared<detail::LatticeData>();
  d->n = n;
  d->join = std::move(join);
  d->meet = std::move(meet);
  d->bot = bot;
  d->top = top;
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  d->labels = std::move(labels);
  d->provenance = std::move(provenance);
  d->masks = std::move(masks);
  return DistLattice(std::move(d));
}

DistLattice DistLattice::from_order(std::vector<std::string> labels,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs,
                                    std::size_t max_elements) {
  const std::size_t n = labels.size();
  if (n == 0) throw NotALattice("a lattice needs at least one element");
  check_size(n, max_elements, "explicit lattice");

  // up.test(i, j): i <= j
  BitRows up(n);
  for (std::size_t i = 0; i < n; ++i) up.set(i, i);
  for (auto [a, b] : leq_pairs) {
    if (a >= n || b >= n) throw Error("order pair out of range");
    up.set(a, b);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t* rk = up.row(k);
    for (std::size_t i = 0; i < n; ++i) {
      if (!up.test(i, k)) continue;
      std::uint64_t* ri = up.row(i);
      for (std::size_t w = 0; w < up.words; ++w) ri[w] |= rk[w];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (up.test(i, j) && up.test(j, i)) {
        throw CycleError("order relation has a cycle through '" + labels[i] + "' and '" + labels[j] + "'");
      }
    }
  }
  BitRows down(n);
  std::vector<std::size_t> down_count(n, 0), up_count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (up.test(i, j)) {
        down.set(j, i);
        ++down_count[j];
        ++up_count[i];
      }
    }
  }

  // Least upper bound: the common upper bound with the smallest downset,
  // provided every other common upper bound lies above it.
  auto bound = [&](const BitRows& cone, const std::vector<std::size_t>& size_of, std::size_t a,
                   std::size_t b) -> std::optional<std::size_t> {
    std::vector<std::uint64_t> common(cone.words);
    for (std::size_t w = 0; w < cone.words; ++w) common[w] = cone.row(a)[w] & cone.row(b)[w];
    std::optional<std::size_t> best;
    for (std::size_t w = 0; w < cone.words; ++w) {
      std::uint64_t bits = common[w];
      while (bits != 0) {
        const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (!best || size_of[u] < size_of[*best]) best = u;
      }
    }
    if (!best) return std::nullopt;
    for (std::size_t w = 0; w < cone.words; ++w) {
      if ((common[w] & ~cone.row(*best)[w]) != 0) return std::nullopt;
    }
    return best;
  };

  std::vector<Elem> join(n * n), meet(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      auto j = bound(up, down_count, a, b);
      auto m = bound(down, up_count, a, b);
      if (!j) throw NotALattice("'" + labels[a] + "' and '" + labels[b] + "' have no join");
      if (!m) throw NotALattice("'" + labels[a] + "' and '" + labels[b] + "' have no meet");
      join[a * n + b] = join[b * n + a] = static_cast<Elem>(*j);
      meet[a * n + b] = meet[b * n + a] = static_cast<Elem>(*m);
    }
  }
  Elem bot = 0, top = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bot = meet[bot * n + i];
    top = join[top * n + i];
  }
  DistLattice l = from_tables(n, std::move(join), std::move(meet), bot, top, std::move(labels), "explicit");
  if (auto v = distributivity_violation(l)) {
    throw NotALattice("lattice is not distributive at (" + l.label((*v)[0]) + ", " + l.label((*v)[1]) + ", " +
                      l.label((*v)[2]) + ")");
  }
  return l;
}

std::size_t DistLattice::size() const { return n_; }
Elem DistLattice::bot() const { return d_->bot; }
Elem DistLattice::top() const { return d_->top; }
const std::string& DistLattice::label(Elem e) const { return d_->labels[e]; }
const std::vector<std::string>& DistLattice::labels() const { return d_->labels; }
const std::string& DistLattice::provenance() const { return d_->provenance; }
std::span<const SubsetMask> DistLattice::masks() const { return d_->masks; }

std::optional<Elem> DistLattice::find(std::string_view label) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (d_->labels[i] == label) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

std::span<const Elem> DistLattice::brouwer_table() const {
  d_->build_arrows();
  return d_->brouwer;
}

std::span<const Elem> DistLattice::heyting_table() const {
  d_->build_arrows();
  return d_->heyting;
}

std::span<const Elem> DistLattice::join_irreducible_elements() const {
  d_->build_irreducibles();
  return d_->join_irr;
}

std::span<const Elem> DistLattice::meet_irreducible_elements() const {
  d_->build_irreducibles();
  return d_->meet_irr;
}

DistLattice DistLattice::with_labels(std::vector<std::string> labels) const {
  return from_tables(n_, d_->join, d_->meet, d_->bot, d_->top, std::move(labels), d_->provenance, d_->masks);
}

DistLattice DistLattice::with_provenance(std::string provenance) const {
  return from_tables(n_, d_->join, d_->meet, d_->bot, d_->top, d_->labels, std::move(provenance), d_->masks);
}

bool operator==(const DistLattice& a, const DistLattice& b) {
  return a.n_ == b.n_ && a.d_->bot == b.d_->bot && a.d_->top == b.d_->top && a.d_->join == b.d_->join &&
         a.d_->meet == b.d_->meet;
}

DistLattice chain_lattice(std::size_t n) {
  if (n == 0) throw Error("a chain needs at least one element");
  check_size(n, kDefaultMaxElements, "chain");
  std::vector<Elem> join(n * n), meet(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      join[a * n + b] = static_cast<Elem>(std::max(a, b));
      meet[a * n + b] = static_cast<Elem>(std::min(a, b));
    }
  }
  return DistLattice::from_tables(n, std::move(join), std::move(meet), 0, static_cast<Elem>(n - 1), {},
                                  "chain(" + std::to_string(n) + ")");
}

namespace {

DistLattice lattice_of_sets(const Poset& p, std::vector<SubsetMask> sets, std::string provenance) {
  const std::size_t n = sets.size();
  std::unordered_map<SubsetMask, Elem, SubsetMaskHash> index;
  index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index.emplace(sets[i], static_cast<Elem>(i));
  std::vector<Elem> join(n * n), meet(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      join[a * n + b] = join[b * n + a] = index.at(sets[a] | sets[b]);
      meet[a * n + b] = meet[b * n + a] = index.at(sets[a] & sets[b]);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const SubsetMask& s : sets) {
    std::string lab = "{";
    bool first = true;
    s.for_each([&](std::size_t i) {
      if (!first) lab += ",";
      lab += p.label(i);
      first = false;
    });
    labels.push_back(lab + "}");
  }
  return DistLattice::from_tables(n, std::move(join), std::move(meet), 0, static_cast<Elem>(n - 1),
                                  std::move(labels), std::move(provenance), std::move(sets));
}

}  // namespace

DistLattice downset_lattice(const Poset& p, std::size_t max_elements) {
  std::vector<SubsetMask> sets = enumerate_downsets(p, std::min(max_elements, kDefaultDownsetCap));
  check_size(sets.size(), max_elements, "downset lattice");
  return lattice_of_sets(p, std::move(sets), "downsets");
}

DistLattice upset_lattice(const Poset& p, std::size_t max_elements) {
  std::vector<SubsetMask> sets = enumerate_upsets(p, p.all(), std::min(max_elements, kDefaultDownsetCap));
  check_size(sets.size(), max_elements, "up-set lattice");
  return lattice_of_sets(p, std::move(sets), "upsets");
}

JoinIrreducibles join_irreducibles(const DistLattice& l) {
  auto span = l.join_irreducible_elements();
  JoinIrreducibles out;
  out.elements.assign(span.begin(), span.end());
  const std::size_t k = out.elements.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < k; ++a) {
    labels.push_back(l.label(out.elements[a]));
    for (std::size_t b = 0; b < k; ++b) {
      if (a != b && l.leq(out.elements[a], out.elements[b])) pairs.emplace_back(a, b);
    }
  }
  out.poset = Poset::from_indices(k, pairs, std::move(labels));
  return out;
}

DistLattice dual(const DistLattice& l) {
  std::string prov = l.provenance();
  if (prov.starts_with("dual(") && prov.ends_with(")")) {
    prov = prov.substr(5, prov.size() - 6);
  } else {
    prov = "dual(" + prov + ")";
  }
  return DistLattice::from_tables(l.size(), {l.meet_table().begin(), l.meet_table().end()},
                                  {l.join_table().begin(), l.join_table().end()}, l.top(), l.bot(), l.labels(),
                                  std::move(prov), {l.masks().begin(), l.masks().end()});
}

DistLattice power(const DistLattice& a, std::size_t k, std::size_t max_elements) {
  if (k == 0) return DistLattice();
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= a.size();
    check_size(n, max_elements, "power");
  }
  if (k == 1) return a;
  // Mixed-radix coordinates, first coordinate fastest.
  const std::size_t m = a.size();
  std::vector<std::vector<Elem>> coords(n, std::vector<Elem>(k));
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t r = x;
    for (std::size_t i = 0; i < k; ++i) {
      coords[x][i] = static_cast<Elem>(r % m);
      r /= m;
    }
  }
  std::vector<Elem> join(n * n), meet(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      std::size_t j = 0, mt = 0, stride = 1;
      for (std::size_t i = 0; i < k; ++i) {
        j += a.join(coords[x][i], coords[y][i]) * stride;
        mt += a.meet(coords[x][i], coords[y][i]) * stride;
        stride *= m;
      }
      join[x * n + y] = join[y * n + x] = static_cast<Elem>(j);
      meet[x * n + y] = meet[y * n + x] = static_cast<Elem>(mt);
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::string s = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) s += ",";
      s += a.label(coords[x][i]);
    }
    labels[x] = s + ")";
  }
  std::size_t bot = 0, top = 0, stride = 1;
  for (std::size_t i = 0; i < k; ++i) {
    bot += a.bot() * stride;
    top += a.top() * stride;
    stride *= m;
  }
  return DistLattice::from_tables(n, std::move(join), std::move(meet), static_cast<Elem>(bot),
                                  static_cast<Elem>(top), std::move(labels),
                                  "power(" + a.provenance() + "," + std::to_string(k) + ")");
}

DistLattice product(const DistLattice& a, const DistLattice& b, std::size_t max_elements) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  check_size(n, max_elements, "product");
  std::vector<Elem> join(n * n), meet(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem xa = static_cast<Elem>(x % na), xb = static_cast<Elem>(x / na);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem ya = static_cast<Elem>(y % na), yb = static_cast<Elem>(y / na);
      join[x * n + y] = static_cast<Elem>(a.join(xa, ya) + na * b.join(xb, yb));
      meet[x * n + y] = static_cast<Elem>(a.meet(xa, ya) + na * b.meet(xb, yb));
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = "(" + a.label(static_cast<Elem>(x % na)) + "," + b.label(static_cast<Elem>(x / na)) + ")";
  }
  return DistLattice::from_tables(n, std::move(join), std::move(meet), static_cast<Elem>(a.bot() + na * b.bot()),
                                  static_cast<Elem>(a.top() + na * b.top()), std::move(labels),
                                  "prod(" + a.provenance() + "," + b.provenance() + ")");
}

DistLattice stack_sum(const DistLattice& a, const DistLattice& b, std::size_t max_elements) {
  const std::size_t na = a.size(), nb = b.size(), n = na + nb - 1;
  check_size(n, max_elements, "sum");
  // Position of each B element in the sum.
  std::vector<Elem> from_b(nb);
  {
    std::size_t next = na;
    for (std::size_t y = 0; y < nb; ++y) {
      from_b[y] = y == b.bot() ? a.top() : static_cast<Elem>(next++);
    }
  }
  std::vector<int> in_b(n, -1);  // B index of sum elements above 1_A
  for (std::size_t y = 0; y < nb; ++y) {
    if (y != b.bot()) in_b[from_b[y]] = static_cast<int>(y);
  }
  auto b_index = [&](std::size_t x) -> Elem { return x < na ? b.bot() : static_cast<Elem>(in_b[x]); };
  std::vector<Elem> join(n * n), meet(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const bool xa = x < na, ya = y < na;
      Elem j, m;
      if (xa && ya) {
        j = a.join(static_cast<Elem>(x), static_cast<Elem>(y));
        m = a.meet(static_cast<Elem>(x), static_cast<Elem>(y));
      } else if (!xa && !ya) {
        j = from_b[b.join(b_index(x), b_index(y))];
        m = from_b[b.meet(b_index(x), b_index(y))];
      } else {
        j = static_cast<Elem>(xa ? y : x);
        m = static_cast<Elem>(xa ? x : y);
      }
      join[x * n + y] = j;
      meet[x * n + y] = m;
    }
  }
  std::vector<std::string> labels = a.labels();
  for (std::size_t x = na; x < n; ++x) labels.push_back(b.label(b_index(x)));
  return DistLattice::from_tables(n, std::move(join), std::move(meet), a.bot(), from_b[b.top()],
                                  std::move(labels), "sum(" + a.provenance() + "," + b.provenance() + ")");
}

std::vector<Elem> interval_members(const DistLattice& l, Elem a, Elem b) {
  if (!l.leq(a, b)) {
    throw EmptyInterval("interval [" + l.label(a) + ", " + l.label(b) + "] is empty");
  }
  std::vector<Elem> out;
  for (std::size_t x = 0; x < l.size(); ++x) {
    const Elem e = static_cast<Elem>(x);
    if (l.leq(a, e) && l.leq(e, b)) out.push_back(e);
  }
  return out;
}

DistLattice interval(const DistLattice& l, Elem a, Elem b) {
  const std::vector<Elem> members = interval_members(l, a, b);
  const std::size_t n = members.size();
  std::vector<int> local(l.size(), -1);
  for (std::size_t i = 0; i < n; ++i) local[members[i]] = static_cast<int>(i);
  std::vector<Elem> join(n * n), meet(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      join[x * n + y] = static_cast<Elem>(local[l.join(members[x], members[y])]);
      meet[x * n + y] = static_cast<Elem>(local[l.meet(members[x], members[y])]);
    }
  }
  std::vector<std::string> labels;
  std::vector<SubsetMask> masks;
  for (Elem m : members) {
    labels.push_back(l.label(m));
    if (!l.masks().empty()) masks.push_back(l.masks()[m]);
  }
  return DistLattice::from_tables(n, std::move(join), std::move(meet), static_cast<Elem>(local[a]),
                                  static_cast<Elem>(local[b]), std::move(labels),
                                  "interval(" + l.provenance() + "," + l.label(a) + "," + l.label(b) + ")",
                                  std::move(masks));
}

bool LatticeMap::injective() const {
  std::vector<bool> hit(target.size(), false);
  for (Elem t : table) {
    if (hit[t]) return false;
    hit[t] = true;
  }
  return true;
}

bool LatticeMap::surjective() const {
  std::vector<bool> hit(target.size(), false);
  for (Elem t : table) hit[t] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

Quotient principal_quotient(const DistLattice& l, Elem e, QuotientKind kind) {
  const bool filter = kind == QuotientKind::Filter;
  const Elem lo = filter ? l.bot() : e;
  const Elem hi = filter ? e : l.top();
  DistLattice target = interval(l, lo, hi);
  const std::vector<Elem> members = interval_members(l, lo, hi);
  std::vector<int> local(l.size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
  std::vector<Elem> table(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) {
    const Elem img = filter ? l.meet(static_cast<Elem>(x), e) : l.join(static_cast<Elem>(x), e);
    table[x] = static_cast<Elem>(local[img]);
  }
  return Quotient{target, LatticeMap{l, target, std::move(table)}};
}

HomomorphismReport is_lattice_homomorphism(const LatticeMap& f) {
  const DistLattice& s = f.source;
  const DistLattice& t = f.target;
  if (f(s.bot()) != t.bot()) return {false, "bot", s.bot(), s.bot()};
  if (f(s.top()) != t.top()) return {false, "top", s.top(), s.top()};
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      const Elem x = static_cast<Elem>(a), y = static_cast<Elem>(b);
      if (f(s.join(x, y)) != t.join(f(x), f(y))) return {false, "join", x, y};
      if (f(s.meet(x, y)) != t.meet(f(x), f(y))) return {false, "meet", x, y};
    }
  }
  return {};
}

HomomorphismReport is_brouwer_homomorphism(const LatticeMap& f) {
  HomomorphismReport r = is_lattice_homomorphism(f);
  if (!r.ok) return r;
  const DistLattice& s = f.source;
  const DistLattice& t = f.target;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      const Elem x = static_cast<Elem>(a), y = static_cast<Elem>(b);
      if (f(s.brouwer_arrow(x, y)) != t.brouwer_arrow(f(x), f(y))) return {false, "arrow", x, y};
    }
  }
  return {};
}

LatticeMap meet_slice_map(const DistLattice& l, Elem x, Elem y, Elem z) {
  const std::vector<Elem> src = interval_members(l, x, y);
  const Elem lo = l.meet(x, z), hi = l.meet(y, z);
  const std::vector<Elem> dst = interval_members(l, lo, hi);
  std::vector<int> local(l.size(), -1);
  for (std::size_t i = 0; i < dst.size(); ++i) local[dst[i]] = static_cast<int>(i);
  std::vector<Elem> table(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) table[i] = static_cast<Elem>(local[l.meet(src[i], z)]);
  return LatticeMap{interval(l, x, y), interval(l, lo, hi), std::move(table)};
}

Elem meet_slice_preimage(const DistLattice& l, Elem x, Elem y, Elem u) { return l.join(x, l.meet(u, y)); }

LatticeMap birkhoff_map(const DistLattice& l) {
  const JoinIrreducibles ji = join_irreducibles(l);
  DistLattice src = downset_lattice(ji.poset);
  std::vector<Elem> table(src.size());
  for (std::size_t d = 0; d < src.size(); ++d) {
    Elem acc = l.bot();
    src.masks()[d].for_each([&](std::size_t j) { acc = l.join(acc, ji.elements[j]); });
    table[d] = acc;
  }
  return LatticeMap{std::move(src), l, std::move(table)};
}

std::optional<std::vector<Elem>> lattice_isomorphic(const DistLattice& a, const DistLattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  const JoinIrreducibles ja = join_irreducibles(a);
  const JoinIrreducibles jb = join_irreducibles(b);
  auto iso = poset_isomorphic(ja.poset, jb.poset);
  if (!iso) return std::nullopt;
  std::vector<Elem> table(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    Elem acc = b.bot();
    for (std::size_t j = 0; j < ja.elements.size(); ++j) {
      if (a.leq(ja.elements[j], static_cast<Elem>(x))) acc = b.join(acc, jb.elements[(*iso)[j]]);
    }
    table[x] = acc;
  }
  LatticeMap m{a, b, table};
  if (!m.injective() || !m.surjective() || !is_lattice_homomorphism(m).ok) return std::nullopt;
  return table;
}

std::optional<std::array<Elem, 3>> distributivity_violation(const DistLattice& l) {
  const std::size_t n = l.size();
  auto bad = [&](Elem a, Elem b, Elem c) { return l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)); };
  if (n <= 200) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          const Elem x = static_cast<Elem>(a), y = static_cast<Elem>(b), z = static_cast<Elem>(c);
          if (bad(x, y, z)) return std::array<Elem, 3>{x, y, z};
        }
      }
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int i = 0; i < 200000; ++i) {
    const Elem x = static_cast<Elem>(pick(rng)), y = static_cast<Elem>(pick(rng)), z = static_cast<Elem>(pick(rng));
    if (bad(x, y, z)) return std::array<Elem, 3>{x, y, z};
  }
  return std::nullopt;
}

}  // namespace brouwer
