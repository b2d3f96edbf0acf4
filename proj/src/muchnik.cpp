#include "brouwer/muchnik.hpp"

#include <algorithm>
#include <unordered_map>

#include "brouwer/errors.hpp"
#include "brouwer/structure.hpp"

namespace brouwer {

namespace {

void same_ambient(const MassProblem& a, const MassProblem& b) {
  if (!(a.ambient == b.ambient)) throw AmbientMismatch();
}

SubsetMask strict_cone(const Poset& p, std::size_t f) {
  SubsetMask m = p.up(f);
  m.reset(f);
  return m;
}

std::string describe(const Poset& p, const SubsetMask& m) {
  std::string s = "{";
  bool first = true;
  m.for_each([&](std::size_t i) {
    if (!first) s += ",";
    s += p.label(i);
    first = false;
  });
  return s + "}";
}

}  // namespace

DegreePoset::DegreePoset(Poset order) {
  auto d = std::make_shared<Data>();
  d->order = std::move(order);
  const Poset& p = d->order;
  auto least = p.least();
  if (!least) throw Error("degree poset needs a least element");
  if (p.size() > 255) throw Error("degree posets are limited to 255 points");
  d->zero = *least;
  const std::size_t n = p.size();
  std::vector<std::uint8_t> join(n * n);
  for (std::size_t a = 0; a < n && !d->join_failure; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const SubsetMask mins = minimal_elements(p, p.up(a) & p.up(b));
      if (mins.count() != 1) {
        d->join_failure = std::make_pair(a, b);
        break;
      }
      join[a * n + b] = join[b * n + a] = static_cast<std::uint8_t>(mins.lowest());
    }
  }
  if (!d->join_failure) d->join = std::move(join);
  d_ = std::move(d);
}

std::size_t DegreePoset::join(std::size_t a, std::size_t b) const {
  if (!has_joins()) throw NoJoinTable();
  return d_->join[a * size() + b];
}

MassProblem MassProblem::of(const DegreePoset& d, const std::vector<std::string>& labels) {
  MassProblem m{d, SubsetMask{}};
  for (const std::string& l : labels) {
    auto i = d.order().index_of(l);
    if (!i) throw UnknownLabel(l);
    m.members.set(*i);
  }
  return m;
}

bool muchnik_leq(const MassProblem& a, const MassProblem& b) {
  same_ambient(a, b);
  bool ok = true;
  b.members.for_each([&](std::size_t g) {
    if (ok && !a.ambient.order().down(g).intersects(a.members)) ok = false;
  });
  return ok;
}

SimDegree degree_of(const MassProblem& a) { return {up_closure(a.ambient.order(), a.members)}; }

SimDegree degree_meet(const MassProblem& a, const MassProblem& b) {
  same_ambient(a, b);
  return {up_closure(a.ambient.order(), a.members | b.members)};
}

SimDegree degree_join(const MassProblem& a, const MassProblem& b) {
  same_ambient(a, b);
  return {degree_of(a).closure & degree_of(b).closure};
}

MassProblem muchnik_arrow(const MassProblem& a, const MassProblem& b, ArrowMode mode) {
  same_ambient(a, b);
  const DegreePoset& d = a.ambient;
  if (mode == ArrowMode::Auto) mode = d.has_joins() ? ArrowMode::Formula : ArrowMode::Lattice;
  const SubsetMask cb = degree_of(b).closure;
  MassProblem out{d, SubsetMask{}};
  if (mode == ArrowMode::Formula) {
    if (!d.has_joins()) throw NoJoinTable();
    for (std::size_t f = 0; f < d.size(); ++f) {
      bool ok = true;
      a.members.for_each([&](std::size_t g) {
        if (ok && !cb.test(d.join(g, f))) ok = false;
      });
      if (ok) out.members.set(f);
    }
  } else {
    const SubsetMask ca = degree_of(a).closure;
    for (std::size_t x = 0; x < d.size(); ++x) {
      if ((d.order().up(x) & ca).subset_of(cb)) out.members.set(x);
    }
  }
  return out;
}

MassProblem solvability_successor(const DegreePoset& d, std::size_t f) {
  return {d, strict_cone(d.order(), f)};
}

DistLattice degree_interval(const MassProblem& x, const MassProblem& y, std::size_t max_elements) {
  same_ambient(x, y);
  const Poset& p = x.ambient.order();
  const SubsetMask cx = degree_of(x).closure;
  const SubsetMask cy = degree_of(y).closure;
  if (!cy.subset_of(cx)) throw EmptyInterval("degree interval needs X <=_w Y");
  const SubsetMask region = cx - cy;
  std::vector<SubsetMask> ups = enumerate_upsets(p, region, max_elements);
  if (ups.size() > max_elements) throw SizeBudgetExceeded("degree interval exceeds the element budget");
  std::reverse(ups.begin(), ups.end());
  const std::size_t n = ups.size();

  std::unordered_map<SubsetMask, Elem, SubsetMaskHash> index;
  std::vector<SubsetMask> masks(n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    masks[i] = cy | ups[i];
    index.emplace(masks[i], static_cast<Elem>(i));
    labels[i] = describe(p, ups[i]);
  }
  std::vector<Elem> join(n * n), meet(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      join[i * n + j] = join[j * n + i] = index.at(masks[i] & masks[j]);
      meet[i * n + j] = meet[j * n + i] = index.at(masks[i] | masks[j]);
    }
  }
  return DistLattice::from_tables(n, std::move(join), std::move(meet), 0, static_cast<Elem>(n - 1),
                                  std::move(labels), "degree_interval", std::move(masks));
}

DistLattice degree_lattice(const DegreePoset& d, std::size_t max_elements) {
  return degree_interval(MassProblem::everything(d), MassProblem::empty(d), max_elements);
}

Construction assemble_construction(DegreePoset master, std::vector<ConstructionLevel> levels, std::size_t top,
                                   std::size_t generics_per_point) {
  Construction c{std::move(master), std::move(levels), generics_per_point, top, "collapse-to-top", {}, {}};
  const Poset& p = c.master.order();
  for (ConstructionLevel& l : c.levels) {
    l.j_image = SubsetMask{};
    for (std::size_t f : l.j_points) l.j_image.set(f);
    l.j_hat = maximal_elements(p, l.j_image);
    l.z = SubsetMask{};
    for (const auto& gs : l.generics) {
      for (std::size_t g : gs) l.z.set(g);
    }
    c.z_hat |= l.z;
  }
  for (ConstructionLevel& l : c.levels) {
    SubsetMask cones;
    l.j_hat.for_each([&](std::size_t f) { cones |= strict_cone(p, f); });
    l.x = l.z | l.j_image;
    l.y = l.z | cones;
    l.x_hat = c.z_hat | l.j_image;
    l.y_hat = c.z_hat | cones;
    c.y_hat |= l.y_hat;
  }
  return c;
}

Construction build_master_poset(const std::vector<DistLattice>& levels, std::size_t generics_per_point) {
  if (levels.empty()) throw PolicyUnsatisfiable("construction needs at least one level");
  if (generics_per_point == 0) throw PolicyUnsatisfiable("at least one generic per point is required");
  std::vector<ConstructionLevel> out;
  std::vector<std::string> labels{"0"};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t n = 0; n < levels.size(); ++n) {
    if (auto w = dd_like_witness(levels[n])) {
      const DistLattice& l = levels[n];
      throw PolicyUnsatisfiable("level " + std::to_string(n + 1) + " is dd-like: " + l.label(w->a0) + ", " +
                                l.label(w->a1) + " have minimal upper bounds " + l.label(w->a2) + " and " +
                                l.label(w->a3));
    }
    JoinIrreducibles ji = join_irreducibles(levels[n]);
    ConstructionLevel level{levels[n], ji.poset, ji.elements, {}, {}, {}, {}, {}, {}, {}, {}, {}};
    const std::string prefix = "L" + std::to_string(n + 1) + ":";
    const std::size_t base = labels.size();
    for (std::size_t i = 0; i < ji.poset.size(); ++i) {
      level.j_points.push_back(base + i);
      labels.push_back(prefix + ji.poset.label(i));
      pairs.emplace_back(0, base + i);
    }
    for (std::size_t a = 0; a < ji.poset.size(); ++a) {
      for (std::size_t b = 0; b < ji.poset.size(); ++b) {
        if (ji.poset.lt(a, b)) pairs.emplace_back(base + a, base + b);
      }
    }
    for (std::size_t i = 0; i < ji.poset.size(); ++i) {
      std::vector<std::size_t> gs;
      for (std::size_t k = 0; k < generics_per_point; ++k) {
        const std::size_t g = labels.size();
        labels.push_back(prefix + ji.poset.label(i) + "/g" + std::to_string(k));
        pairs.emplace_back(base + i, g);
        gs.push_back(g);
      }
      level.generics.push_back(std::move(gs));
    }
    out.push_back(std::move(level));
  }
  const std::size_t top = labels.size();
  labels.push_back("T");
  for (std::size_t i = 0; i < top; ++i) pairs.emplace_back(i, top);
  if (labels.size() > kMaxPoints) {
    throw PolicyUnsatisfiable("master poset needs " + std::to_string(labels.size()) + " points, limit is " +
                              std::to_string(kMaxPoints));
  }
  const std::size_t n_points = labels.size();
  DegreePoset master(Poset::from_indices(n_points, pairs, std::move(labels)));
  if (auto bad = master.join_failure()) {
    throw PolicyUnsatisfiable("not an upper semilattice: " + master.label(bad->first) + " and " +
                              master.label(bad->second) + " have no least upper bound");
  }
  return assemble_construction(std::move(master), std::move(out), top, generics_per_point);
}

std::vector<PropertyCheck> check_properties(const Construction& c) {
  const Poset& p = c.master.order();
  PropertyCheck two{"(2)", true, ""}, three{"(3)", true, ""}, four{"(4)", true, ""};
  auto fail = [](PropertyCheck& pc, std::string w) {
    if (pc.ok) {
      pc.ok = false;
      pc.witness = std::move(w);
    }
  };
  for (std::size_t n = 0; n < c.levels.size(); ++n) {
    const ConstructionLevel& l = c.levels[n];
    for (std::size_t i = 0; i < l.j_points.size(); ++i) {
      const std::size_t f = l.j_points[i];
      if (l.generics[i].empty()) fail(two, "Z^f is empty for f = " + p.label(f));
      for (std::size_t g : l.generics[i]) {
        if (!p.lt(f, g)) fail(two, p.label(g) + " is not above " + p.label(f));
        for (std::size_t h : l.j_poset.upper_covers(i)) {
          if (p.comparable(g, l.j_points[h])) {
            fail(two, p.label(g) + " is comparable with the cover " + p.label(l.j_points[h]) + " of " + p.label(f));
          }
        }
      }
    }
  }
  for (std::size_t n = 0; n < c.levels.size(); ++n) {
    for (std::size_t m = 0; m < c.levels.size(); ++m) {
      if (m == n) continue;
      for (std::size_t f : c.levels[n].j_points) {
        c.levels[m].z.for_each([&](std::size_t z) {
          if (p.leq(z, f)) fail(three, p.label(f) + " is above " + p.label(z) + " in Z_" + std::to_string(m + 1));
        });
      }
    }
  }
  if (c.levels.size() > 1 && !c.master.has_joins()) fail(four, "the master poset has no join table");
  if (c.master.has_joins()) {
    for (std::size_t m = 0; m < c.levels.size(); ++m) {
      for (std::size_t n = 0; n < c.levels.size(); ++n) {
        if (m == n) continue;
        c.levels[m].j_hat.for_each([&](std::size_t f) {
          c.levels[n].j_hat.for_each([&](std::size_t g) {
            for (std::size_t h : c.levels[n].j_points) {
              const std::size_t j = c.master.join(f, h);
              if (!p.lt(g, j)) {
                fail(four, p.label(f) + " (+) " + p.label(h) + " = " + p.label(j) + " is not above " + p.label(g));
              }
            }
          });
        });
      }
    }
  }
  return {two, three, four};
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.ok; });
}

VerifyReport verify_construction(const Construction& c, const std::vector<Formula>& corpus,
                                 const VerifyOptions& options) {
  VerifyReport report;
  for (const PropertyCheck& pc : check_properties(c)) {
    report.checks.push_back({pc.property, 0, pc.ok, pc.witness});
  }
  const Poset& p = c.master.order();
  auto interval_of = [&](const SubsetMask& x, const SubsetMask& y) {
    return degree_interval(c.problem(x), c.problem(y), options.max_elements);
  };

  for (std::size_t n = 0; n < c.levels.size(); ++n) {
    const ConstructionLevel& l = c.levels[n];
    const std::size_t lv = n + 1;

    DistLattice in = interval_of(l.x, l.y);
    {
      CheckResult r{"a", lv, true, ""};
      if (!lattice_isomorphic(in, l.algebra)) {
        r.ok = false;
        r.detail = "[X_n, Y_n] has " + std::to_string(in.size()) + " elements and " +
                   std::to_string(in.join_irreducible_elements().size()) + " join-irreducibles; B_n has " +
                   std::to_string(l.algebra.size()) + " and " +
                   std::to_string(l.algebra.join_irreducible_elements().size());
      } else {
        r.detail = "iso, " + std::to_string(in.size()) + " elements";
      }
      report.checks.push_back(std::move(r));
    }

    {
      CheckResult r{"b", lv, true, ""};
      DistLattice hat = interval_of(l.x_hat, l.y_hat);
      const SubsetMask cz = up_closure(p, c.z_hat);
      std::unordered_map<SubsetMask, Elem, SubsetMaskHash> where;
      for (std::size_t i = 0; i < hat.size(); ++i) where.emplace(hat.masks()[i], static_cast<Elem>(i));
      std::vector<Elem> table(in.size());
      for (std::size_t i = 0; i < in.size() && r.ok; ++i) {
        auto it = where.find(in.masks()[i] | cz);
        if (it == where.end()) {
          r.ok = false;
          r.detail = "image of " + in.label(static_cast<Elem>(i)) + " is outside [X-hat_n, Y-hat_n]";
        } else {
          table[i] = it->second;
        }
      }
      if (r.ok) {
        LatticeMap m{in, hat, table};
        HomomorphismReport h = is_lattice_homomorphism(m);
        if (!h.ok) {
          r.ok = false;
          r.detail = "not a homomorphism (" + h.failure + ")";
        } else if (!m.injective() || !m.surjective()) {
          r.ok = false;
          r.detail = "not a bijection: " + std::to_string(in.size()) + " -> " + std::to_string(hat.size());
        } else {
          r.detail = "iso, " + std::to_string(hat.size()) + " elements";
        }
      }
      report.checks.push_back(std::move(r));
    }

    {
      CheckResult r{"c", lv, true, ""};
      const SimDegree lhs = degree_join(c.problem(c.y_hat), c.problem(l.x_hat));
      const SimDegree rhs = degree_of(c.problem(l.y_hat));
      if (!(lhs == rhs)) {
        r.ok = false;
        r.detail = "Y-hat v X-hat_n = " + describe(p, lhs.closure) + ", Y-hat_n = " + describe(p, rhs.closure);
      }
      report.checks.push_back(std::move(r));
    }
  }

  CheckResult d{"d", 0, true, ""};
  report.corpus_size = corpus.size();
  try {
    DistLattice factor = interval_of(p.all(), c.y_hat);
    report.factor_size = factor.size();
    for (const Formula& f : corpus) {
      bool refuted = false;
      for (const ConstructionLevel& l : c.levels) {
        if (is_valid(f, l.algebra, Semantics::Brouwer, options.search).verdict == Verdict::Invalid) {
          refuted = true;
          break;
        }
      }
      if (!refuted) continue;
      ++report.refuted_by_levels;
      const ValidityResult r = is_valid(f, factor, Semantics::Brouwer, options.search);
      if (r.verdict == Verdict::Invalid) {
        ++report.refuted_by_factor;
      } else if (d.ok) {
        d.ok = false;
        d.detail = "factor does not refute " + f.to_string() + " although a level does";
      }
    }
    if (d.ok) {
      d.detail = std::to_string(report.refuted_by_factor) + "/" + std::to_string(report.refuted_by_levels) +
                 " level-refuted formulas refuted by the factor (" + std::to_string(factor.size()) + " elements)";
    }
  } catch (const Error& e) {
    d.ok = false;
    d.detail = e.what();
  }
  report.checks.push_back(std::move(d));
  return report;
}

std::optional<Construction> corrupt_generic_below_cover(const Construction& c) {
  for (const ConstructionLevel& l : c.levels) {
    for (std::size_t i = 0; i < l.j_points.size(); ++i) {
      auto covers = l.j_poset.upper_covers(i);
      if (covers.empty() || l.generics[i].empty()) continue;
      const Poset& p = c.master.order();
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = 0; b < p.size(); ++b) {
          if (p.lt(a, b)) pairs.emplace_back(a, b);
        }
      }
      pairs.emplace_back(l.generics[i][0], l.j_points[covers.front()]);
      DegreePoset master(Poset::from_indices(p.size(), pairs, p.labels()));
      return assemble_construction(std::move(master), c.levels, c.top, c.generics_per_point);
    }
  }
  return std::nullopt;
}

}  // namespace brouwer
