#include "brouwer/semantics.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "brouwer/errors.hpp"
#include "brouwer/tower.hpp"

namespace brouwer {

const char* to_string(Semantics s) { return s == Semantics::Brouwer ? "brouwer" : "heyting"; }

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Valid:
      return "valid";
    case Verdict::Invalid:
      return "invalid";
    default:
      return "unknown";
  }
}

Elem designated(const DistLattice& l, Semantics s) { return s == Semantics::Brouwer ? l.bot() : l.top(); }

unsigned effective_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

// A formula flattened to straight-line code over its distinct subformulas.
struct Program {
  struct Instr {
    Op op;
    std::uint32_t a = 0, b = 0, var = 0;
    std::uint64_t deps = 0;  // bit i: depends on variable i
  };
  std::vector<std::string> vars;
  std::vector<Instr> code;
  // recompute[p]: instructions depending on any variable >= p.
  std::vector<std::vector<std::uint32_t>> recompute;

  explicit Program(const Formula& f) : vars(f.variables()) {
    if (vars.size() > 64) throw Error("formulas with more than 64 variables are not supported");
    std::map<Formula, std::uint32_t> index;
    for (const Formula& sub : f.subformulas()) {
      Instr ins{sub.op()};
      switch (sub.op()) {
        case Op::Var:
          ins.var = static_cast<std::uint32_t>(std::lower_bound(vars.begin(), vars.end(), sub.name()) - vars.begin());
          ins.deps = std::uint64_t{1} << ins.var;
          break;
        case Op::Bot:
        case Op::Top:
          break;
        case Op::Not:
          ins.a = index.at(sub.lhs());
          ins.deps = code[ins.a].deps;
          break;
        default:
          ins.a = index.at(sub.lhs());
          ins.b = index.at(sub.rhs());
          ins.deps = code[ins.a].deps | code[ins.b].deps;
          break;
      }
      index.emplace(sub, static_cast<std::uint32_t>(code.size()));
      code.push_back(ins);
    }
    recompute.resize(vars.size());
    for (std::size_t p = 0; p < vars.size(); ++p) {
      const std::uint64_t mask = ~((std::uint64_t{1} << p) - 1);
      for (std::uint32_t i = 0; i < code.size(); ++i) {
        if (code[i].deps & mask) recompute[p].push_back(i);
      }
    }
  }
};

struct Tables {
  std::size_t n;
  const Elem* conj;
  const Elem* disj;
  const Elem* imp;
  std::vector<Elem> neg;
  Elem bot_value, top_value, target;

  Tables(const DistLattice& l, Semantics s) : n(l.size()) {
    const bool brouwer = s == Semantics::Brouwer;
    conj = (brouwer ? l.join_table() : l.meet_table()).data();
    disj = (brouwer ? l.meet_table() : l.join_table()).data();
    imp = (brouwer ? l.brouwer_table() : l.heyting_table()).data();
    neg.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      neg[a] = brouwer ? l.brouwer_neg(static_cast<Elem>(a)) : l.heyting_neg(static_cast<Elem>(a));
    }
    bot_value = brouwer ? l.top() : l.bot();
    top_value = brouwer ? l.bot() : l.top();
    target = designated(l, s);
  }

  Elem step(const Program::Instr& ins, const std::vector<Elem>& vals, const std::vector<Elem>& digits) const {
    switch (ins.op) {
      case Op::Var:
        return digits[ins.var];
      case Op::Bot:
        return bot_value;
      case Op::Top:
        return top_value;
      case Op::Not:
        return neg[vals[ins.a]];
      case Op::And:
        return conj[vals[ins.a] * n + vals[ins.b]];
      case Op::Or:
        return disj[vals[ins.a] * n + vals[ins.b]];
      case Op::Imp:
        return imp[vals[ins.a] * n + vals[ins.b]];
    }
    return 0;
  }
};

void decode(std::uint64_t index, std::size_t n, std::vector<Elem>& digits) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = static_cast<Elem>(index % n);
    index /= n;
  }
}

std::uint64_t encode(const std::vector<Elem>& digits, std::size_t n) {
  std::uint64_t index = 0;
  for (Elem d : digits) index = index * n + d;
  return index;
}

// First refuting valuation index in [lo, hi), or kNone. Gives up early once
// another worker has found something smaller.
std::uint64_t scan(const Program& p, const Tables& t, std::uint64_t lo, std::uint64_t hi,
                   const std::atomic<std::uint64_t>* best) {
  const std::size_t k = p.vars.size();
  std::vector<Elem> digits(k);
  decode(lo, t.n, digits);
  std::vector<Elem> vals(p.code.size());
  for (std::size_t i = 0; i < p.code.size(); ++i) vals[i] = t.step(p.code[i], vals, digits);
  const std::size_t root = p.code.size() - 1;
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    if (vals[root] != t.target) return idx;
    if (best != nullptr && (idx & 4095) == 0 && best->load(std::memory_order_relaxed) < idx) return kNone;
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < t.n) break;
      digits[pos] = 0;
      if (pos == 0) return kNone;
    }
    if (k == 0) return kNone;
    for (std::uint32_t i : p.recompute[pos]) vals[i] = t.step(p.code[i], vals, digits);
  }
  return kNone;
}

std::uint64_t valuation_count(std::size_t n, std::size_t k) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > kNone / std::max<std::size_t>(n, 1)) return kNone;
    total *= n;
  }
  return total;
}

Valuation to_valuation(const Program& p, std::uint64_t index, std::size_t n) {
  std::vector<Elem> digits(p.vars.size());
  decode(index, n, digits);
  Valuation v;
  for (std::size_t i = 0; i < digits.size(); ++i) v.emplace(p.vars[i], digits[i]);
  return v;
}

}  // namespace

Elem evaluate(const Formula& f, const DistLattice& l, const Valuation& v, Semantics s) {
  const Program p(f);
  std::vector<Elem> digits(p.vars.size());
  for (std::size_t i = 0; i < p.vars.size(); ++i) {
    auto it = v.find(p.vars[i]);
    if (it == v.end()) throw UnboundVariable(p.vars[i]);
    if (it->second >= l.size()) throw Error("value of '" + p.vars[i] + "' is not an element of the lattice");
    digits[i] = it->second;
  }
  const Tables t(l, s);
  std::vector<Elem> vals(p.code.size());
  for (std::size_t i = 0; i < p.code.size(); ++i) vals[i] = t.step(p.code[i], vals, digits);
  return vals.back();
}

Elem eval_brouwer(const Formula& f, const DistLattice& l, const Valuation& v) {
  return evaluate(f, l, v, Semantics::Brouwer);
}

Elem eval_heyting(const Formula& f, const DistLattice& l, const Valuation& v) {
  return evaluate(f, l, v, Semantics::Heyting);
}

ValidityResult is_valid(const Formula& f, const DistLattice& l, Semantics s, const SearchOptions& options) {
  const Program p(f);
  const Tables t(l, s);
  const std::uint64_t total = valuation_count(l.size(), p.vars.size());
  ValidityResult result;

  if (total > options.max_valuations) {
    if (!options.sampled) {
      throw ValuationBudgetExceeded(std::to_string(l.size()) + "^" + std::to_string(p.vars.size()) +
                                    " valuations exceed the budget of " + std::to_string(options.max_valuations));
    }
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, l.size() - 1);
    std::uint64_t best = kNone;
    std::vector<Elem> digits(p.vars.size());
    for (std::uint64_t i = 0; i < options.samples; ++i) {
      for (Elem& d : digits) d = static_cast<Elem>(pick(rng));
      const std::uint64_t idx = encode(digits, l.size());
      if (idx >= best) continue;
      if (scan(p, t, idx, idx + 1, nullptr) == idx) best = idx;
    }
    result.sampled = true;
    result.valuations = options.samples;
    if (best == kNone) {
      result.verdict = Verdict::Unknown;
    } else {
      result.verdict = Verdict::Invalid;
      result.counterexample = to_valuation(p, best, l.size());
    }
    return result;
  }

  const unsigned threads = effective_threads(options.threads);
  std::uint64_t found = kNone;
  if (threads <= 1 || total < 1U << 15) {
    found = scan(p, t, 0, total, nullptr);
  } else {
    const std::uint64_t chunk = std::max<std::uint64_t>(1U << 12, total / (threads * 16ULL));
    const std::uint64_t chunks = (total + chunk - 1) / chunk;
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{kNone};
    auto worker = [&] {
      for (;;) {
        const std::uint64_t c = next.fetch_add(1);
        if (c >= chunks) return;
        const std::uint64_t lo = c * chunk;
        if (lo > best.load()) return;
        const std::uint64_t hit = scan(p, t, lo, std::min(total, lo + chunk), &best);
        if (hit != kNone) {
          std::uint64_t cur = best.load();
          while (hit < cur && !best.compare_exchange_weak(cur, hit)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    found = best.load();
  }
  result.valuations = found == kNone ? total : found + 1;
  if (found != kNone) {
    result.verdict = Verdict::Invalid;
    result.counterexample = to_valuation(p, found, l.size());
  }
  return result;
}

std::string Countermodel::describe() const {
  if (family == "tower") return "I" + std::to_string(level);
  std::string s = family + "(" + std::to_string(poset ? poset->size() : 0) + " points";
  if (poset) {
    for (auto [a, b] : poset->covers()) s += ", " + poset->label(a) + "<" + poset->label(b);
  }
  return s + ")";
}

const std::vector<DistLattice>& downset_algebras(std::size_t n) {
  static std::mutex mu;
  static std::deque<std::vector<DistLattice>> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    std::vector<DistLattice> level;
    for (const Poset& p : posets_of_size(cache.size())) level.push_back(downset_lattice(p));
    cache.push_back(std::move(level));
  }
  return cache[n];
}

const std::vector<Poset>& directed_frames(std::size_t n) {
  static std::mutex mu;
  static std::deque<std::vector<Poset>> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    const std::size_t m = cache.size();
    std::vector<Poset> level;
    if (m > 0) {
      for (const Poset& base : posets_of_size(m - 1)) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < base.size(); ++a) {
          for (std::size_t b = 0; b < base.size(); ++b) {
            if (a != b && base.leq(a, b)) pairs.emplace_back(a, b);
          }
          pairs.emplace_back(a, m - 1);
        }
        level.push_back(Poset::from_indices(m, pairs));
      }
    }
    cache.push_back(std::move(level));
  }
  return cache[n];
}

const std::vector<DistLattice>& directed_frame_algebras(std::size_t n) {
  static std::mutex mu;
  static std::deque<std::vector<DistLattice>> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    std::vector<DistLattice> level;
    for (const Poset& p : directed_frames(cache.size())) level.push_back(upset_lattice(p));
    cache.push_back(std::move(level));
  }
  return cache[n];
}

CountermodelSearch search_countermodel(const Formula& f, Family family, const CountermodelBudget& budget) {
  CountermodelSearch out;
  const std::size_t k = f.variables().size();
  SearchOptions opts;
  opts.max_valuations = budget.max_valuations;
  opts.threads = budget.threads;

  auto attempt = [&](const DistLattice& l) -> std::optional<Valuation> {
    if (l.size() > budget.max_elements || valuation_count(l.size(), k) > budget.max_valuations) {
      out.exhausted_budget = true;
      return std::nullopt;
    }
    ++out.algebras_tried;
    ValidityResult r = is_valid(f, l, budget.semantics, opts);
    if (r.verdict == Verdict::Invalid) return r.counterexample;
    return std::nullopt;
  };

  if (family == Family::TowerThenPosets || family == Family::Tower) {
    for (int n = 1; n <= budget.max_tower_level; ++n) {
      if (jaskowski_size(n) > budget.max_elements) {
        out.exhausted_budget = true;
        break;
      }
      const TowerLevel level = jaskowski_algebra(n, budget.max_elements);
      const DistLattice& l = budget.semantics == Semantics::Heyting ? level.algebra : level.dual_algebra;
      if (auto v = attempt(l)) {
        out.countermodel = Countermodel{"tower", n, std::nullopt, l, *v, budget.semantics};
        return out;
      }
    }
    if (family == Family::Tower) out.exhausted_budget = true;
  }
  if (family == Family::TowerThenPosets || family == Family::Posets || family == Family::DirectedFrames) {
    const bool frames = family == Family::DirectedFrames;
    std::size_t posets_tried = 0;
    for (std::size_t n = 1; n <= budget.max_poset_points; ++n) {
      const auto& algebras = frames ? directed_frame_algebras(n) : downset_algebras(n);
      const auto& posets = frames ? directed_frames(n) : posets_of_size(n);
      for (std::size_t i = 0; i < algebras.size(); ++i) {
        if (posets_tried++ >= budget.max_posets) {
          out.exhausted_budget = true;
          return out;
        }
        DistLattice l = budget.semantics == Semantics::Heyting ? algebras[i] : dual(algebras[i]);
        if (auto v = attempt(l)) {
          out.countermodel =
              Countermodel{frames ? "frame" : "downsets", static_cast<int>(n), posets[i], l, *v, budget.semantics};
          return out;
        }
      }
    }
    out.exhausted_budget = true;
  }
  return out;
}

std::optional<Countermodel> find_countermodel(const Formula& f, Family family, const CountermodelBudget& budget) {
  return search_countermodel(f, family, budget).countermodel;
}

}  // namespace brouwer
