#include "rim/dp_solver.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <unordered_map>

#include "rim/errors.hpp"
#include "rim/model.hpp"
#include "rim/nna.hpp"

namespace rim {
namespace {

using Mask = std::uint64_t;
using RangeId = std::uint16_t;
using Key = std::u16string;

constexpr std::uint32_t kInf = DpValue::kInfinity;

Mask interval_mask(PointId lo, PointId hi) {
  // Bits lo..hi inclusive; callers guarantee lo <= hi < 64.
  const Mask upto_hi = hi == 63 ? ~Mask{0} : (Mask{1} << (hi + 1)) - 1;
  return upto_hi & ~((Mask{1} << lo) - 1);
}

// Foreign ranges only matter through how many of them cover each point of
// the interval, so a state stores that load profile instead of the ranges.
struct State {
  PointId lo = 0;
  PointId hi = 0;
  PointId root = 0;
  std::vector<std::uint8_t> load;  // load[x - lo] for x in [lo, hi]
  std::vector<RangeId> out;
};

Key encode(const State& s) {
  Key k;
  k.reserve(3 + s.load.size() + s.out.size());
  k.push_back(static_cast<char16_t>(s.lo));
  k.push_back(static_cast<char16_t>(s.hi));
  k.push_back(static_cast<char16_t>(s.root));
  for (std::uint8_t c : s.load) k.push_back(static_cast<char16_t>(c));
  for (RangeId r : s.out) k.push_back(static_cast<char16_t>(r));
  return k;
}

State decode(const Key& k) {
  State s;
  s.lo = k[0];
  s.hi = k[1];
  s.root = k[2];
  const std::size_t len = s.hi - s.lo + 1;
  for (std::size_t i = 0; i < len; ++i) s.load.push_back(static_cast<std::uint8_t>(k[3 + i]));
  for (std::size_t i = 3 + len; i < k.size(); ++i) s.out.push_back(k[i]);
  return s;
}

struct Entry {
  std::uint32_t value = kInf;
  Key left;   // empty when the side is empty or the value is infinite
  Key right;
};

// One admissible outgoing set for a child side.
struct SideOption {
  PointId root = kNoPoint;  // kNoPoint for an empty side
  std::vector<RangeId> out;
  std::uint32_t covers_parent_root = 0;
};

}  // namespace

struct DpSolver::Impl {
  Impl(const Instance1D& inst, std::uint32_t cap_, DpStats& stats_)
      : n(static_cast<PointId>(inst.size())), cap(cap_), stats(stats_) {
    cover.assign(static_cast<std::size_t>(n) * n, 0);
    for (PointId p = 0; p < n; ++p) {
      for (PointId q = 0; q < n; ++q) {
        if (p == q) continue;
        Mask m = 0;
        for (PointId x = 0; x < n; ++x) {
          if (ball_contains(inst, p, q, x)) m |= Mask{1} << x;
        }
        cover[id(p, q)] = m;
      }
    }
    all = interval_mask(0, n - 1);
  }

  RangeId id(PointId center, PointId boundary) const { return static_cast<RangeId>(center * n + boundary); }
  PointId center(RangeId r) const { return r / n; }
  PointId boundary(RangeId r) const { return r % n; }
  bool covers(RangeId r, PointId x) const { return (cover[r] >> x) & 1; }

  std::uint32_t solve(const State& s, const Key& key);

  // Lower bound at every point: foreign load, the declared outgoing ranges
  // (they are ranges of points inside), and the point's own range when it is
  // not among them. The global root has no range of its own.
  std::uint32_t lower_bound(const State& s) const {
    const bool global = s.lo == 0 && s.hi == n - 1;
    Mask declared = 0;
    for (RangeId r : s.out) declared |= Mask{1} << center(r);
    std::uint32_t best = 0;
    for (PointId x = s.lo; x <= s.hi; ++x) {
      std::uint32_t v = s.load[x - s.lo];
      for (RangeId r : s.out) v += covers(r, x);
      if (!((declared >> x) & 1) && !(global && x == s.root)) ++v;
      best = std::max(best, v);
    }
    return best;
  }
  bool exceeds_cap(const State& s) const { return lower_bound(s) > cap; }
  std::vector<SideOption> side_options(const State& s, PointId a_lo, PointId a_hi,
                                       std::uint32_t budget) const;

  PointId n;
  std::uint32_t cap;
  DpStats& stats;
  std::vector<Mask> cover;
  Mask all = 0;
  std::unordered_map<Key, Entry> memo;
};

std::vector<SideOption> DpSolver::Impl::side_options(const State& s, PointId a_lo, PointId a_hi,
                                                     std::uint32_t budget) const {
  std::vector<SideOption> options;
  const Mask side = interval_mask(a_lo, a_hi);
  const Mask parent = interval_mask(s.lo, s.hi);
  const Mask outside = all & ~parent;
  const Mask rest = parent & ~side;

  std::vector<RangeId> forced;
  Mask forced_centers = 0;
  for (RangeId r : s.out) {
    if ((side >> center(r)) & 1) {
      forced.push_back(r);
      forced_centers |= Mask{1} << center(r);
    }
  }

  for (PointId child_root = a_lo; child_root <= a_hi; ++child_root) {
    const RangeId up = id(child_root, s.root);
    const bool up_forced = std::binary_search(forced.begin(), forced.end(), up);
    if (((forced_centers >> child_root) & 1) && !up_forced) continue;  // wrong parent
    if ((cover[up] & outside) && !up_forced) continue;                  // undeclared escape

    std::vector<RangeId> base = forced;
    if (!up_forced) base.insert(std::lower_bound(base.begin(), base.end(), up), up);
    std::uint32_t base_cover = 0;
    for (RangeId r : base) base_cover += covers(r, s.root);
    if (base_cover > budget) continue;
    const Mask used_centers = forced_centers | (Mask{1} << child_root);

    // Extra ranges: centered in the side, reaching the rest of the parent
    // interval (hence its root) but nothing outside it. At most one per center.
    std::vector<std::vector<RangeId>> by_center;
    for (PointId p = a_lo; p <= a_hi; ++p) {
      if ((used_centers >> p) & 1) continue;
      std::vector<RangeId> cands;
      for (PointId q = a_lo; q <= a_hi; ++q) {
        if (q == p) continue;
        const RangeId r = id(p, q);
        if ((cover[r] & rest) && !(cover[r] & outside)) cands.push_back(r);
      }
      if (!cands.empty()) by_center.push_back(std::move(cands));
    }

    const std::uint32_t extra_budget = budget - base_cover;
    std::vector<RangeId> chosen;
    auto emit = [&]() {
      SideOption opt;
      opt.root = child_root;
      opt.out = base;
      for (RangeId r : chosen) opt.out.push_back(r);
      std::sort(opt.out.begin(), opt.out.end());
      opt.covers_parent_root = base_cover + static_cast<std::uint32_t>(chosen.size());
      options.push_back(std::move(opt));
    };
    auto pick = [&](auto& self, std::size_t i) -> void {
      if (i == by_center.size()) {
        emit();
        return;
      }
      self(self, i + 1);
      if (chosen.size() >= extra_budget) return;
      for (RangeId r : by_center[i]) {
        chosen.push_back(r);
        self(self, i + 1);
        chosen.pop_back();
      }
    };
    pick(pick, 0);
  }
  return options;
}

std::uint32_t DpSolver::Impl::solve(const State& s, const Key& key) {
  if (auto it = memo.find(key); it != memo.end()) {
    ++stats.memo_hits;
    return it->second.value;
  }
  ++stats.subproblems;
  const bool global = s.lo == 0 && s.hi == n - 1;

  std::optional<RangeId> own;
  for (RangeId r : s.out) {
    if (center(r) == s.root) own = r;
  }

  Entry entry;
  auto finish = [&](Entry e) {
    const auto value = e.value;
    memo.emplace(key, std::move(e));
    return value;
  };

  if (!global && !own) return finish(entry);

  if (s.lo == s.hi) {
    if (global) {
      entry.value = 0;
    } else if (s.out.size() == 1) {
      const auto v = static_cast<std::uint32_t>(s.load[0]) + 1;
      if (v <= cap) entry.value = v;
    }
    return finish(entry);
  }

  std::uint32_t base = (own ? 1 : 0) + s.load[s.root - s.lo];
  if (base > cap) return finish(entry);

  const bool has_left = s.root > s.lo;
  const bool has_right = s.root < s.hi;
  std::vector<SideOption> left{SideOption{}};
  std::vector<SideOption> right{SideOption{}};
  if (has_left) left = side_options(s, s.lo, s.root - 1, cap - base);
  if (has_right) right = side_options(s, s.root + 1, s.hi, cap - base);

  // Child load: the parent's load on that side, plus the other side's
  // outgoing ranges and the root's own range. Every child point also carries
  // its own range, so a load of cap already rules the child out.
  auto child = [&](PointId a_lo, PointId a_hi, PointId root, const std::vector<RangeId>& other_out,
                   const std::vector<RangeId>& out) -> std::optional<State> {
    State c{a_lo, a_hi, root, {s.load.begin() + (a_lo - s.lo), s.load.begin() + (a_hi - s.lo + 1)}, out};
    auto add = [&](RangeId r) {
      Mask m = cover[r] & interval_mask(a_lo, a_hi);
      while (m) {
        const auto x = static_cast<PointId>(std::countr_zero(m));
        m &= m - 1;
        ++c.load[x - a_lo];
      }
    };
    for (RangeId r : other_out) add(r);
    if (own) add(*own);
    if (exceeds_cap(c)) return std::nullopt;
    return c;
  };

  // A side option influences its sibling only through its ranges reaching
  // across the root, so sibling values are cached per distinct crossing set.
  struct Eval {
    std::uint32_t value = kInf;
    Key key;
  };
  auto crossing = [&](const std::vector<SideOption>& opts, bool sibling, PointId a_lo, PointId a_hi) {
    std::vector<std::vector<RangeId>> sets;
    std::vector<std::uint32_t> ids(opts.size(), 0);
    if (!sibling) return std::make_pair(sets, ids);
    std::map<std::vector<RangeId>, std::uint32_t> index;
    const Mask side = interval_mask(a_lo, a_hi);
    for (std::size_t i = 0; i < opts.size(); ++i) {
      std::vector<RangeId> cross;
      for (RangeId r : opts[i].out) {
        if (cover[r] & side) cross.push_back(r);
      }
      const auto [it, fresh] = index.emplace(cross, static_cast<std::uint32_t>(sets.size()));
      if (fresh) sets.push_back(std::move(cross));
      ids[i] = it->second;
    }
    return std::make_pair(sets, ids);
  };
  const auto [into_left, r_ids] = crossing(right, has_left, s.lo, has_left ? s.root - 1 : s.lo);
  const auto [into_right, l_ids] = crossing(left, has_right, has_right ? s.root + 1 : s.hi, s.hi);
  std::unordered_map<std::uint64_t, Eval> left_cache, right_cache;
  auto evaluate = [&](std::unordered_map<std::uint64_t, Eval>& cache, std::size_t opt, std::uint32_t via,
                      PointId a_lo, PointId a_hi, const SideOption& o,
                      const std::vector<RangeId>& cross) -> const Eval& {
    const std::uint64_t k = (std::uint64_t{opt} << 32) | via;
    if (auto it = cache.find(k); it != cache.end()) return it->second;
    Eval e;
    if (const auto c = child(a_lo, a_hi, o.root, cross, o.out)) {
      e.key = encode(*c);
      e.value = solve(*c, e.key);
    }
    return cache.emplace(k, std::move(e)).first->second;
  };

  const std::uint32_t floor = lower_bound(s);
  for (std::size_t li = 0; li < left.size() && entry.value > floor; ++li) {
    for (std::size_t ri = 0; ri < right.size() && entry.value > floor; ++ri) {
      const std::uint32_t at_root = base + left[li].covers_parent_root + right[ri].covers_parent_root;
      if (at_root > cap || at_root >= entry.value) continue;
      ++stats.child_pairs;
      std::uint32_t value = at_root;
      const Eval* l = nullptr;
      const Eval* r = nullptr;
      if (has_left) {
        l = &evaluate(left_cache, li, r_ids[ri], s.lo, s.root - 1, left[li], into_left[r_ids[ri]]);
        value = std::max(value, l->value);
        if (value >= entry.value) continue;
      }
      if (has_right) {
        r = &evaluate(right_cache, ri, l_ids[li], s.root + 1, s.hi, right[ri], into_right[l_ids[li]]);
        value = std::max(value, r->value);
        if (value >= entry.value) continue;
      }
      entry.value = value;
      entry.left = l ? l->key : Key{};
      entry.right = r ? r->key : Key{};
    }
  }
  return finish(std::move(entry));
}

std::uint32_t default_dp_cap(std::size_t n) {
  std::uint32_t log = 0;
  while ((std::size_t{1} << log) < n) ++log;
  return log + 2;
}

DpSolver::DpSolver(const Instance1D& inst, std::uint32_t cap) {
  if (inst.size() > kDpMaxPoints) {
    throw RefusedError("dp solver supports at most " + std::to_string(kDpMaxPoints) + " points");
  }
  stats_.cap = cap;
  impl_ = std::make_unique<Impl>(inst, cap, stats_);
}

DpSolver::~DpSolver() = default;

DpValue DpSolver::solve_subproblem(const Subproblem& sub) {
  auto& im = *impl_;
  if (sub.lo > sub.hi || sub.hi >= im.n || sub.root < sub.lo || sub.root > sub.hi) {
    throw InputError("malformed subproblem interval");
  }
  const Mask inside = interval_mask(sub.lo, sub.hi);
  const Mask outside = im.all & ~inside;
  std::vector<RangeId> in;
  for (const auto& r : sub.incoming) {
    if (r.center >= im.n || r.boundary >= im.n || r.center == r.boundary) throw InputError("bad range");
    const RangeId id = im.id(r.center, r.boundary);
    if (((inside >> r.center) & 1) || !(im.cover[id] & inside)) {
      throw InputError("incoming range must be centered outside and cover a point inside");
    }
    in.push_back(id);
  }
  std::sort(in.begin(), in.end());
  if (std::adjacent_find(in.begin(), in.end()) != in.end()) throw InputError("duplicate incoming range");

  State s{sub.lo, sub.hi, sub.root, std::vector<std::uint8_t>(sub.hi - sub.lo + 1, 0), {}};
  for (RangeId r : in) {
    for (PointId x = sub.lo; x <= sub.hi; ++x) {
      if (im.covers(r, x)) ++s.load[x - sub.lo];
    }
  }
  Mask centers = 0;
  for (const auto& r : sub.outgoing) {
    if (r.center >= im.n || r.boundary >= im.n || r.center == r.boundary) throw InputError("bad range");
    const RangeId id = im.id(r.center, r.boundary);
    if (!((inside >> r.center) & 1)) throw InputError("outgoing range must be centered inside");
    if (!(im.cover[id] & outside) && r.center != sub.root) {
      throw InputError("outgoing range must reach outside or be centered at the root");
    }
    if ((centers >> r.center) & 1) throw InputError("two outgoing ranges share a center");
    centers |= Mask{1} << r.center;
    s.out.push_back(id);
  }
  std::sort(s.out.begin(), s.out.end());

  const Key key = encode(s);
  DpValue v;
  v.interference = im.solve(s, key);
  if (!v.feasible()) return v;
  const Entry& e = im.memo.at(key);
  const State l = e.left.empty() ? State{} : decode(e.left);
  const State r = e.right.empty() ? State{} : decode(e.right);
  // The children's incoming ranges: ours on their side, the sibling's
  // outgoing ranges, and our root's own range.
  auto to_sub = [&](const State& c, const std::vector<RangeId>& sibling_out) {
    Subproblem out{c.lo, c.hi, c.root, {}, {}};
    const Mask side = interval_mask(c.lo, c.hi);
    std::vector<RangeId> cin;
    for (RangeId x : in) {
      if (im.cover[x] & side) cin.push_back(x);
    }
    for (RangeId x : sibling_out) {
      if (im.cover[x] & side) cin.push_back(x);
    }
    for (RangeId x : s.out) {
      if (im.center(x) == s.root && (im.cover[x] & side)) cin.push_back(x);
    }
    std::sort(cin.begin(), cin.end());
    for (RangeId x : cin) out.incoming.push_back({im.center(x), im.boundary(x)});
    for (RangeId x : c.out) out.outgoing.push_back({im.center(x), im.boundary(x)});
    return out;
  };
  if (!e.left.empty()) v.left = to_sub(l, r.out);
  if (!e.right.empty()) v.right = to_sub(r, l.out);
  return v;
}

std::optional<OracleResult> DpSolver::solve_global() {
  auto& im = *impl_;
  std::uint32_t best = kInf;
  Key best_key;
  for (PointId r = 0; r < im.n; ++r) {
    State s{0, static_cast<PointId>(im.n - 1), r, std::vector<std::uint8_t>(im.n, 0), {}};
    Key key = encode(s);
    const auto v = im.solve(s, key);
    if (v < best) {
      best = v;
      best_key = std::move(key);
    }
  }
  if (best == kInf) return std::nullopt;

  std::vector<PointId> rec(im.n, kNoPoint);
  const PointId sink = decode(best_key).root;
  std::vector<Key> stack{best_key};
  while (!stack.empty()) {
    const Key k = std::move(stack.back());
    stack.pop_back();
    const PointId root = decode(k).root;
    const Entry& e = im.memo.at(k);
    for (const Key* child : {&e.left, &e.right}) {
      if (child->empty()) continue;
      rec[decode(*child).root] = root;
      stack.push_back(*child);
    }
  }
  return OracleResult{best, ReceiverAssignment::sink_tree(std::move(rec), sink), std::nullopt};
}

namespace {

void verify_witness(const Instance1D& inst, const OracleResult& r) {
  if (!is_valid(inst, r.witness)) throw InvariantError("dp witness is not a valid sink tree");
  const auto recomputed = interference(inst, r.witness);
  if (recomputed != r.optimum) {
    throw InvariantError("dp reported " + std::to_string(r.optimum) + " but its witness has interference " +
                         std::to_string(recomputed));
  }
}

void accumulate(DpStats* into, const DpStats& from) {
  if (!into) return;
  into->subproblems += from.subproblems;
  into->memo_hits += from.memo_hits;
  into->child_pairs += from.child_pairs;
  into->cap = from.cap;
}

}  // namespace

std::optional<OracleResult> solve_with_cap(const Instance1D& inst, std::uint32_t cap, DpStats* stats) {
  DpSolver solver(inst, cap);
  auto result = solver.solve_global();
  accumulate(stats, solver.stats());
  if (result) verify_witness(inst, *result);
  return result;
}

OracleResult solve_exact(const Instance1D& inst, DpStats* stats) {
  std::uint32_t cap = default_dp_cap(inst.size());
  if (inst.size() <= kDpMaxPoints) cap = std::min(cap, interference(inst, nna(inst).assignment));
  auto result = solve_with_cap(inst, cap, stats);
  if (!result) throw InvariantError("no assignment within the NNA value");
  return std::move(*result);
}

OracleResult solve_opt_search(const Instance1D& inst, DpStats* stats) {
  const std::uint32_t limit = default_dp_cap(inst.size());
  for (std::uint32_t cap = 1; cap <= limit; ++cap) {
    if (auto result = solve_with_cap(inst, cap, stats)) return std::move(*result);
  }
  throw InvariantError("no assignment within ceil(log2 n) + 2; contradicts the NNA bound");
}

}  // namespace rim
