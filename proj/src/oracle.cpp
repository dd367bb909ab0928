#include "rim/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <vector>

#include "rim/errors.hpp"
#include "rim/model.hpp"

namespace rim {
namespace {

using Mask = std::uint32_t;

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (cap > kOracleHardCap) {
    throw RefusedError(std::string(what) + ": cap " + std::to_string(cap) + " exceeds hard limit " +
                       std::to_string(kOracleHardCap));
  }
  if (n > cap) {
    throw RefusedError(std::string(what) + ": " + std::to_string(n) + " points exceed the enumeration cap of " +
                       std::to_string(cap));
  }
}

// cover[p * n + q] = points inside the closed ball centered at p through q.
template <typename Inst>
std::vector<Mask> coverage_table(const Inst& inst) {
  const auto n = static_cast<PointId>(inst.size());
  std::vector<Mask> cover(static_cast<std::size_t>(n) * n, 0);
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = 0; q < n; ++q) {
      if (p == q) continue;
      Mask m = 0;
      for (PointId x = 0; x < n; ++x) {
        if (ball_contains(inst, p, q, x)) m |= Mask{1} << x;
      }
      cover[p * n + q] = m;
    }
  }
  return cover;
}

// Depth-first enumeration of in-trees with incremental coverage counts.
// A branch is cut as soon as some point's count exceeds `limit`; counts only
// grow along a branch, so the cut never discards a tree within the limit.
class TreeEnumerator {
 public:
  TreeEnumerator(std::size_t n, std::vector<Mask> cover)
      : n_(static_cast<PointId>(n)), cover_(std::move(cover)), parent_(n, kNoPoint), counts_(n, 0) {}

  // `on_leaf` returns the new limit (it may tighten during a search).
  template <typename Leaf>
  void run(std::uint32_t limit, Leaf&& on_leaf) {
    limit_ = limit;
    for (PointId root = 0; root < n_; ++root) {
      root_ = root;
      order_.clear();
      for (PointId p = 0; p < n_; ++p) {
        if (p != root) order_.push_back(p);
      }
      recurse(0, on_leaf);
    }
  }

  PointId root() const { return root_; }
  const std::vector<PointId>& parents() const { return parent_; }
  std::uint32_t max_count() const { return *std::max_element(counts_.begin(), counts_.end()); }

 private:
  bool closes_cycle(PointId p, PointId q) const {
    while (q != kNoPoint) {
      if (q == p) return true;
      q = parent_[q];
    }
    return false;
  }

  template <typename Leaf>
  void recurse(std::size_t k, Leaf& on_leaf) {
    if (k == order_.size()) {
      limit_ = on_leaf(*this);
      return;
    }
    const PointId p = order_[k];
    for (PointId q = 0; q < n_; ++q) {
      if (q == p || closes_cycle(p, q)) continue;
      const Mask m = cover_.empty() ? 0 : cover_[p * n_ + q];
      bool over = false;
      for (Mask bits = m; bits; bits &= bits - 1) {
        over |= ++counts_[std::countr_zero(bits)] > limit_;
      }
      if (!over) {
        parent_[p] = q;
        recurse(k + 1, on_leaf);
        parent_[p] = kNoPoint;
      }
      for (Mask bits = m; bits; bits &= bits - 1) --counts_[std::countr_zero(bits)];
    }
  }

  PointId n_;
  std::vector<Mask> cover_;
  std::vector<PointId> parent_;
  std::vector<std::uint32_t> counts_;
  std::vector<PointId> order_;
  PointId root_ = 0;
  std::uint32_t limit_ = 0;
};

ReceiverAssignment snapshot(const TreeEnumerator& e) {
  return ReceiverAssignment::sink_tree(e.parents(), e.root());
}

OracleResult search_1d(const Instance1D& inst, std::size_t cap) {
  check_cap(inst.size(), cap, "brute_force_1d");
  const auto n = inst.size();
  if (n == 1) return {0, ReceiverAssignment::sink_tree({kNoPoint}, 0), std::nullopt};
  TreeEnumerator e(n, coverage_table(inst));
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  std::optional<ReceiverAssignment> witness;
  // Start at n - 1 (a chain always achieves at most that) and keep only
  // strict improvements, so the first minimizer wins.
  e.run(static_cast<std::uint32_t>(n - 1), [&](const TreeEnumerator& leaf) {
    const std::uint32_t value = leaf.max_count();
    if (value < best) {
      best = value;
      witness = snapshot(leaf);
    }
    return best - 1;
  });
  if (!witness) throw InvariantError("brute_force_1d found no valid assignment");
  return {best, std::move(*witness), std::nullopt};
}

}  // namespace

OracleResult brute_force_1d(const Instance1D& inst, std::size_t cap) { return search_1d(inst, cap); }

std::uint32_t enumerate_optimal_1d(const Instance1D& inst, const AssignmentVisitor& visit, std::size_t cap) {
  const auto best = search_1d(inst, cap);
  if (inst.size() == 1) {
    visit(best.witness);
    return 0;
  }
  TreeEnumerator e(inst.size(), coverage_table(inst));
  e.run(best.optimum, [&](const TreeEnumerator& leaf) {
    visit(snapshot(leaf));
    return best.optimum;
  });
  return best.optimum;
}

OracleResult count_optimal_1d(const Instance1D& inst, std::size_t cap) {
  auto result = search_1d(inst, cap);
  std::uint64_t count = 0;
  enumerate_optimal_1d(inst, [&](const ReceiverAssignment&) { ++count; }, cap);
  result.optimal_count = count;
  return result;
}

void for_each_sink_tree(std::size_t n, const AssignmentVisitor& visit) {
  if (n == 0) return;
  if (n > kOracleHardCap) throw RefusedError("for_each_sink_tree: n exceeds hard cap");
  if (n == 1) {
    visit(ReceiverAssignment::sink_tree({kNoPoint}, 0));
    return;
  }
  TreeEnumerator e(n, {});
  e.run(std::numeric_limits<std::uint32_t>::max(), [&](const TreeEnumerator& leaf) {
    visit(snapshot(leaf));
    return std::numeric_limits<std::uint32_t>::max();
  });
}

OracleResult brute_force_2d(const Instance2D& inst, std::size_t cap) {
  check_cap(inst.size(), cap, "brute_force_2d");
  const auto n = static_cast<PointId>(inst.size());
  if (n < 2) throw InputError("brute_force_2d needs at least two points");
  const auto cover = coverage_table(inst);
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;

  std::vector<PointId> rec(n, kNoPoint);
  std::vector<std::uint32_t> counts(n, 0);
  std::uint32_t best = n + 1;
  std::optional<ReceiverAssignment> witness;

  auto strongly_connected = [&]() {
    // Out-neighborhoods are the coverage masks minus the center itself.
    std::vector<Mask> out(n), in(n, 0);
    for (PointId p = 0; p < n; ++p) {
      out[p] = cover[p * n + rec[p]] & ~(Mask{1} << p);
      for (Mask bits = out[p]; bits; bits &= bits - 1) in[std::countr_zero(bits)] |= Mask{1} << p;
    }
    auto closure = [&](const std::vector<Mask>& adj) {
      Mask seen = 1, frontier = 1;
      while (frontier) {
        Mask next = 0;
        for (Mask bits = frontier; bits; bits &= bits - 1) next |= adj[std::countr_zero(bits)];
        frontier = next & ~seen;
        seen |= next;
      }
      return seen;
    };
    return closure(out) == all && closure(in) == all;
  };

  auto recurse = [&](auto& self, PointId p) -> void {
    if (p == n) {
      const std::uint32_t value = *std::max_element(counts.begin(), counts.end());
      if (value < best && strongly_connected()) {
        best = value;
        witness = ReceiverAssignment::asym2d(rec);
      }
      return;
    }
    for (PointId q = 0; q < n; ++q) {
      if (q == p) continue;
      const Mask m = cover[p * n + q];
      bool over = false;
      for (Mask bits = m; bits; bits &= bits - 1) over |= ++counts[std::countr_zero(bits)] >= best;
      if (!over) {
        rec[p] = q;
        self(self, p + 1);
        rec[p] = kNoPoint;
      }
      for (Mask bits = m; bits; bits &= bits - 1) --counts[std::countr_zero(bits)];
    }
  };
  recurse(recurse, 0);
  if (!witness) throw InvariantError("brute_force_2d found no valid assignment");
  return {best, std::move(*witness), std::nullopt};
}

}  // namespace rim
