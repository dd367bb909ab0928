#pragma once
// Helpers shared by the unit tests. The naive_* functions recompute values
// straight from the definitions and never call into the solvers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "rim/assignment.hpp"
#include "rim/instance.hpp"
#include "rim/model.hpp"

namespace rim::testing {

inline Instance1D line(std::initializer_list<std::int64_t> xs) {
  std::vector<std::int64_t> v(xs);
  return Instance1D::from_integers(v);
}

inline Instance1D random_line(std::mt19937_64& rng, std::size_t n, std::int64_t max_coord) {
  std::uniform_int_distribution<std::int64_t> d(0, max_coord);
  std::set<std::int64_t> s;
  while (s.size() < n) s.insert(d(rng));
  std::vector<std::int64_t> v(s.begin(), s.end());
  return Instance1D::from_integers(v);
}

/// Coverage count of the closed balls (p, N(p)) at x, straight from the definition.
inline std::uint32_t naive_interference_at(const Instance1D& inst, const ReceiverAssignment& n, PointId x) {
  std::uint32_t c = 0;
  for (PointId p = 0; p < inst.size(); ++p) {
    if (!n.has_receiver(p)) continue;
    if ((inst[x] - inst[p]).abs() <= (inst[n.receiver(p)] - inst[p]).abs()) ++c;
  }
  return c;
}

inline std::uint32_t naive_interference(const Instance1D& inst, const ReceiverAssignment& n) {
  std::uint32_t best = 0;
  for (PointId x = 0; x < inst.size(); ++x) best = std::max(best, naive_interference_at(inst, n, x));
  return best;
}

/// Follows receivers from every point; valid iff each walk hits the sink
/// within n steps.
inline bool naive_is_tree(const ReceiverAssignment& n) {
  const auto sink = *n.sink();
  for (PointId p = 0; p < n.size(); ++p) {
    PointId q = p;
    std::size_t steps = 0;
    while (q != sink && steps <= n.size()) {
      q = n.receiver(q);
      ++steps;
    }
    if (q != sink) return false;
  }
  return true;
}

/// Every map P \ {r} -> P with no fixed point, for every root r; filtered to
/// in-trees. Exponential: n^(n-1) candidates per root.
inline void naive_for_each_tree(std::size_t n, const std::function<void(const ReceiverAssignment&)>& visit) {
  for (PointId root = 0; root < n; ++root) {
    std::vector<PointId> rec(n, 0);
    std::function<void(PointId)> go = [&](PointId p) {
      if (p == n) {
        auto a = ReceiverAssignment::sink_tree(rec, root);
        if (naive_is_tree(a)) visit(a);
        return;
      }
      if (p == root) {
        rec[p] = kNoPoint;
        go(p + 1);
        return;
      }
      for (PointId q = 0; q < n; ++q) {
        if (q == p) continue;
        rec[p] = q;
        go(p + 1);
      }
    };
    go(0);
  }
}

inline std::uint32_t naive_optimum_1d(const Instance1D& inst) {
  std::uint32_t best = UINT32_MAX;
  if (inst.size() == 1) return 0;
  naive_for_each_tree(inst.size(), [&](const ReceiverAssignment& a) {
    best = std::min(best, naive_interference(inst, a));
  });
  return best;
}

/// Uniformly random labelled in-tree: random attachment order.
inline ReceiverAssignment random_tree(std::mt19937_64& rng, std::size_t n) {
  std::vector<PointId> order(n);
  for (PointId i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<PointId> rec(n, kNoPoint);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> d(0, i - 1);
    rec[order[i]] = order[d(rng)];
  }
  return ReceiverAssignment::sink_tree(rec, order[0]);
}

}  // namespace rim::testing
