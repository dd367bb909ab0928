#pragma once

// Exact 1D solver: dynamic programming over subproblems
//   (interval of consecutive points, root, incoming ranges, outgoing ranges).
//
// A subproblem asks for a BST-shaped in-tree on the interval rooted at
// `root`, where `outgoing` is exactly the set of the tree's ranges that reach
// outside the interval plus the root's range to its parent (absent only for
// the whole instance), and `incoming` is exactly the set of foreign ranges
// covering some point of the interval. Its value is the largest coverage
// count at a point of the interval.

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "rim/assignment.hpp"
#include "rim/instance.hpp"
#include "rim/oracle.hpp"

namespace rim {

/// Point count limit of the DP (coverage sets are 64-bit masks).
inline constexpr std::size_t kDpMaxPoints = 64;

struct Subproblem {
  PointId lo = 0;
  PointId hi = 0;
  PointId root = 0;
  std::vector<Range> incoming;  // sorted by (center, boundary)
  std::vector<Range> outgoing;  // sorted by (center, boundary)

  friend bool operator==(const Subproblem&, const Subproblem&) = default;
};

struct DpValue {
  static constexpr std::uint32_t kInfinity = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t interference = kInfinity;
  /// Child subproblems of the best decomposition (absent for empty sides).
  std::optional<Subproblem> left;
  std::optional<Subproblem> right;

  bool feasible() const { return interference != kInfinity; }
};

struct DpStats {
  std::uint64_t subproblems = 0;  // distinct subproblems evaluated
  std::uint64_t memo_hits = 0;
  std::uint64_t child_pairs = 0;  // consistent (left, right) pairs examined
  std::uint32_t cap = 0;          // interference cap of the final run
};

/// ceil(log2 n) + 2, the NNA guarantee. solve_exact caps at the smaller of this and the NNA value.
std::uint32_t default_dp_cap(std::size_t n);

/// Memoized solver for one instance and one interference cap. Subproblem
/// values above the cap are reported as infinite.
class DpSolver {
 public:
  DpSolver(const Instance1D& inst, std::uint32_t cap);
  ~DpSolver();
  DpSolver(const DpSolver&) = delete;
  DpSolver& operator=(const DpSolver&) = delete;

  /// Throws InputError if `sub` is not well formed for this instance.
  DpValue solve_subproblem(const Subproblem& sub);

  /// Best root for the whole instance, or nullopt if nothing fits under the cap.
  std::optional<OracleResult> solve_global();

  const DpStats& stats() const { return stats_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  DpStats stats_;
};

/// Minimum over all roots with cap ceil(log2 n) + 2. The witness is checked
/// against an independent interference computation before returning.
OracleResult solve_exact(const Instance1D& inst, DpStats* stats = nullptr);

/// Same DP with caps 1, 2, 3, ...; stops at the first feasible cap.
OracleResult solve_opt_search(const Instance1D& inst, DpStats* stats = nullptr);

/// solve_exact with an explicit cap (nullopt if infeasible under it).
std::optional<OracleResult> solve_with_cap(const Instance1D& inst, std::uint32_t cap,
                                           DpStats* stats = nullptr);

}  // namespace rim
