#pragma once

// Exhaustive solvers for small instances. They share nothing with the
// dynamic program or the heuristic and serve as ground truth for both.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "rim/assignment.hpp"
#include "rim/instance.hpp"

namespace rim {

struct OracleResult {
  std::uint32_t optimum = 0;
  ReceiverAssignment witness;
  std::optional<std::uint64_t> optimal_count;
};

inline constexpr std::size_t kDefaultOracleCap1D = 9;
inline constexpr std::size_t kDefaultOracleCap2D = 7;
/// Upper limit for explicit cap overrides; coverage sets are 32-bit masks.
inline constexpr std::size_t kOracleHardCap = 16;

/// Minimum interference over all rooted in-trees on P. The witness is the
/// first minimizer in (root, parent of point 0, parent of point 1, ...) order.
OracleResult brute_force_1d(const Instance1D& inst, std::size_t cap = kDefaultOracleCap1D);

using AssignmentVisitor = std::function<void(const ReceiverAssignment&)>;

/// Calls `visit` for every valid assignment attaining the optimum, in the
/// same order as brute_force_1d. Returns the optimum.
std::uint32_t enumerate_optimal_1d(const Instance1D& inst, const AssignmentVisitor& visit,
                                   std::size_t cap = kDefaultOracleCap1D);

/// brute_force_1d with optimal_count filled in.
OracleResult count_optimal_1d(const Instance1D& inst, std::size_t cap = kDefaultOracleCap1D);

/// Every valid sink tree on n points (no geometry, no pruning).
void for_each_sink_tree(std::size_t n, const AssignmentVisitor& visit);

/// Minimum interference over all total receiver maps with a strongly
/// connected communication graph.
OracleResult brute_force_2d(const Instance2D& inst, std::size_t cap = kDefaultOracleCap2D);

}  // namespace rim
