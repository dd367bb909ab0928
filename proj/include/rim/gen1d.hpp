#pragma once

// Line instances with known optimum structure:
//   P_i   recursive doubling, |P_i| = 2^i, optimum i;
//   Q_k   blocks R_2..R_{k+2} alternating around a = 0, optimum k + 2 with
//         at least k bends in every optimal assignment;
//   log-lower  P_{floor(log2 n)} padded with far filler points.

#include <cstdint>
#include <string>
#include <vector>

#include "rim/assignment.hpp"
#include "rim/instance.hpp"

namespace rim {

enum class Family { kP, kQ, kLogLower, kRandom };
enum class RootSide { kLeft, kRight };

struct FamilyInstance {
  Instance1D instance;
  Family family;
  std::int64_t parameter = 0;
  /// Block name per point index ("a", "R_2", ...); empty for families without blocks.
  std::vector<std::string> block_of;
};

inline constexpr int kMaxP = 20;
inline constexpr int kMaxQ = 10;

/// (3^i - 1) / 2, the diameter of P_i.
std::int64_t p_diameter(int i);
/// (3^{k+3} - 2^{k+3} - 1) / 2, the diameter of Q_k.
std::int64_t q_diameter(int k);

std::vector<std::int64_t> p_coordinates(int i);

FamilyInstance gen_p(int i);

/// Recursive construction on gen_p(i): both halves rooted on `side`, the far
/// half's root attached to the near half's extreme point facing it.
ReceiverAssignment optimal_assignment_p(int i, RootSide side);

FamilyInstance gen_q(int k);

/// Each block R_j carries the P assignment rooted at its point closest to a;
/// a feeds R_2, and each block root feeds the next block's root.
ReceiverAssignment optimal_assignment_q(int k);

FamilyInstance gen_log_lower(std::int64_t n);

/// n distinct integers drawn uniformly from [0, max_coord] with a
/// splitmix64 stream seeded by `seed`.
FamilyInstance gen_random(std::size_t n, std::int64_t max_coord, std::uint64_t seed);

}  // namespace rim
