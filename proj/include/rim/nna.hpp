#pragma once

// Nearest-neighbor component merging on the line.
//
// Starts from singletons. In each round every component's sink picks its
// closest point outside the component; the resulting successor edges join
// components into clusters with exactly one mutual pair, one of whose sinks
// survives. All ties resolve toward the smaller coordinate.

#include <cstdint>
#include <vector>

#include "rim/assignment.hpp"
#include "rim/instance.hpp"

namespace rim {

struct NnaComponent {
  PointId lo = 0;  // member interval [lo, hi] of the sorted order
  PointId hi = 0;
  PointId sink = 0;
  friend bool operator==(const NnaComponent&, const NnaComponent&) = default;
};

struct NnaPartition {
  std::vector<NnaComponent> components;  // left to right, disjoint, covering all points
  std::vector<PointId> receivers;        // partial map; kNoPoint at every sink
};

NnaPartition nna_singletons(const Instance1D& inst);

/// One merge round. Throws InputError for fewer than two components.
NnaPartition nna_round(const Instance1D& inst, const NnaPartition& current);

struct NnaResult {
  ReceiverAssignment assignment;
  std::uint32_t rounds = 0;
  std::vector<std::vector<NnaComponent>> trace;  // partition after each round (if requested)
};

NnaResult nna(const Instance1D& inst, bool keep_trace = false);

}  // namespace rim
