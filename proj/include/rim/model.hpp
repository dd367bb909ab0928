#pragma once

// Interference model: communication graphs, validity, transmission ranges,
// interference, and the structural predicates on 1D sink trees.
//
// Every geometric comparison is exact. Balls are closed and a point is
// covered by its own ball.

#include <cstdint>
#include <optional>
#include <vector>

#include "rim/assignment.hpp"
#include "rim/instance.hpp"

namespace rim {

/// Adjacency lists; out[p] is sorted ascending.
struct DirectedGraph {
  std::vector<std::vector<PointId>> out;

  std::size_t size() const { return out.size(); }
  std::size_t edge_count() const;
  bool has_edge(PointId from, PointId to) const;
};

bool is_strongly_connected(const DirectedGraph& g);

/// Edge p->q for every q != p with |p - q| <= |p - N(p)|.
DirectedGraph communication_graph_2d(const Instance2D& inst, const ReceiverAssignment& n);

/// The single-edge graph p -> N(p) of a sink tree.
DirectedGraph communication_graph_1d(const Instance1D& inst, const ReceiverAssignment& n);

bool is_valid(const Instance2D& inst, const ReceiverAssignment& n);
bool is_valid(const Instance1D& inst, const ReceiverAssignment& n);

/// One range (p, N(p)) per point that has a receiver, ordered by center.
std::vector<Range> balls(const ReceiverAssignment& n);

std::uint32_t interference_at(const Instance1D& inst, const ReceiverAssignment& n, PointId p);
std::uint32_t interference_at(const Instance2D& inst, const ReceiverAssignment& n, PointId p);

/// Coverage count at every point. Uses the SIMD coverage kernel when the
/// coordinates embed into bounded integers, the exact rational path otherwise.
std::vector<std::uint32_t> interference_profile(const Instance1D& inst, const ReceiverAssignment& n);
std::vector<std::uint32_t> interference_profile(const Instance2D& inst, const ReceiverAssignment& n);

/// Rational-only reference for interference_profile (no integer embedding).
std::vector<std::uint32_t> interference_profile_exact(const Instance2D& inst,
                                                      const ReceiverAssignment& n);

std::uint32_t interference(const Instance1D& inst, const ReceiverAssignment& n);
std::uint32_t interference(const Instance2D& inst, const ReceiverAssignment& n);

/// Tree edges (p, N(p)) whose open interval holds a non-descendant of p.
/// Throws InputError when `n` is not a valid sink tree.
std::vector<Range> cross_edges(const Instance1D& inst, const ReceiverAssignment& n);

/// Both BST conditions: at most one child per side, and every node's
/// descendant span contains only its descendants.
bool has_bst_property(const Instance1D& inst, const ReceiverAssignment& n);

/// Edges joining points that are not neighbors in sorted order.
std::uint32_t count_bends(const Instance1D& inst, const ReceiverAssignment& n);

/// The assignment on inst.mirrored(): index i becomes size-1-i.
ReceiverAssignment mirror_assignment(const ReceiverAssignment& n);

/// Integer embedding of a point set: coordinates multiplied by a common
/// denominator. Empty when the result would exceed the kernel's range.
struct IntegerEmbedding {
  std::int64_t scale = 1;
  std::vector<std::int64_t> x;
  std::vector<std::int64_t> y;
};
std::optional<IntegerEmbedding> embed_integer(std::span<const Point2> points);

}  // namespace rim
