#pragma once

// Planar hardness construction: every vertex of a max-degree-3 grid graph is
// replaced by a 13-point gadget
//
//   M            main point at the grid vertex
//   S_i, S_i'    three satellite stations, S_i at v + d/4 for a direction d
//                and S_i' an epsilon step clockwise from it
//   C            connector at the free direction, epsilon further out
//   I_c, I_1..4  inhibitor: I_c = M + 2(C - M) + eps (C - M)/|C - M|, and
//                I_j at the four epsilon offsets of I_c (I_1 nearest C)
//
// Satellites of adjacent gadgets facing the same grid edge are partners.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rim/assignment.hpp"
#include "rim/instance.hpp"

namespace rim {

struct GridVertex {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const GridVertex&, const GridVertex&) = default;
  friend auto operator<=>(const GridVertex&, const GridVertex&) = default;
};

/// Fixed order used for every tie-break: +x < -x < +y < -y.
enum class Direction : std::uint8_t { kPosX, kNegX, kPosY, kNegY };
inline constexpr std::array<Direction, 4> kAllDirections{Direction::kPosX, Direction::kNegX, Direction::kPosY,
                                                         Direction::kNegY};
GridVertex step(GridVertex v, Direction d);
std::string_view direction_name(Direction d);

/// Grid graph on distinct lattice points; u ~ v iff |u - v|_1 = 1.
/// Construction enforces connectivity and maximum degree 3.
class GridGraph {
 public:
  static GridGraph from_vertices(std::vector<GridVertex> vertices);

  std::size_t size() const { return vertices_.size(); }
  const GridVertex& vertex(std::uint32_t i) const { return vertices_[i]; }
  std::span<const GridVertex> vertices() const { return vertices_; }
  std::optional<std::uint32_t> index_of(GridVertex v) const;
  /// Neighbor indices in ascending order.
  const std::vector<std::uint32_t>& neighbors(std::uint32_t i) const { return adj_[i]; }
  std::vector<Direction> incident_directions(std::uint32_t i) const;
  bool adjacent(std::uint32_t a, std::uint32_t b) const;

 private:
  std::vector<GridVertex> vertices_;
  std::vector<std::vector<std::uint32_t>> adj_;
};

enum class Role : std::uint8_t { kM, kS1, kS1p, kS2, kS2p, kS3, kS3p, kC, kIc, kI1, kI2, kI3, kI4 };
inline constexpr std::size_t kGadgetSize = 13;
std::string_view role_name(Role r);

/// 1/64.
Rational default_epsilon();

struct GadgetLayout {
  GridVertex vertex;
  Rational epsilon;
  std::array<Point2, kGadgetSize> points;            // indexed by Role
  std::array<Direction, 3> satellite_directions{};   // of S1, S2, S3
  Direction connector_direction = Direction::kNegY;

  const Point2& operator[](Role r) const { return points[static_cast<std::size_t>(r)]; }
};

/// Satellites go to the incident directions, padded with the smallest free
/// directions up to three; the connector takes the last free direction.
GadgetLayout build_gadget(GridVertex v, std::span<const Direction> incident, const Rational& epsilon);

struct ReductionOutput {
  Instance2D instance;
  GridGraph graph;
  Rational epsilon;
  std::vector<GadgetLayout> gadgets;        // per grid vertex index
  std::vector<std::uint32_t> gadget_of;     // point -> grid vertex index
  std::vector<Role> role_of;                // point -> role
  std::vector<PointId> partner;             // S_i point -> partner S point, else kNoPoint

  static PointId point(std::uint32_t vertex_index, Role r) {
    return static_cast<PointId>(vertex_index * kGadgetSize + static_cast<std::size_t>(r));
  }
};

/// Builds every gadget and runs check_gadget_geometry; throws InputError if
/// the epsilon is outside the range where the geometry holds.
ReductionOutput reduce(const GridGraph& g, const Rational& epsilon);

struct GeometryReport {
  std::vector<std::string> failures;
  std::size_t checks = 0;
  bool ok() const { return failures.empty(); }
};

GeometryReport check_gadget_geometry(const ReductionOutput& r);

using GridEdge = std::pair<std::uint32_t, std::uint32_t>;  // vertex indices, first < second

/// Validates a Hamiltonian path (a closing repeat of the first vertex is
/// accepted and dropped) and returns its edges, sorted.
std::vector<GridEdge> hamiltonian_path_edges(const GridGraph& g, std::span<const GridVertex> path);

ReceiverAssignment assignment_from_ham_path(const ReductionOutput& r, std::span<const GridVertex> path);

/// Grid edges between gadgets joined by at least one communication edge.
std::vector<GridEdge> extract_connection_structure(const ReductionOutput& r, const ReceiverAssignment& n);

/// True iff the edges form a spanning path or a Hamiltonian cycle.
bool is_hamiltonian_path_or_cycle(std::size_t vertex_count, std::span<const GridEdge> edges);

inline constexpr std::size_t kHamPathCap = 16;

/// Exhaustive backtracking; refuses graphs above kHamPathCap vertices.
std::optional<std::vector<GridVertex>> find_ham_path(const GridGraph& g);

}  // namespace rim
