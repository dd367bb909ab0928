#pragma once

// Text formats.
//
//   point file      one point per line; 1D = one rational token (`a` or
//                   `a/b`), 2D = two tokens; `#` starts a comment.
//   assignment file `model asym2d|sinktree1d`, optional `sink <index>`, then
//                   `<from> <to>` lines with 0-based indices (sorted order
//                   for 1D, file order for 2D).
//   grid file       one `x y` integer pair per line.
//   role map        `index vertex_x vertex_y role` per reduced point.

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rim/assignment.hpp"
#include "rim/instance.hpp"

namespace rim::io {

using AnyInstance = std::variant<Instance1D, Instance2D>;

/// Dimension is inferred from the first data line and must be consistent.
/// 1D input is sorted; the indices of assignment files refer to that order.
AnyInstance parse_points(std::istream& in);
Instance1D parse_points_1d(std::istream& in);
Instance2D parse_points_2d(std::istream& in);

ReceiverAssignment parse_assignment(std::istream& in);

std::vector<std::pair<std::int64_t, std::int64_t>> parse_grid(std::istream& in);

/// Optional per-point trailing comments (same length as the instance, or empty).
void write_points(std::ostream& out, const Instance1D& inst,
                  const std::vector<std::string>& comments = {});
void write_points(std::ostream& out, const Instance2D& inst);

/// Canonical form: header, sink line for sink trees, edges by ascending source.
void write_assignment(std::ostream& out, const ReceiverAssignment& n);

std::string to_string(const ReceiverAssignment& n);

AnyInstance read_points_file(const std::string& path);
ReceiverAssignment read_assignment_file(const std::string& path);
std::vector<std::pair<std::int64_t, std::int64_t>> read_grid_file(const std::string& path);

}  // namespace rim::io
