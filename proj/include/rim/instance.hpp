#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "rim/rational.hpp"

namespace rim {

/// Index into the sorted (1D) or input-order (2D) point sequence.
using PointId = std::uint32_t;
inline constexpr PointId kNoPoint = std::numeric_limits<PointId>::max();

struct Point2 {
  Rational x;
  Rational y;
  friend bool operator==(const Point2&, const Point2&) = default;
  friend auto operator<=>(const Point2&, const Point2&) = default;
};

/// Point set on the line, strictly increasing.
class Instance1D {
 public:
  /// Requires a strictly increasing, non-empty sequence.
  explicit Instance1D(std::vector<Rational> sorted_points);
  /// Sorts; rejects duplicates and empty input.
  static Instance1D from_unsorted(std::vector<Rational> points);
  static Instance1D from_integers(std::span<const std::int64_t> coords);

  std::size_t size() const { return points_.size(); }
  const Rational& operator[](PointId i) const { return points_[i]; }
  std::span<const Rational> points() const { return points_; }
  Rational diameter() const { return points_.back() - points_.front(); }

  /// p -> -p, re-sorted; index i maps to size()-1-i.
  Instance1D mirrored() const;
  Instance1D scaled(const Rational& factor) const;
  Instance1D translated(const Rational& offset) const;

  friend bool operator==(const Instance1D&, const Instance1D&) = default;

 private:
  std::vector<Rational> points_;
};

/// Planar point set in input order; points pairwise distinct.
class Instance2D {
 public:
  explicit Instance2D(std::vector<Point2> points);

  std::size_t size() const { return points_.size(); }
  const Point2& operator[](PointId i) const { return points_[i]; }
  std::span<const Point2> points() const { return points_; }

  Instance2D scaled(const Rational& factor) const;
  /// Embeds a line instance on the x axis.
  static Instance2D from_line(const Instance1D& line);

  friend bool operator==(const Instance2D&, const Instance2D&) = default;

 private:
  std::vector<Point2> points_;
};

inline Rational squared_distance(const Point2& a, const Point2& b) {
  const Rational dx = a.x - b.x;
  const Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline Rational distance(const Instance1D& inst, PointId a, PointId b) {
  return (inst[a] - inst[b]).abs();
}

inline Rational squared_distance(const Instance2D& inst, PointId a, PointId b) {
  return squared_distance(inst[a], inst[b]);
}

/// True iff the closed ball centered at `center` through `boundary` contains `x`.
inline bool ball_contains(const Instance1D& inst, PointId center, PointId boundary, PointId x) {
  return distance(inst, center, x) <= distance(inst, center, boundary);
}

inline bool ball_contains(const Instance2D& inst, PointId center, PointId boundary, PointId x) {
  return squared_distance(inst, center, x) <= squared_distance(inst, center, boundary);
}

}  // namespace rim
