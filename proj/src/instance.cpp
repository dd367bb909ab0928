#include "rim/instance.hpp"

#include <algorithm>
#include <set>

#include "rim/errors.hpp"

namespace rim {

Instance1D::Instance1D(std::vector<Rational> sorted_points) : points_(std::move(sorted_points)) {
  if (points_.empty()) throw InputError("1D instance needs at least one point");
  if (points_.size() >= kNoPoint) throw InputError("1D instance too large");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1] < points_[i])) {
      throw InputError("1D points must be strictly increasing (duplicate or unsorted at index " +
                       std::to_string(i) + ")");
    }
  }
}

Instance1D Instance1D::from_unsorted(std::vector<Rational> points) {
  std::sort(points.begin(), points.end());
  return Instance1D(std::move(points));
}

Instance1D Instance1D::from_integers(std::span<const std::int64_t> coords) {
  std::vector<Rational> pts(coords.begin(), coords.end());
  return from_unsorted(std::move(pts));
}

Instance1D Instance1D::mirrored() const {
  std::vector<Rational> out;
  out.reserve(points_.size());
  for (auto it = points_.rbegin(); it != points_.rend(); ++it) out.push_back(-*it);
  return Instance1D(std::move(out));
}

Instance1D Instance1D::scaled(const Rational& factor) const {
  if (factor.sign() <= 0) throw InputError("scale factor must be positive");
  std::vector<Rational> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p * factor);
  return Instance1D(std::move(out));
}

Instance1D Instance1D::translated(const Rational& offset) const {
  std::vector<Rational> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p + offset);
  return Instance1D(std::move(out));
}

Instance2D::Instance2D(std::vector<Point2> points) : points_(std::move(points)) {
  if (points_.empty()) throw InputError("2D instance needs at least one point");
  if (points_.size() >= kNoPoint) throw InputError("2D instance too large");
  std::set<Point2> seen;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!seen.insert(points_[i]).second) {
      throw InputError("duplicate 2D point at index " + std::to_string(i));
    }
  }
}

Instance2D Instance2D::scaled(const Rational& factor) const {
  if (factor.sign() <= 0) throw InputError("scale factor must be positive");
  std::vector<Point2> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back({p.x * factor, p.y * factor});
  return Instance2D(std::move(out));
}

Instance2D Instance2D::from_line(const Instance1D& line) {
  std::vector<Point2> out;
  out.reserve(line.size());
  for (const auto& x : line.points()) out.push_back({x, Rational(0)});
  return Instance2D(std::move(out));
}

}  // namespace rim
