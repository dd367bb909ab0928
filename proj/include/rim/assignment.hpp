#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rim/instance.hpp"

namespace rim {

/// Transmission range: the closed ball around `center` with `boundary` on its rim.
struct Range {
  PointId center = 0;
  PointId boundary = 0;
  friend bool operator==(const Range&, const Range&) = default;
  friend auto operator<=>(const Range&, const Range&) = default;
};

enum class Model {
  kAsym2D,      // every point transmits; validity = strong connectivity
  kSinkTree1D,  // in-tree towards a single sink
};

/// Receiver map N over point indices.
///
/// kAsym2D maps are total. kSinkTree1D maps are total except at the sink,
/// where the receiver is kNoPoint. N(p) == p is never allowed.
class ReceiverAssignment {
 public:
  static ReceiverAssignment asym2d(std::vector<PointId> receivers);
  static ReceiverAssignment sink_tree(std::vector<PointId> receivers, PointId sink);

  Model model() const { return model_; }
  std::size_t size() const { return receivers_.size(); }
  std::optional<PointId> sink() const { return sink_; }
  bool has_receiver(PointId p) const { return receivers_[p] != kNoPoint; }
  PointId receiver(PointId p) const { return receivers_[p]; }
  std::span<const PointId> receivers() const { return receivers_; }

  /// Throws InputError unless the map is over exactly `n` points of `expected` model.
  void require(Model expected, std::size_t n) const;

  friend bool operator==(const ReceiverAssignment&, const ReceiverAssignment&) = default;

 private:
  ReceiverAssignment(Model model, std::vector<PointId> receivers, std::optional<PointId> sink);

  Model model_ = Model::kAsym2D;
  std::vector<PointId> receivers_;
  std::optional<PointId> sink_;
};

}  // namespace rim
