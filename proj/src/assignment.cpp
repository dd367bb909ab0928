#include "rim/assignment.hpp"

#include <string>

#include "rim/errors.hpp"

namespace rim {

ReceiverAssignment::ReceiverAssignment(Model model, std::vector<PointId> receivers,
                                       std::optional<PointId> sink)
    : model_(model), receivers_(std::move(receivers)), sink_(sink) {
  const auto n = receivers_.size();
  if (n == 0) throw InputError("assignment over an empty point set");
  for (std::size_t p = 0; p < n; ++p) {
    const PointId q = receivers_[p];
    const bool is_sink = sink_ && *sink_ == p;
    if (is_sink) {
      if (q != kNoPoint) throw InputError("sink " + std::to_string(p) + " must not have a receiver");
      continue;
    }
    if (q == kNoPoint) throw InputError("point " + std::to_string(p) + " has no receiver");
    if (q >= n) throw InputError("receiver of point " + std::to_string(p) + " is out of range");
    if (q == p) throw InputError("point " + std::to_string(p) + " is its own receiver");
  }
}

ReceiverAssignment ReceiverAssignment::asym2d(std::vector<PointId> receivers) {
  return ReceiverAssignment(Model::kAsym2D, std::move(receivers), std::nullopt);
}

ReceiverAssignment ReceiverAssignment::sink_tree(std::vector<PointId> receivers, PointId sink) {
  if (sink >= receivers.size()) throw InputError("sink index out of range");
  return ReceiverAssignment(Model::kSinkTree1D, std::move(receivers), sink);
}

void ReceiverAssignment::require(Model expected, std::size_t n) const {
  if (model_ != expected) {
    throw InputError(expected == Model::kAsym2D ? "expected an asym2d assignment"
                                                : "expected a sinktree1d assignment");
  }
  if (receivers_.size() != n) {
    throw InputError("assignment covers " + std::to_string(receivers_.size()) +
                     " points but the instance has " + std::to_string(n));
  }
}

}  // namespace rim
