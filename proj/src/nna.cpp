#include "rim/nna.hpp"

#include "rim/errors.hpp"

namespace rim {

NnaPartition nna_singletons(const Instance1D& inst) {
  NnaPartition part;
  const auto n = static_cast<PointId>(inst.size());
  part.components.reserve(n);
  for (PointId p = 0; p < n; ++p) part.components.push_back({p, p, p});
  part.receivers.assign(n, kNoPoint);
  return part;
}

NnaPartition nna_round(const Instance1D& inst, const NnaPartition& current) {
  const auto& comps = current.components;
  const std::size_t k = comps.size();
  if (k < 2) throw InputError("nna_round needs at least two components");

  // Successor of each sink: the nearer of the two points flanking its
  // component; equal distances go left.
  std::vector<PointId> successor(k);
  std::vector<bool> points_right(k);
  for (std::size_t i = 0; i < k; ++i) {
    const PointId r = comps[i].sink;
    const bool has_left = i > 0;
    const bool has_right = i + 1 < k;
    bool go_right = !has_left;
    if (has_left && has_right) {
      go_right = distance(inst, r, comps[i + 1].lo) < distance(inst, r, comps[i - 1].hi);
    }
    points_right[i] = go_right;
    successor[i] = go_right ? comps[i + 1].lo : comps[i - 1].hi;
  }

  // Clusters are maximal runs of components linked by a successor edge.
  std::vector<std::pair<std::size_t, std::size_t>> clusters;
  std::size_t start = 0;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const bool linked = points_right[i] || !points_right[i + 1];
    if (!linked) {
      clusters.emplace_back(start, i);
      start = i + 1;
    }
  }
  clusters.emplace_back(start, k - 1);

  NnaPartition next;
  next.receivers = current.receivers;
  next.components.reserve(clusters.size());
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    const auto [first, last] = clusters[c];
    std::size_t mutual = k;
    for (std::size_t i = first; i < last; ++i) {
      if (points_right[i] && !points_right[i + 1]) {
        if (mutual != k) throw InvariantError("nna cluster with two cycles");
        mutual = i;
      }
    }
    if (mutual == k) throw InvariantError("nna cluster without a cycle");

    const PointId lo = comps[first].lo;
    const PointId hi = comps[last].hi;
    // Closest points of the neighboring merged components.
    const bool has_left = c > 0;
    const bool has_right = c + 1 < clusters.size();
    auto distinct = [&](PointId r) {
      if (!has_left || !has_right) return true;
      return distance(inst, r, lo - 1) != distance(inst, r, hi + 1);
    };
    const PointId ra = comps[mutual].sink;
    const PointId rb = comps[mutual + 1].sink;
    // ra < rb, so "smaller coordinate" is ra whenever both or neither qualify.
    const std::size_t survivor = (!distinct(ra) && distinct(rb)) ? mutual + 1 : mutual;

    for (std::size_t i = first; i <= last; ++i) {
      if (i != survivor) next.receivers[comps[i].sink] = successor[i];
    }
    next.components.push_back({lo, hi, comps[survivor].sink});
  }
  return next;
}

NnaResult nna(const Instance1D& inst, bool keep_trace) {
  NnaPartition part = nna_singletons(inst);
  std::uint32_t rounds = 0;
  std::vector<std::vector<NnaComponent>> trace;
  while (part.components.size() > 1) {
    part = nna_round(inst, part);
    ++rounds;
    if (keep_trace) trace.push_back(part.components);
  }
  const PointId sink = part.components.front().sink;
  return {ReceiverAssignment::sink_tree(std::move(part.receivers), sink), rounds, std::move(trace)};
}

}  // namespace rim
