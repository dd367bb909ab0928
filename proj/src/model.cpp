#include "rim/model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rim/errors.hpp"
#include "rim/kernels/coverage.hpp"

namespace rim {
namespace {

// Rooted in-tree view of a valid sink-tree assignment.
struct TreeView {
  PointId root = 0;
  std::vector<std::vector<PointId>> children;
  std::vector<std::uint32_t> tin;
  std::vector<std::uint32_t> tout;
  std::vector<PointId> span_lo;
  std::vector<PointId> span_hi;

  bool is_descendant(PointId x, PointId of) const { return tin[of] <= tin[x] && tin[x] < tout[of]; }
  std::uint32_t subtree_size(PointId p) const { return tout[p] - tin[p]; }
};

bool sink_tree_valid(const ReceiverAssignment& n) {
  const auto size = n.size();
  // 0 = unknown, 1 = on current path, 2 = reaches the sink.
  std::vector<std::uint8_t> state(size, 0);
  std::vector<PointId> path;
  for (PointId start = 0; start < size; ++start) {
    path.clear();
    PointId p = start;
    while (state[p] == 0) {
      state[p] = 1;
      path.push_back(p);
      if (!n.has_receiver(p)) break;
      p = n.receiver(p);
    }
    const bool ok = state[p] == 2 || (state[p] == 1 && !n.has_receiver(p) && p == path.back());
    if (!ok) return false;
    for (PointId q : path) state[q] = 2;
  }
  return true;
}

TreeView build_tree(const Instance1D& inst, const ReceiverAssignment& n) {
  n.require(Model::kSinkTree1D, inst.size());
  if (!sink_tree_valid(n)) throw InputError("assignment is not a valid sink tree");
  const auto size = static_cast<PointId>(n.size());
  TreeView t;
  t.root = *n.sink();
  t.children.resize(size);
  for (PointId p = 0; p < size; ++p) {
    if (n.has_receiver(p)) t.children[n.receiver(p)].push_back(p);
  }
  t.tin.assign(size, 0);
  t.tout.assign(size, 0);
  t.span_lo.assign(size, 0);
  t.span_hi.assign(size, 0);
  std::uint32_t clock = 0;
  // Iterative DFS; frame = (node, next child index).
  std::vector<std::pair<PointId, std::size_t>> stack;
  stack.emplace_back(t.root, 0);
  t.tin[t.root] = clock++;
  t.span_lo[t.root] = t.span_hi[t.root] = t.root;
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (next < t.children[node].size()) {
      const PointId c = t.children[node][next++];
      t.tin[c] = clock++;
      t.span_lo[c] = t.span_hi[c] = c;
      stack.emplace_back(c, 0);
      continue;
    }
    t.tout[node] = clock;
    const PointId done = node;
    stack.pop_back();
    if (!stack.empty()) {
      const PointId parent = stack.back().first;
      t.span_lo[parent] = std::min(t.span_lo[parent], t.span_lo[done]);
      t.span_hi[parent] = std::max(t.span_hi[parent], t.span_hi[done]);
    }
  }
  return t;
}

template <typename Inst>
std::uint32_t interference_at_impl(const Inst& inst, const ReceiverAssignment& n, PointId p) {
  if (p >= inst.size()) throw InputError("point index out of range");
  std::uint32_t count = 0;
  for (PointId c = 0; c < n.size(); ++c) {
    if (n.has_receiver(c) && ball_contains(inst, c, n.receiver(c), p)) ++count;
  }
  return count;
}

std::vector<std::uint32_t> profile_via_kernel(const IntegerEmbedding& emb, const ReceiverAssignment& n) {
  std::vector<std::int64_t> cx, cy, r2;
  cx.reserve(n.size());
  cy.reserve(n.size());
  r2.reserve(n.size());
  for (PointId c = 0; c < n.size(); ++c) {
    if (!n.has_receiver(c)) continue;
    const PointId b = n.receiver(c);
    const std::int64_t dx = emb.x[b] - emb.x[c];
    const std::int64_t dy = emb.y[b] - emb.y[c];
    cx.push_back(emb.x[c]);
    cy.push_back(emb.y[c]);
    r2.push_back(dx * dx + dy * dy);
  }
  std::vector<std::uint32_t> counts(emb.x.size(), 0);
  kernels::coverage_counts({emb.x, emb.y, cx, cy, r2}, counts);
  return counts;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  const __int128 l = static_cast<__int128>(a / g) * b;
  if (l > kernels::kMaxEmbeddedCoordinate) return -1;
  return static_cast<std::int64_t>(l);
}

}  // namespace

std::size_t DirectedGraph::edge_count() const {
  std::size_t m = 0;
  for (const auto& adj : out) m += adj.size();
  return m;
}

bool DirectedGraph::has_edge(PointId from, PointId to) const {
  const auto& adj = out[from];
  return std::binary_search(adj.begin(), adj.end(), to);
}

bool is_strongly_connected(const DirectedGraph& g) {
  const auto n = g.size();
  if (n <= 1) return true;
  std::vector<std::vector<PointId>> rev(n);
  for (PointId p = 0; p < n; ++p) {
    for (PointId q : g.out[p]) rev[q].push_back(p);
  }
  auto reaches_all = [n](const std::vector<std::vector<PointId>>& adj) {
    std::vector<char> seen(n, 0);
    std::vector<PointId> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const PointId p = stack.back();
      stack.pop_back();
      for (PointId q : adj[p]) {
        if (!seen[q]) {
          seen[q] = 1;
          ++count;
          stack.push_back(q);
        }
      }
    }
    return count == n;
  };
  return reaches_all(g.out) && reaches_all(rev);
}

DirectedGraph communication_graph_2d(const Instance2D& inst, const ReceiverAssignment& n) {
  n.require(Model::kAsym2D, inst.size());
  DirectedGraph g;
  g.out.resize(inst.size());
  for (PointId p = 0; p < inst.size(); ++p) {
    const Rational reach = squared_distance(inst, p, n.receiver(p));
    for (PointId q = 0; q < inst.size(); ++q) {
      if (q != p && squared_distance(inst, p, q) <= reach) g.out[p].push_back(q);
    }
  }
  return g;
}

DirectedGraph communication_graph_1d(const Instance1D& inst, const ReceiverAssignment& n) {
  n.require(Model::kSinkTree1D, inst.size());
  DirectedGraph g;
  g.out.resize(inst.size());
  for (PointId p = 0; p < inst.size(); ++p) {
    if (n.has_receiver(p)) g.out[p].push_back(n.receiver(p));
  }
  return g;
}

bool is_valid(const Instance2D& inst, const ReceiverAssignment& n) {
  return is_strongly_connected(communication_graph_2d(inst, n));
}

bool is_valid(const Instance1D& inst, const ReceiverAssignment& n) {
  n.require(Model::kSinkTree1D, inst.size());
  return sink_tree_valid(n);
}

std::vector<Range> balls(const ReceiverAssignment& n) {
  std::vector<Range> out;
  out.reserve(n.size());
  for (PointId p = 0; p < n.size(); ++p) {
    if (n.has_receiver(p)) out.push_back({p, n.receiver(p)});
  }
  return out;
}

std::uint32_t interference_at(const Instance1D& inst, const ReceiverAssignment& n, PointId p) {
  n.require(Model::kSinkTree1D, inst.size());
  return interference_at_impl(inst, n, p);
}

std::uint32_t interference_at(const Instance2D& inst, const ReceiverAssignment& n, PointId p) {
  n.require(Model::kAsym2D, inst.size());
  return interference_at_impl(inst, n, p);
}

std::vector<std::uint32_t> interference_profile(const Instance1D& inst, const ReceiverAssignment& n) {
  n.require(Model::kSinkTree1D, inst.size());
  // Each closed ball covers a contiguous index range; accumulate a
  // difference array over the exact endpoints.
  const auto pts = inst.points();
  std::vector<std::int64_t> diff(inst.size() + 1, 0);
  for (PointId c = 0; c < n.size(); ++c) {
    if (!n.has_receiver(c)) continue;
    const Rational r = distance(inst, c, n.receiver(c));
    const auto lo = std::lower_bound(pts.begin(), pts.end(), pts[c] - r) - pts.begin();
    const auto hi = std::upper_bound(pts.begin(), pts.end(), pts[c] + r) - pts.begin();
    ++diff[lo];
    --diff[hi];
  }
  std::vector<std::uint32_t> out(inst.size());
  std::int64_t running = 0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    running += diff[i];
    out[i] = static_cast<std::uint32_t>(running);
  }
  return out;
}

std::vector<std::uint32_t> interference_profile_exact(const Instance2D& inst,
                                                      const ReceiverAssignment& n) {
  n.require(Model::kAsym2D, inst.size());
  std::vector<std::uint32_t> out(inst.size(), 0);
  for (PointId c = 0; c < n.size(); ++c) {
    const Rational reach = squared_distance(inst, c, n.receiver(c));
    for (PointId p = 0; p < inst.size(); ++p) {
      if (squared_distance(inst, c, p) <= reach) ++out[p];
    }
  }
  return out;
}

std::vector<std::uint32_t> interference_profile(const Instance2D& inst, const ReceiverAssignment& n) {
  n.require(Model::kAsym2D, inst.size());
  if (auto emb = embed_integer(inst.points())) return profile_via_kernel(*emb, n);
  return interference_profile_exact(inst, n);
}

std::uint32_t interference(const Instance1D& inst, const ReceiverAssignment& n) {
  const auto prof = interference_profile(inst, n);
  return *std::max_element(prof.begin(), prof.end());
}

std::uint32_t interference(const Instance2D& inst, const ReceiverAssignment& n) {
  const auto prof = interference_profile(inst, n);
  return *std::max_element(prof.begin(), prof.end());
}

std::vector<Range> cross_edges(const Instance1D& inst, const ReceiverAssignment& n) {
  const TreeView t = build_tree(inst, n);
  std::vector<Range> out;
  for (PointId p = 0; p < n.size(); ++p) {
    if (!n.has_receiver(p)) continue;
    const PointId q = n.receiver(p);
    const PointId lo = std::min(p, q);
    const PointId hi = std::max(p, q);
    // Fast accept: the open interval sits inside p's descendant span and the
    // span is gap-free.
    const bool span_is_pure = t.span_hi[p] - t.span_lo[p] + 1 == t.subtree_size(p);
    if (span_is_pure && t.span_lo[p] <= lo + 1 && hi <= t.span_hi[p] + 1) continue;
    for (PointId x = lo + 1; x < hi; ++x) {
      if (!t.is_descendant(x, p)) {
        out.push_back({p, q});
        break;
      }
    }
  }
  return out;
}

bool has_bst_property(const Instance1D& inst, const ReceiverAssignment& n) {
  const TreeView t = build_tree(inst, n);
  for (PointId p = 0; p < n.size(); ++p) {
    int left = 0;
    int right = 0;
    for (PointId c : t.children[p]) (c < p ? left : right)++;
    if (left > 1 || right > 1) return false;
    if (t.span_hi[p] - t.span_lo[p] + 1 != t.subtree_size(p)) return false;
  }
  return true;
}

std::uint32_t count_bends(const Instance1D& inst, const ReceiverAssignment& n) {
  n.require(Model::kSinkTree1D, inst.size());
  if (!sink_tree_valid(n)) throw InputError("assignment is not a valid sink tree");
  std::uint32_t bends = 0;
  for (PointId p = 0; p < n.size(); ++p) {
    if (!n.has_receiver(p)) continue;
    const PointId q = n.receiver(p);
    if ((p > q ? p - q : q - p) != 1) ++bends;
  }
  return bends;
}

ReceiverAssignment mirror_assignment(const ReceiverAssignment& n) {
  const auto size = static_cast<PointId>(n.size());
  std::vector<PointId> rec(size, kNoPoint);
  for (PointId p = 0; p < size; ++p) {
    if (n.has_receiver(p)) rec[size - 1 - p] = size - 1 - n.receiver(p);
  }
  if (n.model() == Model::kAsym2D) return ReceiverAssignment::asym2d(std::move(rec));
  return ReceiverAssignment::sink_tree(std::move(rec), size - 1 - *n.sink());
}

std::optional<IntegerEmbedding> embed_integer(std::span<const Point2> points) {
  std::int64_t scale = 1;
  for (const auto& p : points) {
    for (const Rational* v : {&p.x, &p.y}) {
      scale = checked_lcm(scale, v->den());
      if (scale < 0) return std::nullopt;
    }
  }
  IntegerEmbedding emb;
  emb.scale = scale;
  emb.x.reserve(points.size());
  emb.y.reserve(points.size());
  for (const auto& p : points) {
    const __int128 x = static_cast<__int128>(p.x.num()) * (scale / p.x.den());
    const __int128 y = static_cast<__int128>(p.y.num()) * (scale / p.y.den());
    const __int128 bound = kernels::kMaxEmbeddedCoordinate;
    if (x > bound || x < -bound || y > bound || y < -bound) return std::nullopt;
    emb.x.push_back(static_cast<std::int64_t>(x));
    emb.y.push_back(static_cast<std::int64_t>(y));
  }
  return emb;
}

}  // namespace rim
