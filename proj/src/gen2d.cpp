#include "rim/gen2d.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rim/errors.hpp"
#include "rim/model.hpp"

namespace rim {
namespace {

Point2 unit(Direction d) {
  switch (d) {
    case Direction::kPosX:
      return {1, 0};
    case Direction::kNegX:
      return {-1, 0};
    case Direction::kPosY:
      return {0, 1};
    case Direction::kNegY:
      return {0, -1};
  }
  return {0, 0};
}

// Quarter turn clockwise: (x, y) -> (y, -x).
Point2 clockwise(const Point2& p) { return {p.y, -p.x}; }

Point2 add(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
Point2 scale(const Point2& a, const Rational& s) { return {a.x * s, a.y * s}; }

std::string vertex_label(GridVertex v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

// |a - b| with a = sqrt(a2) etc.: true iff sqrt(c2) == sqrt(a2) + e exactly.
bool sqrt_sum_equals(const Rational& c2, const Rational& a2, const Rational& e) {
  const Rational lhs = c2 - a2 - e * e;  // must equal 2 e sqrt(a2) >= 0
  if (lhs.sign() < 0) return false;
  return lhs * lhs == Rational(4) * a2 * e * e;
}

}  // namespace

GridVertex step(GridVertex v, Direction d) {
  switch (d) {
    case Direction::kPosX:
      return {v.x + 1, v.y};
    case Direction::kNegX:
      return {v.x - 1, v.y};
    case Direction::kPosY:
      return {v.x, v.y + 1};
    case Direction::kNegY:
      return {v.x, v.y - 1};
  }
  return v;
}

std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::kPosX:
      return "+x";
    case Direction::kNegX:
      return "-x";
    case Direction::kPosY:
      return "+y";
    case Direction::kNegY:
      return "-y";
  }
  return "?";
}

std::string_view role_name(Role r) {
  static constexpr std::array<std::string_view, kGadgetSize> kNames{
      "M", "S1", "S1p", "S2", "S2p", "S3", "S3p", "C", "Ic", "I1", "I2", "I3", "I4"};
  return kNames[static_cast<std::size_t>(r)];
}

Rational default_epsilon() { return Rational(1, 64); }

GridGraph GridGraph::from_vertices(std::vector<GridVertex> vertices) {
  if (vertices.empty()) throw InputError("grid graph has no vertices");
  std::map<GridVertex, std::uint32_t> index;
  for (std::uint32_t i = 0; i < vertices.size(); ++i) {
    if (!index.emplace(vertices[i], i).second) {
      throw InputError("duplicate grid vertex " + vertex_label(vertices[i]));
    }
  }
  GridGraph g;
  g.vertices_ = std::move(vertices);
  g.adj_.resize(g.vertices_.size());
  for (std::uint32_t i = 0; i < g.vertices_.size(); ++i) {
    for (Direction d : kAllDirections) {
      if (auto it = index.find(step(g.vertices_[i], d)); it != index.end()) g.adj_[i].push_back(it->second);
    }
    std::sort(g.adj_[i].begin(), g.adj_[i].end());
    if (g.adj_[i].size() > 3) {
      throw InputError("grid vertex " + vertex_label(g.vertices_[i]) + " has degree 4");
    }
  }
  std::vector<char> seen(g.size(), 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : g.adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != g.size()) throw InputError("grid graph is not connected");
  return g;
}

std::optional<std::uint32_t> GridGraph::index_of(GridVertex v) const {
  const auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - vertices_.begin());
}

std::vector<Direction> GridGraph::incident_directions(std::uint32_t i) const {
  std::vector<Direction> out;
  for (Direction d : kAllDirections) {
    const GridVertex w = step(vertices_[i], d);
    for (auto j : adj_[i]) {
      if (vertices_[j] == w) out.push_back(d);
    }
  }
  return out;
}

bool GridGraph::adjacent(std::uint32_t a, std::uint32_t b) const {
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

GadgetLayout build_gadget(GridVertex v, std::span<const Direction> incident, const Rational& epsilon) {
  if (incident.empty() || incident.size() > 3) {
    throw InputError("gadget at " + vertex_label(v) + " needs 1 to 3 incident directions");
  }
  if (epsilon.sign() <= 0 || !(epsilon < Rational(1, 16))) {
    throw InputError("epsilon must lie in (0, 1/16)");
  }
  std::array<bool, 4> used{};
  for (Direction d : incident) {
    auto& slot = used[static_cast<std::size_t>(d)];
    if (slot) throw InputError("repeated incident direction");
    slot = true;
  }
  std::size_t count = incident.size();
  for (Direction d : kAllDirections) {
    if (count == 3) break;
    if (!used[static_cast<std::size_t>(d)]) {
      used[static_cast<std::size_t>(d)] = true;
      ++count;
    }
  }

  GadgetLayout g;
  g.vertex = v;
  g.epsilon = epsilon;
  std::size_t s = 0;
  for (Direction d : kAllDirections) {
    if (used[static_cast<std::size_t>(d)]) {
      g.satellite_directions[s++] = d;
    } else {
      g.connector_direction = d;
    }
  }

  const Point2 m{Rational(v.x), Rational(v.y)};
  const Rational quarter(1, 4);
  auto set = [&](Role r, const Point2& p) { g.points[static_cast<std::size_t>(r)] = p; };
  set(Role::kM, m);
  constexpr std::array<Role, 3> kSat{Role::kS1, Role::kS2, Role::kS3};
  constexpr std::array<Role, 3> kSatP{Role::kS1p, Role::kS2p, Role::kS3p};
  for (std::size_t i = 0; i < 3; ++i) {
    const Point2 d = unit(g.satellite_directions[i]);
    const Point2 sat = add(m, scale(d, quarter));
    set(kSat[i], sat);
    set(kSatP[i], add(sat, scale(clockwise(d), epsilon)));
  }
  const Point2 dc = unit(g.connector_direction);
  // |C - M| = 1/4 + eps, so I_c = M + dc (2 (1/4 + eps) + eps).
  set(Role::kC, add(m, scale(dc, quarter + epsilon)));
  const Point2 ic = add(m, scale(dc, Rational(1, 2) + Rational(3) * epsilon));
  set(Role::kIc, ic);
  set(Role::kI1, add(ic, scale(dc, -epsilon)));
  std::size_t next = static_cast<std::size_t>(Role::kI2);
  for (Direction d : kAllDirections) {
    const Point2 off = scale(unit(d), epsilon);
    if (add(ic, off) == g[Role::kI1]) continue;
    g.points[next++] = add(ic, off);
  }
  return g;
}

ReductionOutput reduce(const GridGraph& graph, const Rational& epsilon) {
  std::vector<GadgetLayout> gadgets;
  std::vector<Point2> pts;
  std::vector<std::uint32_t> gadget_of;
  std::vector<Role> role_of;
  if (graph.size() < 2) throw InputError("reduction needs at least two grid vertices");
  for (std::uint32_t v = 0; v < graph.size(); ++v) {
    const auto dirs = graph.incident_directions(v);
    gadgets.push_back(build_gadget(graph.vertex(v), dirs, epsilon));
    for (std::size_t r = 0; r < kGadgetSize; ++r) {
      pts.push_back(gadgets.back().points[r]);
      gadget_of.push_back(v);
      role_of.push_back(static_cast<Role>(r));
    }
  }
  std::vector<PointId> partner(pts.size(), kNoPoint);
  constexpr std::array<Role, 3> kSat{Role::kS1, Role::kS2, Role::kS3};
  for (std::uint32_t v = 0; v < graph.size(); ++v) {
    for (std::size_t i = 0; i < 3; ++i) {
      const Direction d = gadgets[v].satellite_directions[i];
      const auto w = graph.index_of(step(graph.vertex(v), d));
      if (!w) continue;
      const Direction back = static_cast<Direction>(static_cast<std::uint8_t>(d) ^ 1U);
      for (std::size_t j = 0; j < 3; ++j) {
        if (gadgets[*w].satellite_directions[j] == back) {
          partner[ReductionOutput::point(v, kSat[i])] = ReductionOutput::point(*w, kSat[j]);
        }
      }
    }
  }
  ReductionOutput out{Instance2D(std::move(pts)), graph,   epsilon, std::move(gadgets),
                      std::move(gadget_of),       std::move(role_of), std::move(partner)};
  const auto report = check_gadget_geometry(out);
  if (!report.ok()) {
    throw InputError("epsilon " + epsilon.to_string() + " breaks the gadget geometry: " + report.failures.front());
  }
  return out;
}

GeometryReport check_gadget_geometry(const ReductionOutput& r) {
  GeometryReport rep;
  const auto& inst = r.instance;
  const Rational eps = r.epsilon;
  auto expect = [&](bool ok, const std::string& what) {
    ++rep.checks;
    if (!ok) rep.failures.push_back(what);
  };
  // Strict unique nearest neighbor over the whole instance.
  auto nearest_is = [&](PointId p, PointId q) {
    const Rational d = squared_distance(inst, p, q);
    for (PointId x = 0; x < inst.size(); ++x) {
      if (x != p && x != q && !(d < squared_distance(inst, p, x))) return false;
    }
    return true;
  };
  auto nothing_closer = [&](PointId p, PointId q) {
    const Rational d = squared_distance(inst, p, q);
    for (PointId x = 0; x < inst.size(); ++x) {
      if (x != p && squared_distance(inst, p, x) < d) return false;
    }
    return true;
  };

  for (std::uint32_t v = 0; v < r.graph.size(); ++v) {
    const std::string at = " in gadget " + vertex_label(r.graph.vertex(v));
    auto pt = [&](Role role) { return ReductionOutput::point(v, role); };
    const Rational mc2 = squared_distance(inst, pt(Role::kM), pt(Role::kC));
    const Rational ci2 = squared_distance(inst, pt(Role::kC), pt(Role::kIc));
    expect(sqrt_sum_equals(ci2, mc2, eps), "|M-C| + eps != |C-Ic|" + at);
    for (auto [sp, s] : {std::pair{Role::kS1p, Role::kS1}, {Role::kS2p, Role::kS2}, {Role::kS3p, Role::kS3}}) {
      expect(nearest_is(pt(sp), pt(s)), "nearest neighbor of " + std::string(role_name(sp)) + " is not " +
                                            std::string(role_name(s)) + at);
    }
    for (Role ij : {Role::kI1, Role::kI2, Role::kI3, Role::kI4}) {
      expect(nearest_is(pt(ij), pt(Role::kIc)), "nearest neighbor of " + std::string(role_name(ij)) + " is not Ic" + at);
      expect(squared_distance(inst, pt(ij), pt(Role::kIc)) == eps * eps, std::string(role_name(ij)) + " not at eps from Ic" + at);
    }
    // I1 is exactly as far from C as M is.
    expect(nothing_closer(pt(Role::kC), pt(Role::kM)), "some point is closer to C than M" + at);
    {
      const Rational i1c = squared_distance(inst, pt(Role::kI1), pt(Role::kC));
      bool closest = true;
      for (Role ij : {Role::kI2, Role::kI3, Role::kI4}) closest &= i1c < squared_distance(inst, pt(ij), pt(Role::kC));
      expect(closest, "I1 is not the inhibitor point closest to C" + at);
    }
    for (Role s : {Role::kS1, Role::kS2, Role::kS3}) {
      const PointId sp = pt(s);
      expect(squared_distance(inst, sp, pt(Role::kM)) == Rational(1, 16), std::string(role_name(s)) + " not at 1/4 from M" + at);
      if (r.partner[sp] == kNoPoint) continue;
      const Rational to_partner = squared_distance(inst, sp, r.partner[sp]);
      expect(to_partner == Rational(1, 4), "partner of " + std::string(role_name(s)) + " not at distance 1/2" + at);
      expect(squared_distance(inst, sp, pt(Role::kM)) <= to_partner,
             "ball from " + std::string(role_name(s)) + " to its partner misses M" + at);
    }
  }

  // Inhibitors of distinct gadgets stay at least sqrt(2) (1/2 - 4 eps) apart,
  // which exceeds 1/2 + 4 eps, the reach from M to its own inhibitor.
  const Rational half(1, 2);
  const Rational diag = half - Rational(4) * eps;
  const Rational lower2 = Rational(2) * diag * diag;
  const Rational reach = half + Rational(4) * eps;
  expect(diag.sign() > 0 && reach * reach < lower2, "epsilon too large for inhibitor separation");
  for (std::uint32_t v = 0; v < r.graph.size(); ++v) {
    for (std::uint32_t w = v + 1; w < r.graph.size(); ++w) {
      std::optional<Rational> best;
      for (auto a = static_cast<std::size_t>(Role::kIc); a < kGadgetSize; ++a) {
        for (auto b = static_cast<std::size_t>(Role::kIc); b < kGadgetSize; ++b) {
          const Rational d = squared_distance(r.gadgets[v].points[a], r.gadgets[w].points[b]);
          if (!best || d < *best) best = d;
        }
      }
      expect(lower2 <= *best && reach * reach < *best,
             "inhibitors of " + vertex_label(r.graph.vertex(v)) + " and " + vertex_label(r.graph.vertex(w)) +
                 " too close");
    }
  }
  return rep;
}

std::vector<GridEdge> hamiltonian_path_edges(const GridGraph& g, std::span<const GridVertex> path) {
  std::vector<GridVertex> seq(path.begin(), path.end());
  if (seq.size() == g.size() + 1 && seq.front() == seq.back() && seq.size() > 2) seq.pop_back();
  if (seq.size() != g.size()) throw InputError("path does not visit every grid vertex exactly once");
  std::vector<char> seen(g.size(), 0);
  std::vector<std::uint32_t> idx;
  for (const auto& v : seq) {
    const auto i = g.index_of(v);
    if (!i) throw InputError("path vertex " + vertex_label(v) + " is not in the grid graph");
    if (seen[*i]) throw InputError("path repeats vertex " + vertex_label(v));
    seen[*i] = 1;
    idx.push_back(*i);
  }
  std::vector<GridEdge> edges;
  for (std::size_t t = 0; t + 1 < idx.size(); ++t) {
    if (!g.adjacent(idx[t], idx[t + 1])) {
      throw InputError("path steps between non-adjacent vertices " + vertex_label(seq[t]) + " and " +
                       vertex_label(seq[t + 1]));
    }
    edges.emplace_back(std::min(idx[t], idx[t + 1]), std::max(idx[t], idx[t + 1]));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

ReceiverAssignment assignment_from_ham_path(const ReductionOutput& r, std::span<const GridVertex> path) {
  const auto edges = hamiltonian_path_edges(r.graph, path);
  std::set<GridEdge> on_path(edges.begin(), edges.end());
  std::vector<PointId> rec(r.instance.size(), kNoPoint);
  for (std::uint32_t v = 0; v < r.graph.size(); ++v) {
    auto pt = [v](Role role) { return ReductionOutput::point(v, role); };
    rec[pt(Role::kM)] = pt(Role::kC);
    rec[pt(Role::kC)] = pt(Role::kM);
    rec[pt(Role::kI1)] = pt(Role::kC);
    rec[pt(Role::kIc)] = pt(Role::kI1);
    for (Role ij : {Role::kI2, Role::kI3, Role::kI4}) rec[pt(ij)] = pt(Role::kIc);
    for (auto [s, sp] : {std::pair{Role::kS1, Role::kS1p}, {Role::kS2, Role::kS2p}, {Role::kS3, Role::kS3p}}) {
      rec[pt(sp)] = pt(s);
      rec[pt(s)] = pt(Role::kM);
      const PointId partner = r.partner[pt(s)];
      if (partner == kNoPoint) continue;
      const std::uint32_t w = r.gadget_of[partner];
      if (on_path.contains({std::min(v, w), std::max(v, w)})) rec[pt(s)] = partner;
    }
  }
  return ReceiverAssignment::asym2d(std::move(rec));
}

std::vector<GridEdge> extract_connection_structure(const ReductionOutput& r, const ReceiverAssignment& n) {
  const auto g = communication_graph_2d(r.instance, n);
  std::set<GridEdge> found;
  for (PointId p = 0; p < g.size(); ++p) {
    for (PointId q : g.out[p]) {
      const auto a = r.gadget_of[p];
      const auto b = r.gadget_of[q];
      if (a != b) found.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return {found.begin(), found.end()};
}

bool is_hamiltonian_path_or_cycle(std::size_t vertex_count, std::span<const GridEdge> edges) {
  if (vertex_count <= 1) return edges.empty();
  std::vector<std::vector<std::uint32_t>> adj(vertex_count);
  for (auto [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count || a == b) return false;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (const auto& l : adj) {
    if (l.size() > 2 || l.empty()) return false;
  }
  const bool path = edges.size() == vertex_count - 1;
  const bool cycle = edges.size() == vertex_count;
  if (!path && !cycle) return false;
  std::vector<char> seen(vertex_count, 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count;
}

std::optional<std::vector<GridVertex>> find_ham_path(const GridGraph& g) {
  if (g.size() > kHamPathCap) {
    throw RefusedError("find_ham_path: " + std::to_string(g.size()) + " vertices exceed the cap of " +
                       std::to_string(kHamPathCap));
  }
  const auto n = static_cast<std::uint32_t>(g.size());
  std::vector<std::uint32_t> path;
  std::vector<char> used(n, 0);
  auto extend = [&](auto& self) -> bool {
    if (path.size() == n) return true;
    for (auto w : g.neighbors(path.back())) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      if (self(self)) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };
  for (std::uint32_t start = 0; start < n; ++start) {
    path.assign(1, start);
    std::fill(used.begin(), used.end(), 0);
    used[start] = 1;
    if (extend(extend)) {
      std::vector<GridVertex> out;
      for (auto i : path) out.push_back(g.vertex(i));
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace rim
