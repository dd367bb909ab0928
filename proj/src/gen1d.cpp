#include "rim/gen1d.hpp"

#include <algorithm>
#include <set>

#include "rim/errors.hpp"

namespace rim {
namespace {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Writes the P_i assignment for the 2^i consecutive indices starting at
// `offset` into `rec`; returns the block root.
PointId place_p(std::vector<PointId>& rec, PointId offset, int i, RootSide side) {
  if (i == 0) return offset;
  const PointId half = PointId{1} << (i - 1);
  const PointId left_root = place_p(rec, offset, i - 1, side);
  const PointId right_root = place_p(rec, offset + half, i - 1, side);
  if (side == RootSide::kLeft) {
    rec[right_root] = offset + half - 1;
    return left_root;
  }
  rec[left_root] = offset + half;
  return right_root;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct Block {
  int order = 0;  // j of R_j
  std::int64_t offset = 0;
};

std::vector<Block> q_blocks(int k) {
  std::vector<Block> blocks{{2, p_diameter(2) + 1}};
  std::int64_t lo = 0;
  std::int64_t hi = blocks.front().offset + p_diameter(2);
  for (int j = 1; j <= k; ++j) {
    const std::int64_t gap = hi - lo + 1;
    const std::int64_t len = p_diameter(j + 2);
    if (j % 2 == 1) {
      const std::int64_t off = lo - gap - len;
      blocks.push_back({j + 2, off});
      lo = off;
    } else {
      const std::int64_t off = hi + gap;
      blocks.push_back({j + 2, off});
      hi = off + len;
    }
  }
  return blocks;
}

}  // namespace

std::int64_t p_diameter(int i) { return (ipow(3, i) - 1) / 2; }

std::int64_t q_diameter(int k) { return (ipow(3, k + 3) - ipow(2, k + 3) - 1) / 2; }

std::vector<std::int64_t> p_coordinates(int i) {
  if (i < 0 || i > kMaxP) throw InputError("P_i needs 0 <= i <= " + std::to_string(kMaxP));
  std::vector<std::int64_t> pts{0};
  std::int64_t diam = 0;
  for (int j = 0; j < i; ++j) {
    const std::int64_t shift = 2 * diam + 1;
    const std::size_t m = pts.size();
    for (std::size_t t = 0; t < m; ++t) pts.push_back(pts[t] + shift);
    diam += shift;
  }
  return pts;
}

FamilyInstance gen_p(int i) {
  const auto coords = p_coordinates(i);
  return {Instance1D::from_integers(coords), Family::kP, i, {}};
}

ReceiverAssignment optimal_assignment_p(int i, RootSide side) {
  if (i < 1 || i > kMaxP) throw InputError("optimal_assignment_p needs 1 <= i <= " + std::to_string(kMaxP));
  const PointId n = PointId{1} << i;
  std::vector<PointId> rec(n, kNoPoint);
  const PointId root = place_p(rec, 0, i, side);
  return ReceiverAssignment::sink_tree(std::move(rec), root);
}

FamilyInstance gen_q(int k) {
  if (k < 0 || k > kMaxQ) throw InputError("Q_k needs 0 <= k <= " + std::to_string(kMaxQ));
  std::vector<std::pair<std::int64_t, std::string>> labelled{{0, "a"}};
  for (const auto& b : q_blocks(k)) {
    const std::string name = "R_" + std::to_string(b.order);
    for (std::int64_t x : p_coordinates(b.order)) labelled.emplace_back(b.offset + x, name);
  }
  std::sort(labelled.begin(), labelled.end());
  std::vector<Rational> pts;
  std::vector<std::string> names;
  for (auto& [x, name] : labelled) {
    pts.emplace_back(x);
    names.push_back(std::move(name));
  }
  return {Instance1D(std::move(pts)), Family::kQ, k, std::move(names)};
}

ReceiverAssignment optimal_assignment_q(int k) {
  const FamilyInstance q = gen_q(k);
  const auto n = static_cast<PointId>(q.instance.size());
  std::vector<PointId> rec(n, kNoPoint);

  PointId a = kNoPoint;
  for (PointId p = 0; p < n; ++p) {
    if (q.block_of[p] == "a") a = p;
  }
  std::vector<PointId> roots;
  for (int j = 2; j <= k + 2; ++j) {
    const std::string name = "R_" + std::to_string(j);
    const auto first = std::find(q.block_of.begin(), q.block_of.end(), name) - q.block_of.begin();
    const auto offset = static_cast<PointId>(first);
    const RootSide side = offset > a ? RootSide::kLeft : RootSide::kRight;
    roots.push_back(place_p(rec, offset, j, side));
  }
  rec[a] = roots.front();
  for (std::size_t t = 0; t + 1 < roots.size(); ++t) rec[roots[t]] = roots[t + 1];
  return ReceiverAssignment::sink_tree(std::move(rec), roots.back());
}

FamilyInstance gen_log_lower(std::int64_t n) {
  if (n < 1) throw InputError("gen_log_lower needs n >= 1");
  int m = 0;
  while ((std::int64_t{2} << m) <= n) ++m;
  if (m > kMaxP) throw InputError("gen_log_lower: n too large");
  auto coords = p_coordinates(m);
  std::int64_t right = coords.back();
  std::int64_t diam = right - coords.front();
  constexpr std::int64_t kLimit = std::int64_t{1} << 61;
  for (std::int64_t f = n - (std::int64_t{1} << m); f > 0; --f) {
    if (diam >= kLimit / 2) throw InputError("gen_log_lower: filler coordinates exceed 64-bit range");
    right += diam + 1;
    diam = right - coords.front();
    coords.push_back(right);
  }
  return {Instance1D::from_integers(coords), Family::kLogLower, n, {}};
}

FamilyInstance gen_random(std::size_t n, std::int64_t max_coord, std::uint64_t seed) {
  if (n == 0) throw InputError("gen_random needs n >= 1");
  if (max_coord < 0 || static_cast<std::uint64_t>(max_coord) + 1 < n) {
    throw InputError("gen_random: coordinate range too small for n distinct points");
  }
  std::set<std::int64_t> chosen;
  std::uint64_t state = seed;
  const auto span = static_cast<std::uint64_t>(max_coord) + 1;
  while (chosen.size() < n) chosen.insert(static_cast<std::int64_t>(splitmix64(state) % span));
  const std::vector<std::int64_t> coords(chosen.begin(), chosen.end());
  return {Instance1D::from_integers(coords), Family::kRandom, static_cast<std::int64_t>(n), {}};
}

}  // namespace rim
