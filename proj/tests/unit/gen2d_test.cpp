#include <doctest.h>

#include "rim/errors.hpp"
#include "rim/gen2d.hpp"
#include "rim/model.hpp"

using namespace rim;

namespace {

GridGraph grid(std::initializer_list<std::pair<std::int64_t, std::int64_t>> vs) {
  std::vector<GridVertex> out;
  for (auto [x, y] : vs) out.push_back({x, y});
  return GridGraph::from_vertices(out);
}

GridGraph path(std::int64_t k) {
  std::vector<GridVertex> out;
  for (std::int64_t i = 0; i < k; ++i) out.push_back({i, 0});
  return GridGraph::from_vertices(out);
}

Point2 pt(Rational x, Rational y) { return {x, y}; }

std::size_t partner_entries(const ReductionOutput& r) {
  return static_cast<std::size_t>(std::count_if(r.partner.begin(), r.partner.end(), [](PointId p) { return p != kNoPoint; }));
}

}  // namespace

TEST_CASE("grid graph construction") {
  const auto g = grid({{0, 0}, {1, 0}, {0, 1}});
  CHECK(g.size() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(g.neighbors(0) == std::vector<std::uint32_t>{1, 2});
  CHECK(g.incident_directions(0) == std::vector<Direction>{Direction::kPosX, Direction::kPosY});
  CHECK(*g.index_of({0, 1}) == 2);
  CHECK_FALSE(g.index_of({5, 5}));
  CHECK_THROWS_AS(grid({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}), InputError);
  CHECK_THROWS_AS(grid({{0, 0}, {2, 0}}), InputError);
  CHECK_THROWS_AS(grid({{0, 0}, {0, 0}}), InputError);
}

TEST_CASE("gadget coordinates") {
  const Rational e(1, 64);
  const std::array dirs{Direction::kPosX, Direction::kNegX, Direction::kPosY};
  const auto g = build_gadget({0, 0}, dirs, e);
  CHECK(g[Role::kM] == pt(0, 0));
  CHECK(g.connector_direction == Direction::kNegY);
  CHECK(g[Role::kC] == pt(0, Rational(-1, 4) - e));
  CHECK(g[Role::kIc] == pt(0, Rational(-1, 2) - Rational(3) * e));
  CHECK(g[Role::kI1] == pt(0, Rational(-1, 2) - Rational(2) * e));
  // S3 faces +y and its partner point sits one epsilon step clockwise.
  CHECK(g[Role::kS3] == pt(0, Rational(1, 4)));
  CHECK(g[Role::kS3p] == pt(e, Rational(1, 4)));
  CHECK(g[Role::kS1] == pt(Rational(1, 4), 0));
  CHECK(g[Role::kS1p] == pt(Rational(1, 4), -e));
  const Rational mc2 = squared_distance(g[Role::kM], g[Role::kC]);
  const Rational ci2 = squared_distance(g[Role::kC], g[Role::kIc]);
  CHECK(mc2 == (Rational(1, 4) + e) * (Rational(1, 4) + e));
  CHECK(ci2 == (Rational(1, 4) + Rational(2) * e) * (Rational(1, 4) + Rational(2) * e));
  for (Role r : {Role::kI1, Role::kI2, Role::kI3, Role::kI4}) {
    CHECK(squared_distance(g[r], g[Role::kIc]) == e * e);
  }
}

TEST_CASE("degree one and two gadgets fill the smallest free directions") {
  const Rational e(1, 64);
  const std::array one{Direction::kPosY};
  const auto g1 = build_gadget({3, 3}, one, e);
  CHECK(g1.satellite_directions == std::array{Direction::kPosX, Direction::kNegX, Direction::kPosY});
  CHECK(g1.connector_direction == Direction::kNegY);
  const std::array two{Direction::kNegX, Direction::kNegY};
  const auto g2 = build_gadget({0, 0}, two, e);
  CHECK(g2.satellite_directions == std::array{Direction::kPosX, Direction::kNegX, Direction::kNegY});
  CHECK(g2.connector_direction == Direction::kPosY);
  const std::array none{Direction::kPosX, Direction::kNegX, Direction::kPosY, Direction::kNegY};
  CHECK_THROWS_AS(build_gadget({0, 0}, none, e), InputError);
  CHECK_THROWS_AS(build_gadget({0, 0}, std::span<const Direction>{}, e), InputError);
  CHECK_THROWS_AS(build_gadget({0, 0}, one, Rational(1, 16)), InputError);
  CHECK_THROWS_AS(build_gadget({0, 0}, one, Rational(0)), InputError);
}

TEST_CASE("reduction sizes and partners") {
  const auto r2 = reduce(path(2), default_epsilon());
  CHECK(r2.instance.size() == 26);
  CHECK(partner_entries(r2) == 2);
  const PointId s = ReductionOutput::point(0, Role::kS1);
  REQUIRE(r2.partner[s] != kNoPoint);
  CHECK(r2.instance[s] == pt(Rational(1, 4), 0));
  CHECK(r2.instance[r2.partner[s]] == pt(Rational(3, 4), 0));
  CHECK(r2.partner[r2.partner[s]] == s);

  const auto r3 = reduce(path(3), default_epsilon());
  CHECK(r3.instance.size() == 39);
  CHECK(partner_entries(r3) == 4);
  for (PointId p = 0; p < r3.instance.size(); ++p) {
    CHECK(r3.gadget_of[p] == p / kGadgetSize);
    if (r3.partner[p] != kNoPoint) CHECK(r3.partner[r3.partner[p]] == p);
  }
  CHECK_THROWS_AS(reduce(path(1), default_epsilon()), InputError);
}

TEST_CASE("geometry suite passes on assorted graphs") {
  const std::vector<GridGraph> graphs{
      path(2), path(5), grid({{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
      grid({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}, {0, 3}}),
      grid({{0, 0}, {1, 0}, {2, 0}, {1, 1}, {1, 2}, {0, 2}, {2, 2}}),
      grid({{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}})};
  for (const auto& g : graphs) {
    for (Rational e : {Rational(1, 64), Rational(1, 48), Rational(1, 256)}) {
      const auto r = reduce(g, e);
      const auto rep = check_gadget_geometry(r);
      CHECK(rep.ok());
      CHECK(rep.checks > 0);
    }
  }
}

TEST_CASE("hamiltonian path search") {
  CHECK(find_ham_path(path(3)));
  CHECK(find_ham_path(path(2)));
  CHECK(find_ham_path(grid({{0, 0}, {1, 0}, {0, 1}, {1, 1}})));
  // A star with three leaves has no Hamiltonian path.
  CHECK_FALSE(find_ham_path(grid({{1, 1}, {0, 1}, {2, 1}, {1, 0}})));
  std::vector<GridVertex> big;
  for (std::int64_t i = 0; i <= static_cast<std::int64_t>(kHamPathCap); ++i) big.push_back({i, 0});
  CHECK_THROWS_AS(find_ham_path(GridGraph::from_vertices(big)), RefusedError);
}

TEST_CASE("hamiltonian path edges") {
  const auto sq = grid({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const std::vector<GridVertex> cycle{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}};
  const auto edges = hamiltonian_path_edges(sq, cycle);
  CHECK(edges.size() == 3);
  CHECK(is_hamiltonian_path_or_cycle(4, edges));
  const std::vector<GridVertex> jump{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  CHECK_THROWS_AS(hamiltonian_path_edges(sq, jump), InputError);
  const std::vector<GridVertex> short_path{{0, 0}, {1, 0}};
  CHECK_THROWS_AS(hamiltonian_path_edges(sq, short_path), InputError);
  const std::vector<GridEdge> full_cycle{{0, 1}, {1, 3}, {2, 3}, {0, 2}};
  CHECK(is_hamiltonian_path_or_cycle(4, full_cycle));
  const std::vector<GridEdge> split{{0, 1}, {2, 3}};
  CHECK_FALSE(is_hamiltonian_path_or_cycle(4, split));
}

TEST_CASE("hamiltonian path encoding round trip") {
  const std::vector<GridGraph> graphs{
      path(2), path(3), path(4), path(5), grid({{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
      grid({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}, {0, 3}}),
      grid({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}})};
  for (const auto& g : graphs) {
    const auto r = reduce(g, default_epsilon());
    const auto h = find_ham_path(g);
    REQUIRE(h);
    const auto n = assignment_from_ham_path(r, *h);
    CHECK(is_valid(r.instance, n));
    const auto prof = interference_profile(r.instance, n);
    CHECK(*std::max_element(prof.begin(), prof.end()) == 5);
    CHECK(prof == interference_profile_exact(r.instance, n));
    for (PointId p = 0; p < prof.size(); ++p) {
      switch (r.role_of[p]) {
        case Role::kM:
        case Role::kIc:
          CHECK(prof[p] == 5);
          break;
        case Role::kI1:
          CHECK(prof[p] == 3);
          break;
        case Role::kI2:
        case Role::kI3:
        case Role::kI4:
          // own ball plus the I1 ball (which reaches C) plus the I_c ball
          CHECK(prof[p] == 3);
          break;
        case Role::kC:
          // partnered satellites have radius 1/2 and reach C
          CHECK(prof[p] >= 3);
          CHECK(prof[p] <= 5);
          break;
        default:
          CHECK(prof[p] <= 5);
      }
    }
    const auto recovered = extract_connection_structure(r, n);
    CHECK(recovered == hamiltonian_path_edges(g, *h));
    CHECK(is_hamiltonian_path_or_cycle(g.size(), recovered));

    // Scaling the reduced instance changes nothing.
    CHECK(interference_profile(r.instance.scaled(Rational(7, 3)), n) == prof);
  }
}

TEST_CASE("connection structure of a disconnected assignment is empty") {
  const auto r = reduce(path(2), default_epsilon());
  const auto h = find_ham_path(path(2));
  const auto base = assignment_from_ham_path(r, *h);
  auto rec = std::vector<PointId>(base.receivers().begin(), base.receivers().end());
  for (std::uint32_t v = 0; v < 2; ++v) {
    for (Role s : {Role::kS1, Role::kS2, Role::kS3}) rec[ReductionOutput::point(v, s)] = ReductionOutput::point(v, Role::kM);
  }
  const auto n = ReceiverAssignment::asym2d(rec);
  CHECK(extract_connection_structure(r, n).empty());
  CHECK_FALSE(is_valid(r.instance, n));
}

TEST_CASE("encoding rejects non-hamiltonian input") {
  const auto r = reduce(path(3), default_epsilon());
  const std::vector<GridVertex> bad{{0, 0}, {2, 0}, {1, 0}};
  CHECK_THROWS_AS(assignment_from_ham_path(r, bad), InputError);
}
