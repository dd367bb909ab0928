#include <doctest.h>

#include <bit>
#include <random>

#include "rim/dp_solver.hpp"
#include "rim/errors.hpp"
#include "rim/gen1d.hpp"
#include "rim/model.hpp"
#include "rim/nna.hpp"
#include "support.hpp"

using namespace rim;
using rim::testing::line;

namespace {

std::uint32_t ceil_log2(std::size_t n) { return n <= 1 ? 0 : std::bit_width(n - 1); }

}  // namespace

TEST_CASE("nna on two points") {
  const auto r = nna(line({0, 1}));
  CHECK(*r.assignment.sink() == 0);
  CHECK(r.assignment.receiver(1) == 0);
  CHECK(interference(line({0, 1}), r.assignment) == 1);
  CHECK(r.rounds == 1);
}

TEST_CASE("nna rounds on P_2") {
  const auto p2 = line({0, 1, 3, 4});
  const auto r1 = nna_round(p2, nna_singletons(p2));
  CHECK(r1.components == std::vector<NnaComponent>{{0, 1, 0}, {2, 3, 2}});
  CHECK(r1.receivers == std::vector<PointId>{kNoPoint, 0, kNoPoint, 2});

  const auto r2 = nna_round(p2, r1);
  CHECK(r2.components == std::vector<NnaComponent>{{0, 3, 0}});
  CHECK(r2.receivers == std::vector<PointId>{kNoPoint, 0, 1, 2});
  CHECK_THROWS_AS(nna_round(p2, r2), InputError);

  const auto full = nna(p2, true);
  CHECK(full.rounds == 2);
  CHECK(full.trace.size() == 2);
  CHECK(interference(p2, full.assignment) == 2);
}

TEST_CASE("nna survivor rule picks the sink with distinct neighbor gaps") {
  // Round 1 merges {0,1} and {3,4} around sinks 0 and 3; {10} is alone then
  // joins. The result must be a valid tree either way.
  const auto inst = line({0, 1, 3, 4, 10});
  const auto r = nna(inst, true);
  CHECK(is_valid(inst, r.assignment));
  CHECK(r.rounds <= ceil_log2(inst.size()));
}

TEST_CASE("nna on symmetric integer inputs") {
  for (std::size_t n = 1; n <= 40; ++n) {
    std::vector<std::int64_t> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<std::int64_t>(i);
    const auto inst = Instance1D::from_integers(xs);
    const auto r = nna(inst);
    CHECK(is_valid(inst, r.assignment));
    CHECK(interference(inst, r.assignment) <= ceil_log2(n) + 2);
    CHECK(r.rounds <= ceil_log2(n));
  }
}

TEST_CASE("nna on P_10") {
  const auto inst = gen_p(10).instance;
  const auto r = nna(inst);
  CHECK(is_valid(inst, r.assignment));
  CHECK(interference(inst, r.assignment) <= 12);
}

TEST_CASE("nna never beats the exact solver and is deterministic") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 10;
    const auto inst = rim::testing::random_line(rng, n, 80);
    const auto a = nna(inst, true);
    const auto b = nna(inst, true);
    CHECK(a.assignment == b.assignment);
    CHECK(a.trace == b.trace);
    CHECK(is_valid(inst, a.assignment));
    CHECK(interference(inst, a.assignment) >= solve_opt_search(inst).optimum);
    CHECK(interference(inst, a.assignment) <= ceil_log2(n) + 2);
    CHECK(a.rounds <= ceil_log2(n));
    // Components in every round are disjoint intervals covering all points.
    for (const auto& comps : a.trace) {
      PointId next = 0;
      for (const auto& c : comps) {
        CHECK(c.lo == next);
        CHECK(c.lo <= c.sink);
        CHECK(c.sink <= c.hi);
        next = c.hi + 1;
      }
      CHECK(next == n);
    }
  }
}

TEST_CASE("nna on large random instances") {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 5; ++t) {
    const auto inst = rim::testing::random_line(rng, 2000, 1'000'000'000);
    const auto r = nna(inst);
    CHECK(is_valid(inst, r.assignment));
    CHECK(interference(inst, r.assignment) <= ceil_log2(2000) + 2);
  }
}
