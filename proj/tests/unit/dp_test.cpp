#include <doctest.h>

#include <random>

#include "rim/dp_solver.hpp"
#include "rim/errors.hpp"
#include "rim/gen1d.hpp"
#include "rim/model.hpp"
#include "rim/nna.hpp"
#include "rim/oracle.hpp"
#include "support.hpp"

using namespace rim;
using rim::testing::line;

TEST_CASE("dp examples") {
  CHECK(solve_exact(line({0, 1})).optimum == 1);
  CHECK(solve_exact(line({0, 1, 3, 4})).optimum == 2);
  CHECK(solve_exact(line({5})).optimum == 0);
  CHECK(solve_exact(gen_p(3).instance).optimum == 3);
}

TEST_CASE("dp subproblem base cases") {
  const auto two = line({0, 1});
  DpSolver s(two, default_dp_cap(2));
  CHECK(s.solve_subproblem({0, 0, 0, {}, {{0, 1}}}).interference == 1);
  CHECK_FALSE(s.solve_subproblem({0, 0, 0, {}, {}}).feasible());
  CHECK(s.solve_subproblem({1, 1, 1, {{0, 1}}, {{1, 0}}}).interference == 2);

  const auto whole = s.solve_subproblem({0, 1, 1, {}, {}});
  CHECK(whole.interference == 1);
  REQUIRE(whole.left);
  CHECK(*whole.left == Subproblem{0, 0, 0, {}, {{0, 1}}});
  CHECK_FALSE(whole.right);

  DpSolver one(line({3}), 1);
  CHECK(one.solve_subproblem({0, 0, 0, {}, {}}).interference == 0);
}

TEST_CASE("malformed subproblems are rejected") {
  const auto inst = line({0, 1, 3, 4});
  DpSolver s(inst, 4);
  CHECK_THROWS_AS(s.solve_subproblem({2, 1, 1, {}, {}}), InputError);
  CHECK_THROWS_AS(s.solve_subproblem({0, 1, 3, {}, {}}), InputError);
  // Incoming range centered inside the interval.
  CHECK_THROWS_AS(s.solve_subproblem({0, 1, 0, {{1, 0}}, {{0, 2}}}), InputError);
  // Incoming range that misses the interval.
  CHECK_THROWS_AS(s.solve_subproblem({0, 1, 0, {{3, 2}}, {{0, 2}}}), InputError);
  // Outgoing range that stays inside and is not the root's.
  CHECK_THROWS_AS(s.solve_subproblem({0, 1, 0, {}, {{0, 2}, {1, 0}}}), InputError);
}

TEST_CASE("dp equals the oracle on random instances") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 1 + rng() % 7;
    const auto inst = rim::testing::random_line(rng, n, 100);
    const auto oracle = brute_force_1d(inst);
    const auto dp = solve_exact(inst);
    CHECK(dp.optimum == oracle.optimum);
    CHECK(is_valid(inst, dp.witness));
    CHECK(rim::testing::naive_interference(inst, dp.witness) == dp.optimum);
    CHECK(has_bst_property(inst, dp.witness));
    CHECK(solve_opt_search(inst).optimum == dp.optimum);
  }
}

TEST_CASE("raising the cap past the optimum changes nothing") {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 8;
    const auto inst = rim::testing::random_line(rng, n, 200);
    const auto opt = solve_opt_search(inst).optimum;
    CHECK_FALSE(solve_with_cap(inst, opt - 1));
    const auto at = solve_with_cap(inst, opt);
    const auto above = solve_with_cap(inst, opt + 1);
    REQUIRE(at);
    REQUIRE(above);
    CHECK(at->optimum == opt);
    CHECK(above->optimum == opt);
  }
}

TEST_CASE("opt search stops at the first feasible cap") {
  DpStats st;
  CHECK(solve_opt_search(line({0, 1}), &st).optimum == 1);
  CHECK(st.cap == 1);
  CHECK(solve_opt_search(line({0, 1, 3, 4}), &st).optimum == 2);
  CHECK(st.cap == 2);
  CHECK(solve_opt_search(gen_p(3).instance).optimum == 3);
}

TEST_CASE("dp is deterministic and reports stats") {
  const auto inst = gen_q(0).instance;
  DpStats a, b;
  const auto r1 = solve_exact(inst, &a);
  const auto r2 = solve_exact(inst, &b);
  CHECK(r1.witness == r2.witness);
  CHECK(a.subproblems == b.subproblems);
  CHECK(a.subproblems > 0);
  CHECK(a.cap <= default_dp_cap(5));
  CHECK(a.cap == interference(inst, nna(inst).assignment));
  CHECK(default_dp_cap(1) == 2);
  CHECK(default_dp_cap(8) == 5);
  CHECK(default_dp_cap(9) == 6);
}

TEST_CASE("dp refuses instances above its point limit") {
  CHECK_THROWS_AS(solve_exact(gen_p(7).instance), RefusedError);
}

TEST_CASE("dp on structured families") {
  CHECK(solve_exact(gen_q(0).instance).optimum == 2);
  CHECK(solve_opt_search(gen_q(1).instance).optimum == 3);
  // P_4 needs 4; proving 3 is infeasible is cheap, finding the 4 is not.
  CHECK_FALSE(solve_with_cap(gen_p(4).instance, 3));
}
