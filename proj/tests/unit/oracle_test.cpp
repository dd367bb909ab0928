#include <doctest.h>

#include <random>

#include "rim/errors.hpp"
#include "rim/model.hpp"
#include "rim/oracle.hpp"
#include "support.hpp"

using namespace rim;
using rim::testing::line;

TEST_CASE("oracle on tiny instances") {
  CHECK(brute_force_1d(line({0, 1})).optimum == 1);
  CHECK(brute_force_1d(line({0, 1, 2})).optimum == 2);
  CHECK(brute_force_1d(line({0, 1, 3, 4})).optimum == 2);
  CHECK(brute_force_1d(line({42})).optimum == 0);
}

TEST_CASE("oracle matches naive enumeration of all receiver maps") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const auto inst = rim::testing::random_line(rng, n, 30);
    const auto r = brute_force_1d(inst);
    CHECK(r.optimum == rim::testing::naive_optimum_1d(inst));
    CHECK(is_valid(inst, r.witness));
    CHECK(rim::testing::naive_interference(inst, r.witness) == r.optimum);
  }
}

TEST_CASE("optimal enumeration yields exactly the optimal trees") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng() % 5;
    const auto inst = rim::testing::random_line(rng, n, 25);
    const auto opt = rim::testing::naive_optimum_1d(inst);
    std::vector<ReceiverAssignment> expected;
    rim::testing::naive_for_each_tree(n, [&](const ReceiverAssignment& a) {
      if (rim::testing::naive_interference(inst, a) == opt) expected.push_back(a);
    });
    std::vector<ReceiverAssignment> got;
    CHECK(enumerate_optimal_1d(inst, [&](const ReceiverAssignment& a) { got.push_back(a); }) == opt);
    auto key = [](const ReceiverAssignment& a) {
      return std::make_pair(*a.sink(), std::vector<PointId>(a.receivers().begin(), a.receivers().end()));
    };
    auto by_key = [&](const ReceiverAssignment& x, const ReceiverAssignment& y) { return key(x) < key(y); };
    std::sort(expected.begin(), expected.end(), by_key);
    auto sorted = got;
    std::sort(sorted.begin(), sorted.end(), by_key);
    CHECK(sorted == expected);
    CHECK(*count_optimal_1d(inst).optimal_count == expected.size());
    // The first yielded tree is the reported witness.
    CHECK(got.front() == brute_force_1d(inst).witness);
  }
}

TEST_CASE("optimal enumeration examples") {
  std::size_t two = 0;
  enumerate_optimal_1d(line({0, 1}), [&](const ReceiverAssignment&) { ++two; });
  CHECK(two == 2);

  const auto p2 = line({0, 1, 3, 4});
  bool some_cross_free = false;
  enumerate_optimal_1d(p2, [&](const ReceiverAssignment& a) {
    CHECK(interference(p2, a) == 2);
    some_cross_free |= cross_edges(p2, a).empty();
  });
  CHECK(some_cross_free);

  enumerate_optimal_1d(line({0, 1, 2}), [&](const ReceiverAssignment& a) { CHECK(interference(line({0, 1, 2}), a) == 2); });
}

TEST_CASE("every tested instance has a cross-free bst optimum") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 7;
    const auto inst = rim::testing::random_line(rng, n, 60);
    bool found = false;
    enumerate_optimal_1d(inst, [&](const ReceiverAssignment& a) {
      found |= cross_edges(inst, a).empty() && has_bst_property(inst, a);
    });
    CHECK(found);
  }
}

TEST_CASE("oracle refuses instances above the cap") {
  std::vector<std::int64_t> xs(10);
  for (int i = 0; i < 10; ++i) xs[i] = i;
  const auto inst = Instance1D::from_integers(xs);
  CHECK_THROWS_AS(brute_force_1d(inst), RefusedError);
  CHECK_THROWS_AS(brute_force_1d(line({0, 1, 2}), 2), RefusedError);
  CHECK_THROWS_AS(brute_force_1d(line({0, 1, 2}), kOracleHardCap + 1), RefusedError);
  CHECK(brute_force_1d(inst, 10).optimum == 3);
}

TEST_CASE("restriction to prefixes of P_3 never lowers the optimum") {
  const std::int64_t p3[] = {0, 1, 3, 4, 9, 10, 12, 13};
  std::uint32_t last = 0;
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto inst = Instance1D::from_integers(std::span(p3, k));
    const auto opt = brute_force_1d(inst).optimum;
    CHECK(opt >= last);
    last = opt;
  }
}

TEST_CASE("planar oracle") {
  const Instance2D two({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
  CHECK(brute_force_2d(two).optimum == 2);

  const Instance2D tri({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  const auto r = brute_force_2d(tri);
  CHECK(r.optimum <= 3);
  CHECK(is_valid(tri, r.witness));
  CHECK(interference(tri, r.witness) == r.optimum);

  // Collinear {0,1,2}: all 8 total maps checked by hand in the loop below.
  const auto col = Instance2D::from_line(line({0, 1, 2}));
  std::uint32_t best = 99;
  for (PointId a : {1u, 2u}) {
    for (PointId b : {0u, 2u}) {
      for (PointId c : {0u, 1u}) {
        const auto n = ReceiverAssignment::asym2d({a, b, c});
        if (is_valid(col, n)) best = std::min(best, interference(col, n));
      }
    }
  }
  CHECK(brute_force_2d(col).optimum == best);
  CHECK(best == 3);

  CHECK_THROWS_AS(brute_force_2d(Instance2D({{Rational(0), Rational(0)}})), InputError);
}

TEST_CASE("sink tree enumeration counts labelled rooted trees") {
  std::size_t count = 0;
  for_each_sink_tree(4, [&](const ReceiverAssignment&) { ++count; });
  CHECK(count == 64);
}
