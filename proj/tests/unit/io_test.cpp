#include <doctest.h>

#include <random>
#include <sstream>

#include "rim/errors.hpp"
#include "rim/io.hpp"
#include "support.hpp"

using namespace rim;

namespace {

template <class T>
T parse_as(const std::string& s) {
  std::istringstream in(s);
  if constexpr (std::is_same_v<T, Instance1D>) {
    return io::parse_points_1d(in);
  } else if constexpr (std::is_same_v<T, Instance2D>) {
    return io::parse_points_2d(in);
  } else {
    return io::parse_assignment(in);
  }
}

}  // namespace

TEST_CASE("point files") {
  std::istringstream in("# header\n3\n1/2   # inline\n\n-1\n");
  const auto any = io::parse_points(in);
  REQUIRE(std::holds_alternative<Instance1D>(any));
  const auto& inst = std::get<Instance1D>(any);
  CHECK(inst.size() == 3);
  CHECK(inst[0] == Rational(-1));
  CHECK(inst[1] == Rational(1, 2));

  std::istringstream in2("0 0\n1/4 -3\n");
  const auto any2 = io::parse_points(in2);
  REQUIRE(std::holds_alternative<Instance2D>(any2));
  CHECK(std::get<Instance2D>(any2)[1] == Point2{Rational(1, 4), Rational(-3)});
}

TEST_CASE("malformed point files are rejected") {
  for (const char* bad : {"", "# only comments\n", "1\n1\n", "1\n2 3\n", "1 2 3\n", "abc\n", "0 0\n0 0\n"}) {
    CAPTURE(bad);
    std::istringstream in(bad);
    CHECK_THROWS_AS(io::parse_points(in), InputError);
  }
}

TEST_CASE("assignment files") {
  const auto a = parse_as<ReceiverAssignment>("model sinktree1d\nsink 0\n1 0\n2 1\n");
  CHECK(a.model() == Model::kSinkTree1D);
  CHECK(*a.sink() == 0);
  CHECK(a.receiver(2) == 1);
  const auto b = parse_as<ReceiverAssignment>("# c\nmodel asym2d\n1 0\n0 1\n");
  CHECK(b.model() == Model::kAsym2D);
  CHECK(b.receiver(0) == 1);
  for (const char* bad : {"1 0\n", "model foo\n", "model sinktree1d\n1 0\n", "model sinktree1d\n1 0\nsink 0\n",
                          "model asym2d\n0 1\n0 1\n1 0\n", "model asym2d\n0 0\n", "model asym2d\n0 x\n",
                          "model sinktree1d\nsink 0\n2 0\n"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_as<ReceiverAssignment>(bad), InputError);
  }
}

TEST_CASE("grid files") {
  std::istringstream in("0 0\n1 0 # edge\n");
  CHECK(io::parse_grid(in).size() == 2);
  std::istringstream bad("0 0.5\n");
  CHECK_THROWS_AS(io::parse_grid(bad), InputError);
}

TEST_CASE("round trips are byte identical after canonicalization") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 10;
    const auto inst = rim::testing::random_line(rng, n, 100).scaled(Rational(1 + t % 5, 3));
    std::ostringstream pts;
    io::write_points(pts, inst);
    CHECK(parse_as<Instance1D>(pts.str()) == inst);

    const auto a = rim::testing::random_tree(rng, n);
    const auto text = io::to_string(a);
    const auto back = parse_as<ReceiverAssignment>(text);
    CHECK(back == a);
    CHECK(io::to_string(back) == text);
  }
  const Instance2D plane({{Rational(1, 2), Rational(0)}, {Rational(-3), Rational(7, 4)}});
  std::ostringstream os;
  io::write_points(os, plane);
  CHECK(parse_as<Instance2D>(os.str()) == plane);
  const auto m = ReceiverAssignment::asym2d({1, 0});
  CHECK(parse_as<ReceiverAssignment>(io::to_string(m)) == m);
}

TEST_CASE("missing files are input errors") {
  CHECK_THROWS_AS(io::read_points_file("/nonexistent/points.txt"), InputError);
}
