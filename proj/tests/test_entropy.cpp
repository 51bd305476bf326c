#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "netfractal/entropy.hpp"
#include "test_support.hpp"

using netfractal::BoxCover;
using netfractal::information_entropy;

namespace {
// Build a cover with the given box sizes over nodes 0..n-1.
BoxCover cover_of_sizes(const std::vector<int>& sizes) {
  BoxCover c;
  c.l = 1;
  int next = 0;
  for (int s : sizes) {
    std::vector<int> box(static_cast<std::size_t>(s));
    std::iota(box.begin(), box.end(), next);
    next += s;
    c.boxes.push_back(std::move(box));
  }
  return c;
}
}  // namespace

TEST_CASE("degenerate partitions hit their closed forms exactly") {
  // one box holding everything -> 0, bitwise
  REQUIRE(information_entropy(cover_of_sizes({9}), 9) == 0.0);
  // all singletons -> ln n, bitwise
  for (int n : {1, 2, 5, 62, 1000}) {
    REQUIRE(information_entropy(cover_of_sizes(std::vector<int>(n, 1)), n) ==
            std::log(static_cast<double>(n)));
  }
  // n = 1 is both cases at once and must be 0 = ln 1
  REQUIRE(information_entropy(cover_of_sizes({1}), 1) == 0.0);
}

TEST_CASE("hand-computed values") {
  // sizes {3,1} on 4 nodes: -(3/4)ln(3/4) - (1/4)ln(1/4)
  REQUIRE_THAT(information_entropy(cover_of_sizes({3, 1}), 4),
               Catch::Matchers::WithinAbs(0.56233514461880829, 1e-15));
  // sizes {2,1,1} on 4 nodes
  REQUIRE_THAT(information_entropy(cover_of_sizes({2, 1, 1}), 4),
               Catch::Matchers::WithinAbs(1.0397207708399179, 1e-15));
  // k equal boxes -> ln k independent of the box size
  for (int k : {2, 3, 10}) {
    for (int s : {1, 4, 25}) {
      REQUIRE_THAT(information_entropy(cover_of_sizes(std::vector<int>(k, s)), k * s),
                   Catch::Matchers::WithinAbs(std::log(static_cast<double>(k)), 1e-12));
    }
  }
}

TEST_CASE("random partitions match the direct-summation oracle") {
  netfractal::Rng rng(555);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng.bounded(200));
    std::vector<int> sizes;
    int left = n;
    while (left > 0) {
      const int s = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(left)));
      sizes.push_back(s);
      left -= s;
    }
    const double got = information_entropy(cover_of_sizes(sizes), n);
    const double want = testsupport::direct_entropy(sizes, n);
    REQUIRE_THAT(got, Catch::Matchers::WithinAbs(want, 1e-12));
    REQUIRE(got >= 0.0);
    REQUIRE(got <= std::log(static_cast<double>(n)) + 1e-12);
  }
}

TEST_CASE("entropy rejects non-partitions") {
  REQUIRE_THROWS_AS(information_entropy(cover_of_sizes({2, 1}), 4), std::invalid_argument);
  REQUIRE_THROWS_AS(information_entropy(cover_of_sizes({2, 3}), 4), std::invalid_argument);
  REQUIRE_THROWS_AS(information_entropy(cover_of_sizes({1}), 0), std::invalid_argument);
}

TEST_CASE("the value never carries a negative sign") {
  // a single box short-circuits to +0.0; make sure -0.0 cannot leak out
  const double z = information_entropy(cover_of_sizes({4}), 4);
  REQUIRE(z == 0.0);
  REQUIRE_FALSE(std::signbit(z));
}
