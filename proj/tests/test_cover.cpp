#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>

#include "netfractal/cover.hpp"
#include "netfractal/generators.hpp"
#include "test_support.hpp"

using netfractal::BoxCover;
using netfractal::cover_series;
using netfractal::DistanceMatrix;
using netfractal::exact_min_cover;
using netfractal::Graph;
using netfractal::greedy_cover;
using netfractal::is_valid_cover;
using netfractal::PermutationPolicy;
using netfractal::Rng;

namespace {
std::vector<int> identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}
}  // namespace

TEST_CASE("path of 4, box size 2, identity order: the cover worked out by hand") {
  // Auxiliary graph at l=2 links pairs at distance >= 2: {0-2, 0-3, 1-3}.
  // Scanning 0,1,2,3: 0 takes color 0; 1 is unlinked to 0, joins it; 2 sees
  // 0, opens color 1; 3 sees 0 and 1 in color 0, joins color 1.
  const DistanceMatrix dist = netfractal::all_pairs_distances(netfractal::path_graph(4));
  const BoxCover cover = greedy_cover(dist, 2, identity(4));
  REQUIRE(cover.l == 2);
  REQUIRE(cover.boxes == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  REQUIRE(is_valid_cover(cover, dist));
}

TEST_CASE("path of 4, box size 2: box-count distribution over all 24 orders") {
  // The auxiliary graph is the path 2-0-3-1; greedy coloring of a 4-path
  // needs a third color exactly when a middle vertex is colored last among
  // itself and its two neighbours that already disagree. Hand enumeration
  // gives 18 orders with 2 boxes and 6 with 3, mean 2.25 exactly.
  const DistanceMatrix dist = netfractal::all_pairs_distances(netfractal::path_graph(4));
  std::vector<int> perm = identity(4);
  std::map<std::size_t, int> histogram;
  double total = 0.0;
  do {
    const BoxCover cover = greedy_cover(dist, 2, perm);
    REQUIRE(is_valid_cover(cover, dist));
    ++histogram[cover.boxes.size()];
    total += static_cast<double>(cover.boxes.size());
  } while (std::next_permutation(perm.begin(), perm.end()));
  REQUIRE(histogram.at(2) == 18);
  REQUIRE(histogram.at(3) == 6);
  REQUIRE(total / 24.0 == 2.25);
}

TEST_CASE("box size 1 isolates every node; sizes beyond the diameter merge all") {
  const DistanceMatrix dist = netfractal::all_pairs_distances(netfractal::cycle_graph(7));
  Rng rng(1);
  const BoxCover ones = greedy_cover(dist, 1, netfractal::random_permutation(7, rng));
  REQUIRE(ones.boxes.size() == 7);
  const BoxCover all = greedy_cover(dist, dist.diameter + 1, identity(7));
  REQUIRE(all.boxes.size() == 1);
  REQUIRE(all.boxes[0] == identity(7));
}

TEST_CASE("boxes list nodes in ascending order and partition the node set") {
  netfractal::Rng rng(77);
  const Graph g = testsupport::random_connected_graph(25, 15, rng);
  const DistanceMatrix dist = netfractal::all_pairs_distances(g);
  for (int l = 1; l <= dist.diameter + 1; ++l) {
    const BoxCover cover = greedy_cover(dist, l, netfractal::random_permutation(g.n, rng));
    REQUIRE(is_valid_cover(cover, dist));
    for (const auto& box : cover.boxes) REQUIRE(std::is_sorted(box.begin(), box.end()));
  }
}

TEST_CASE("is_valid_cover rejects broken partitions") {
  const DistanceMatrix dist = netfractal::all_pairs_distances(netfractal::path_graph(4));
  BoxCover distant;
  distant.l = 2;
  distant.boxes = {{0, 3}, {1, 2}};  // d(0,3)=3 >= 2
  REQUIRE_FALSE(is_valid_cover(distant, dist));

  BoxCover missing;
  missing.l = 4;
  missing.boxes = {{0, 1, 2}};
  REQUIRE_FALSE(is_valid_cover(missing, dist));

  BoxCover doubled;
  doubled.l = 4;
  doubled.boxes = {{0, 1}, {1, 2, 3}};
  REQUIRE_FALSE(is_valid_cover(doubled, dist));

  BoxCover empty_box;
  empty_box.l = 4;
  empty_box.boxes = {{0, 1, 2, 3}, {}};
  REQUIRE_FALSE(is_valid_cover(empty_box, dist));
}

TEST_CASE("greedy_cover validates its arguments") {
  const DistanceMatrix dist = netfractal::all_pairs_distances(netfractal::path_graph(3));
  REQUIRE_THROWS_AS(greedy_cover(dist, 0, identity(3)), std::invalid_argument);
  REQUIRE_THROWS_AS(greedy_cover(dist, 2, identity(4)), std::invalid_argument);
  REQUIRE_THROWS_AS(greedy_cover(dist, 2, std::vector<int>{0, 1, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(greedy_cover(dist, 2, std::vector<int>{0, 1, 5}), std::invalid_argument);
}

TEST_CASE("exact minimum cover matches closed forms") {
  const DistanceMatrix c6 = netfractal::all_pairs_distances(netfractal::cycle_graph(6));
  REQUIRE(exact_min_cover(c6, 1) == 6);   // every node alone
  REQUIRE(exact_min_cover(c6, 2) == 3);   // three antipodal pairs
  REQUIRE(exact_min_cover(c6, 4) == 1);   // diameter is 3
  const DistanceMatrix k5 = netfractal::all_pairs_distances(netfractal::complete_graph(5));
  REQUIRE(exact_min_cover(k5, 2) == 1);
  REQUIRE(exact_min_cover(k5, 1) == 5);
  const DistanceMatrix p4 = netfractal::all_pairs_distances(netfractal::path_graph(4));
  REQUIRE(exact_min_cover(p4, 2) == 2);
  REQUIRE(exact_min_cover(p4, 3) == 2);  // ceil(4/3) with d(0,2)=2 < 3
}

TEST_CASE("exact minimum cover agrees with partition enumeration on random graphs") {
  netfractal::Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng.bounded(7));  // up to 8 nodes
    const Graph g = testsupport::random_connected_graph(
        n, static_cast<int>(rng.bounded(5)), rng);
    const DistanceMatrix dist = netfractal::all_pairs_distances(g);
    for (int l = 1; l <= dist.diameter + 1; ++l) {
      const int exact = exact_min_cover(dist, l);
      const int brute = testsupport::brute_force_min_cover(dist, l);
      INFO("n=" << n << " l=" << l);
      REQUIRE(exact == brute);
      // and the greedy count never goes below the optimum
      const BoxCover cover = greedy_cover(dist, l, netfractal::random_permutation(n, rng));
      REQUIRE(static_cast<int>(cover.boxes.size()) >= exact);
    }
  }
}

TEST_CASE("exact_min_cover rejects oversized instances") {
  const DistanceMatrix big = netfractal::all_pairs_distances(netfractal::path_graph(17));
  REQUIRE_THROWS_AS(exact_min_cover(big, 2), std::invalid_argument);
  const DistanceMatrix p3 = netfractal::all_pairs_distances(netfractal::path_graph(3));
  REQUIRE_THROWS_AS(exact_min_cover(p3, 0), std::invalid_argument);
}

TEST_CASE("cover_series is reproducible and tracks its seed") {
  const DistanceMatrix dist = netfractal::all_pairs_distances(netfractal::grid_graph(4, 4));
  const std::vector<int> ls = {1, 2, 3, 4, 5, 6, 7};
  const auto a = cover_series(dist, ls, 99);
  const auto b = cover_series(dist, ls, 99);
  REQUIRE(a.size() == ls.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].l == ls[i]);
    REQUIRE(a[i].ordering_seed == 99);
    REQUIRE(a[i].boxes == b[i].boxes);
    REQUIRE(is_valid_cover(a[i], dist));
  }
}

TEST_CASE("redraw policy replays the permutation stream draw by draw") {
  const DistanceMatrix dist = netfractal::all_pairs_distances(netfractal::path_graph(6));
  const std::vector<int> ls = {2, 3};
  const auto covers = cover_series(dist, ls, 7, PermutationPolicy::redraw_per_l);
  Rng rng(7);
  const auto perm1 = netfractal::random_permutation(6, rng);
  const auto perm2 = netfractal::random_permutation(6, rng);
  REQUIRE(covers[0].boxes == greedy_cover(dist, 2, perm1).boxes);
  REQUIRE(covers[1].boxes == greedy_cover(dist, 3, perm2).boxes);
}

TEST_CASE("shared policy reuses one permutation for every box size") {
  const DistanceMatrix dist = netfractal::all_pairs_distances(netfractal::path_graph(6));
  const std::vector<int> ls = {2, 3, 4};
  const auto covers = cover_series(dist, ls, 11, PermutationPolicy::shared_across_l);
  Rng rng(11);
  const auto perm = netfractal::random_permutation(6, rng);
  for (std::size_t i = 0; i < ls.size(); ++i)
    REQUIRE(covers[i].boxes == greedy_cover(dist, ls[i], perm).boxes);
}

TEST_CASE("cover_series needs at least one box size") {
  const DistanceMatrix dist = netfractal::all_pairs_distances(netfractal::path_graph(3));
  REQUIRE_THROWS_AS(cover_series(dist, {}, 1), std::invalid_argument);
}
