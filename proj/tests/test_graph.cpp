#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "netfractal/graph.hpp"
#include "test_support.hpp"

using netfractal::Graph;
using netfractal::GraphBuilder;
using netfractal::GraphError;
using netfractal::largest_connected_component;

TEST_CASE("builder drops self-loops and duplicates in either direction") {
  GraphBuilder b;
  for (int i = 0; i < 3; ++i) b.add_node(std::to_string(i));
  REQUIRE(b.add_edge(0, 1));
  REQUIRE_FALSE(b.add_edge(1, 0));  // reversed duplicate
  REQUIRE_FALSE(b.add_edge(0, 1));
  REQUIRE_FALSE(b.add_edge(2, 2));  // self-loop
  REQUIRE(b.add_edge(1, 2));
  REQUIRE(b.edge_count() == 2);

  const Graph g = b.build();
  REQUIRE(g.n == 3);
  REQUIRE(g.m == 2);
  REQUIRE(g.adj[1] == std::vector<int>{0, 2});
}

TEST_CASE("adjacency is sorted and symmetric") {
  GraphBuilder b;
  for (int i = 0; i < 5; ++i) b.add_node(std::to_string(i));
  b.add_edge(4, 0);
  b.add_edge(4, 2);
  b.add_edge(4, 1);
  b.add_edge(3, 4);
  const Graph g = b.build();
  REQUIRE(g.adj[4] == std::vector<int>{0, 1, 2, 3});
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[static_cast<std::size_t>(v)]) {
      const auto& back = g.adj[static_cast<std::size_t>(u)];
      REQUIRE(std::find(back.begin(), back.end(), v) != back.end());
    }
}

TEST_CASE("node_for maps identifiers in order of first appearance") {
  GraphBuilder b;
  REQUIRE(b.node_for("alpha") == 0);
  REQUIRE(b.node_for("beta") == 1);
  REQUIRE(b.node_for("alpha") == 0);
  REQUIRE(b.node_for("gamma") == 2);
  b.add_edge(0, 1);
  const Graph g = b.build();
  REQUIRE(g.label(0) == "alpha");
  REQUIRE(g.label(2) == "gamma");
}

TEST_CASE("building an empty graph throws") {
  GraphBuilder b;
  REQUIRE_THROWS_AS(b.build(), GraphError);
}

TEST_CASE("edge endpoints out of range throw") {
  GraphBuilder b;
  b.add_node("0");
  REQUIRE_THROWS_AS(b.add_edge(0, 1), GraphError);
  REQUIRE_THROWS_AS(b.add_edge(-1, 0), GraphError);
}

TEST_CASE("largest connected component keeps the bigger piece, renumbered") {
  // component A = {0,3}, component B = {1,2,4}: B wins
  GraphBuilder b;
  for (int i = 0; i < 5; ++i) b.add_node("n" + std::to_string(i));
  b.add_edge(0, 3);
  b.add_edge(1, 2);
  b.add_edge(2, 4);
  const Graph g = largest_connected_component(b.build());
  REQUIRE(g.n == 3);
  REQUIRE(g.m == 2);
  // old ids 1,2,4 -> new 0,1,2 preserving order
  REQUIRE(g.label(0) == "n1");
  REQUIRE(g.label(1) == "n2");
  REQUIRE(g.label(2) == "n4");
  REQUIRE(g.adj[0] == std::vector<int>{1});
  REQUIRE(g.adj[1] == std::vector<int>{0, 2});
}

TEST_CASE("component ties go to the smallest node id") {
  GraphBuilder b;
  for (int i = 0; i < 4; ++i) b.add_node(std::to_string(i));
  b.add_edge(0, 2);
  b.add_edge(1, 3);
  const Graph g = largest_connected_component(b.build());
  REQUIRE(g.n == 2);
  REQUIRE(g.label(0) == "0");
  REQUIRE(g.label(1) == "2");
}

TEST_CASE("a connected graph passes through unchanged") {
  netfractal::Rng rng(5);
  const Graph g = testsupport::random_connected_graph(30, 20, rng);
  const Graph lcc = largest_connected_component(g);
  REQUIRE(lcc.n == g.n);
  REQUIRE(lcc.m == g.m);
  REQUIRE(lcc.adj == g.adj);
}

TEST_CASE("isolated nodes are components of size one") {
  GraphBuilder b;
  for (int i = 0; i < 3; ++i) b.add_node(std::to_string(i));
  b.add_edge(0, 1);
  const Graph g = largest_connected_component(b.build());
  REQUIRE(g.n == 2);
  REQUIRE(g.m == 1);
}
