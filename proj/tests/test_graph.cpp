#include <algorithm>

#include "chromadia/graph.hpp"
#include "doctest.h"

using namespace chromadia;

namespace {

Graph c5() { return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }
Graph p4() { return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}}); }
Graph k4() {
  return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("construction canonicalises edges and adjacency") {
  Graph g = Graph::from_edge_list(4, {{3, 1}, {2, 0}, {1, 0}});
  CHECK(g.n() == 4);
  CHECK(g.m() == 3);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}});
  CHECK(g.adj(1) == std::vector<int>{0, 3});
  CHECK(g.has_edge(3, 1));
  CHECK(!g.has_edge(2, 3));
  CHECK(g.deg(0) == 2);
}

TEST_CASE("construction rejects malformed input") {
  CHECK_THROWS_WITH_AS(Graph::from_edge_list(2, {{0, 0}}), doctest::Contains("loop"), Error);
  CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 2}}), Error);
  try {
    Graph::from_edge_list(3, {{0, 1}, {0, 1}});
    FAIL("duplicate accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::DuplicateEdge);
  }
}

TEST_CASE("induced subgraph reindexes against keep") {
  Graph sub = c5().induced({0, 1, 2});
  CHECK(sub.n() == 3);
  CHECK(sub.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("with_extra leaves the base untouched") {
  Graph g = p4();
  Graph h = g.with_extra(2, std::vector<std::pair<int, int>>{{0, 4}, {4, 5}});
  CHECK(h.n() == 6);
  CHECK(h.m() == 5);
  CHECK(h.has_edge(0, 1));
  CHECK(g.n() == 4);
}

TEST_CASE("bfs distances and connectivity") {
  CHECK(bfs_dist(p4(), 0) == std::vector<int>{0, 1, 2, 3});
  Graph two = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK(bfs_dist(two, 0) == std::vector<int>{0, 1, -1, -1});
  CHECK(!is_connected(two));
  CHECK(is_connected(Graph::from_edge_list(0, {})));
  CHECK(is_connected(Graph::from_edge_list(1, {})));
}

TEST_CASE("diameter") {
  CHECK(*diameter(c5()) == 2);
  CHECK(*diameter(p4()) == 3);
  CHECK(*diameter(k4()) == 1);
  CHECK(!diameter(Graph::from_edge_list(3, {{0, 1}})).has_value());
  CHECK_THROWS_AS(diameter(Graph::from_edge_list(0, {})), Error);
}

TEST_CASE("common neighbours") {
  Graph k23 = Graph::from_edge_list(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(common_neighbours(k23, 3, 4) == std::vector<int>{0, 1, 2});
  CHECK(common_neighbours(k23, 0, 1) == std::vector<int>{3, 4});
  CHECK(common_neighbours(p4(), 0, 3).empty());
  CHECK_THROWS_AS(common_neighbours(p4(), 2, 2), Error);
}

TEST_CASE("forests and components") {
  CHECK(is_forest(p4()));
  CHECK(!is_forest(c5()));
  CHECK(component_count(Graph::from_edge_list(5, {{0, 1}, {2, 3}})) == 3);
  CHECK(component_count(p4()) == 1);
}

TEST_CASE("degree-2 false twin classes") {
  Graph k23 = Graph::from_edge_list(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  auto cls = degree2_false_twin_classes(k23);
  REQUIRE(cls.size() == 1);
  CHECK(cls[0] == std::vector<int>{0, 1, 2});
  auto c4cls = degree2_false_twin_classes(
      Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  REQUIRE(c4cls.size() == 2);
  CHECK(c4cls[0] == std::vector<int>{0, 2});
  CHECK(c4cls[1] == std::vector<int>{1, 3});
}

TEST_CASE("induced 2P2 enumeration") {
  CHECK(enumerate_induced_2p2(c5()).empty());
  CHECK(enumerate_induced_2p2(p4()).empty());
  Graph c6 = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  auto pairs = enumerate_induced_2p2(c6);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == InducedTwoP2{0, 1, 3, 4});
  CHECK(pairs[1] == InducedTwoP2{0, 5, 2, 3});
  CHECK(pairs[2] == InducedTwoP2{1, 2, 4, 5});
}

TEST_CASE("violating structures") {
  Graph c4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(violating_structures(c4).clean());

  auto rep5 = violating_structures(c5());
  CHECK(rep5.bad4cycles.empty());
  REQUIRE(rep5.fivecycles.size() == 1);
  CHECK(rep5.fivecycles[0] == std::array<int, 5>{0, 1, 2, 3, 4});

  // K4: every 4-cycle has all degrees 3, so each one violates.
  auto rep4 = violating_structures(k4());
  CHECK(!rep4.bad4cycles.empty());
  CHECK(!rep4.clean());

  // Stars have no cycles at all.
  CHECK(violating_structures(Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})).clean());
}
