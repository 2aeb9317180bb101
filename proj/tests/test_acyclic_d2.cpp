#include "chromadia/acyclic_d2.hpp"
#include "chromadia/enumerate.hpp"
#include "doctest.h"

using namespace chromadia;

namespace {

Graph c4() { return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
Graph k4() {
  return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

std::vector<std::vector<int>> colour_lists(const std::vector<VertexColouring>& cs) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cs) out.push_back(c.colors);
  return out;
}

}  // namespace

TEST_CASE("forest 2-colourings enumerate component swaps") {
  Graph k2 = Graph::from_edge_list(2, {{0, 1}});
  CHECK(colour_lists(forest_two_colourings(k2)) ==
        std::vector<std::vector<int>>{{1, 2}});

  CHECK(colour_lists(forest_two_colourings(Graph::from_edge_list(2, {}))) ==
        std::vector<std::vector<int>>{{1, 1}, {1, 2}});

  Graph two_paths = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(colour_lists(forest_two_colourings(two_paths)) ==
        std::vector<std::vector<int>>{{1, 2, 1, 1, 2}, {1, 2, 1, 2, 1}});

  CHECK_THROWS_AS(forest_two_colourings(c4()), Error);
  CHECK_THROWS_AS(forest_two_colourings(Graph::from_edge_list(3, {})), Error);
}

TEST_CASE("edge bound refuses dense graphs outright") {
  auto d = decide_acyclic3_d2(k4());
  CHECK(!d.colouring);
  CHECK(d.trace == AcyclicTrace::EdgeBound);
}

TEST_CASE("degenerate and small orders go to exhaustive search") {
  auto one = decide_acyclic3_d2(Graph::from_edge_list(1, {}));
  REQUIRE(one.colouring);
  CHECK(one.trace == AcyclicTrace::SmallGraph);

  auto d = decide_acyclic3_d2(c4());
  REQUIRE(d.colouring);
  CHECK(d.trace == AcyclicTrace::SmallGraph);
}

TEST_CASE("vertex deletion stage colours cycle-plus-vertex instances") {
  // With the exhaustive stage disabled, C4 resolves by deleting vertex 0.
  auto d = decide_acyclic3_d2(c4(), {.small_cutoff = 0});
  REQUIRE(d.colouring);
  CHECK(d.trace == AcyclicTrace::VertexDeletionForest);
  CHECK(d.colouring->colors == std::vector<int>{1, 2, 3, 2});
  CHECK(!check_colouring(c4(), *d.colouring, ColouringKind::Acyclic));
}

TEST_CASE("pair enumeration handles planted hard instances") {
  Rng rng(7);
  Graph g = planted_acyclic_yes(4, rng);
  auto d = decide_acyclic3_d2(g, {.small_cutoff = 0});
  REQUIRE(d.colouring);
  CHECK(d.trace == AcyclicTrace::PairEnumeration);
  CHECK(!check_colouring(g, *d.colouring, ColouringKind::Acyclic));
}

TEST_CASE("precondition violations throw") {
  CHECK_THROWS_AS(decide_acyclic3_d2(Graph::from_edge_list(2, {})), Error);
  Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_THROWS_AS(decide_acyclic3_d2(p4), Error);
}

TEST_CASE("decisions are deterministic") {
  Rng rng(7);
  Graph g = planted_acyclic_yes(4, rng);
  auto a = decide_acyclic3_d2(g, {.small_cutoff = 0});
  auto b = decide_acyclic3_d2(g, {.small_cutoff = 0});
  REQUIRE(a.colouring);
  CHECK(a.colouring->colors == b.colouring->colors);
  CHECK(a.trace == b.trace);
}
