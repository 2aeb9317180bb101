#include <functional>
#include <string>

#include "chromadia/gadgets.hpp"
#include "chromadia/oracle.hpp"
#include "doctest.h"

using namespace chromadia;

namespace {

Graph k2() { return Graph::from_edge_list(2, {{0, 1}}); }
Graph p3() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}}); }
Graph k3() { return Graph::from_edge_list(3, {{0, 1}, {0, 2}, {1, 2}}); }
Graph c4() { return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
Graph k4() {
  return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}
Graph c6() {
  return Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}
Graph c8() {
  return Graph::from_edge_list(
      8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}});
}

bool has_note(const GadgetOutput& o, const std::string& needle) {
  for (const auto& s : o.notes)
    if (s.find(needle) != std::string::npos) return true;
  return false;
}

void check_err(const std::function<void()>& f, Err want) {
  try {
    f();
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.kind() == want);
  }
}

}  // namespace

TEST_CASE("dominating clique join") {
  auto o = dominating_clique(k2(), 1);
  CHECK(o.graph.n() == 3);
  CHECK(o.graph.m() == 3);
  CHECK(o.roles == std::vector<std::string>{"old", "old", "apex"});

  auto p32 = dominating_clique(p3(), 2);
  CHECK(p32.graph.n() == 5);
  CHECK(p32.graph.m() == 9);  // 2 old + 1 clique + 6 join
  REQUIRE(diameter(p32.graph));
  CHECK(*diameter(p32.graph) <= 2);
  CHECK(has_note(p32, "diameter <= 2: asserted"));

  check_err([] { dominating_clique(k2(), 0); }, Err::PreconditionViolated);
}

TEST_CASE("near-bipartite to acyclic-3 gadget") {
  auto o2 = nearbip_to_acyclic3(k2());
  CHECK(o2.graph.n() == 11);  // 3n + 4m + 1
  CHECK(has_note(o2, "triangle-free"));
  CHECK(has_note(o2, "2-degenerate"));
  CHECK(has_note(o2, "diameter <= 4"));
  CHECK(o2.roles.size() == 11);

  CHECK(nearbip_to_acyclic3(k4()).graph.n() == 37);

  // Yes and no instances map to yes and no instances.
  OracleBudget b{.max_vertices = 60};
  for (const Graph& g : {k2(), k3()}) {
    auto nb = exact_near_bipartite(g);
    auto ac = exact_colouring(nearbip_to_acyclic3(g).graph, 3,
                              ColouringKind::Acyclic, b);
    CHECK(nb.has_value() == ac.has_value());
  }
}

TEST_CASE("proper-3 to star-3 gadget") {
  auto o = col3_to_star3(k2());
  CHECK(o.graph.n() == 5);  // n + 3m
  CHECK(o.graph.m() == 6);
  CHECK(o.roles[0] == "old");
  CHECK(o.roles[2] == "x_0_1");

  auto o3 = col3_to_star3(k3());
  CHECK(o3.graph.n() == 12);
  CHECK(has_note(o3, "diameter <= 8: asserted"));

  OracleBudget b{.max_vertices = 40};
  for (const Graph& g : {k2(), k3()}) {
    auto pc = exact_colouring(g, 3, ColouringKind::Proper, b);
    auto st = exact_colouring(col3_to_star3(g).graph, 3, ColouringKind::Star, b);
    CHECK(pc.has_value() == st.has_value());
  }
}

TEST_CASE("hamiltonian-cycle expansion into 4-cycles") {
  auto e1 = hc_expand_4cycles(Graph::from_edge_list(1, {}));
  CHECK(e1.graph.n() == 4);
  CHECK(e1.graph.m() == 4);

  auto ep3 = hc_expand_4cycles(p3());
  CHECK(ep3.graph.n() == 12);
  CHECK(ep3.graph.m() == 16);
  CHECK(ep3.roles[0] == "v0");
  CHECK(ep3.roles[3] == "v3");
  CHECK(ep3.roles[5] == "v1");
  CHECK(has_note(ep3, "bipartite: asserted"));
  CHECK(has_note(ep3, "maximum degree <= 5: asserted"));

  OracleBudget hb{.max_vertices = 24};
  for (const Graph& g : {p3(), c4(), k3()}) {
    auto before = exact_hamiltonian(g, HamMode::Cycle, hb);
    auto after = exact_hamiltonian(hc_expand_4cycles(g).graph, HamMode::Cycle, hb);
    CHECK(before.has_value() == after.has_value());
  }
}

TEST_CASE("cycle-to-path reduction splits a degree-2 vertex") {
  check_err([] { hc_to_hp(k4()); }, Err::NoDegree2Vertex);

  auto o = hc_to_hp(c4());
  CHECK(o.graph.n() == 7);
  CHECK(o.graph.m() == 8);
  CHECK(o.roles[0] == "split");
  CHECK(o.roles[4] == "twin");
  CHECK(o.roles[5] == "pendant");
  CHECK(o.roles[6] == "pendant");

  OracleBudget hb{.max_vertices = 24};
  for (const Graph& g : {c4(), p3()}) {
    auto hc = exact_hamiltonian(g, HamMode::Cycle, hb);
    auto hp = exact_hamiltonian(hc_to_hp(g).graph, HamMode::Path, hb);
    CHECK(hc.has_value() == hp.has_value());
  }
}

TEST_CASE("same-class completion on bipartite inputs") {
  auto o6 = complete_same_class_pairs(c6(), {{0, 2, 4}, {1, 3, 5}});
  CHECK(o6.graph.m() == c6().m());
  CHECK(has_note(o6, "added edges: 0"));
  CHECK(has_note(o6, "diameter check skipped"));
  CHECK(has_note(o6, "input edges in no triangle: asserted"));

  auto o8 = complete_same_class_pairs(c8(), {{0, 2, 4, 6}, {1, 3, 5, 7}});
  CHECK(o8.graph.m() == c8().m() + 4);
  CHECK(has_note(o8, "added edges: 4"));
  CHECK(has_note(o8, "diameter <= 2: asserted"));
  CHECK(has_note(o8, "triangle check skipped"));
  CHECK(o8.graph.has_edge(0, 4));
  CHECK(o8.graph.has_edge(3, 7));

  check_err([] { complete_same_class_pairs(k3(), {{0, 2}, {1}}); }, Err::NotBipartite);
  check_err([] { complete_same_class_pairs(c4(), {{0, 1}, {2}}); }, Err::NotAPartition);
}

TEST_CASE("labelling-path bridge round trip at diameter 2") {
  auto lab = exact_lab(c4(), 1, 2, 4);
  REQUIRE(lab);
  auto path = labelling_to_path(c4(), *lab);
  CHECK(path.size() == 4);
  CHECK(path_to_labelling(c4(), path).labels == lab->labels);

  Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  check_err([&] { labelling_to_path(p4, *lab); }, Err::DiameterNot2);
  check_err([] { path_to_labelling(c4(), {0, 2, 1, 3}); }, Err::WitnessInvalid);
  check_err([] { labelling_to_path(c4(), {1, 2, 4, {1, 1, 2, 3}}); },
            Err::WitnessInvalid);
}
