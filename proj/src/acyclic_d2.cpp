#include "chromadia/acyclic_d2.hpp"

#include <algorithm>
#include <set>

#include "chromadia/oracle.hpp"

namespace chromadia {

const char* acyclic_trace_name(AcyclicTrace t) {
  switch (t) {
    case AcyclicTrace::EdgeBound: return "EdgeBound";
    case AcyclicTrace::SmallGraph: return "SmallGraph";
    case AcyclicTrace::VertexDeletionForest: return "VertexDeletionForest";
    case AcyclicTrace::PairEnumeration: return "PairEnumeration";
  }
  return "?";
}

namespace {

// Components in order of smallest member; vertices in BFS order within each.
std::vector<std::vector<int>> components_of(const Graph& g) {
  const int n = g.n();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < members.size(); ++head)
      for (int w : g.adj(members[head]))
        if (comp[w] == -1) {
          comp[w] = comp[s];
          members.push_back(w);
        }
    out.push_back(std::move(members));
  }
  return out;
}

// Parity colouring with {c_even, c_odd}, component roots at their smallest
// vertices. Valid for forests.
std::vector<int> parity_colours(const Graph& g, int c_even, int c_odd) {
  std::vector<int> col(g.n(), 0);
  for (const auto& members : components_of(g)) {
    auto dist = bfs_dist(g, members.front());
    for (int v : members) col[v] = (dist[v] % 2 == 0) ? c_even : c_odd;
  }
  return col;
}

}  // namespace

std::vector<VertexColouring> forest_two_colourings(const Graph& g) {
  if (!is_forest(g)) throw Error(Err::NotAForest, "forest_two_colourings: input has a cycle");
  auto comps = components_of(g);
  if (comps.size() > 2)
    throw Error(Err::TooManyComponents, "forest_two_colourings: more than two components");

  std::vector<int> base = parity_colours(g, 1, 2);
  std::vector<VertexColouring> out;
  out.push_back(VertexColouring{2, base});
  if (comps.size() == 2) {
    std::vector<int> flipped = base;
    for (int v : comps[1]) flipped[v] = 3 - flipped[v];
    out.push_back(VertexColouring{2, std::move(flipped)});
  }
  return out;
}

AcyclicDecision decide_acyclic3_d2(const Graph& g, const AcyclicOptions& opt) {
  if (!is_connected(g)) throw Error(Err::Disconnected, "decide_acyclic3_d2: disconnected input");
  auto diam = diameter(g);
  if (*diam > 2)
    throw Error(Err::DiameterTooLarge, "decide_acyclic3_d2: diameter exceeds 2");

  const int n = g.n();

  // Any three colour classes pairwise induce forests, so m <= 2n-3 (n >= 2).
  if (n >= 2 && g.m() > 2 * n - 3)
    return {std::nullopt, AcyclicTrace::EdgeBound};

  if (n <= opt.small_cutoff || *diam <= 1) {
    OracleBudget b;
    b.max_vertices = std::max(n, opt.small_cutoff);
    return {exact_colouring(g, 3, ColouringKind::Acyclic, b), AcyclicTrace::SmallGraph};
  }

  // A vertex whose removal leaves a forest yields a colouring directly: the
  // forest's parity classes are independent, so every cycle through the
  // removed vertex meets all three colours.
  for (int u = 0; u < n; ++u) {
    std::vector<int> keep;
    keep.reserve(n - 1);
    for (int v = 0; v < n; ++v)
      if (v != u) keep.push_back(v);
    Graph h = g.induced(keep);
    if (!is_forest(h)) continue;

    std::vector<int> sub = parity_colours(h, 2, 3);
    std::vector<int> col(n, 1);
    for (int i = 0; i < h.n(); ++i) col[keep[i]] = sub[i];
    VertexColouring vc{3, std::move(col)};
    if (check_colouring(g, vc, ColouringKind::Acyclic))
      throw Error(Err::Internal, "decide_acyclic3_d2: vertex-deletion colouring failed verification");
    return {std::move(vc), AcyclicTrace::VertexDeletionForest};
  }

  // Candidate colour-3 classes: common neighbourhoods of two disjoint edges,
  // minus at most one vertex. Induced pairs first, then the rest; within a
  // phase, lexicographic over the canonical edge list.
  const auto& es = g.edges();
  std::vector<std::array<int, 4>> pairs;
  for (int rounds = 0; rounds < 2; ++rounds) {
    const bool want_induced = (rounds == 0);
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        int a = es[i].first, b = es[i].second, c = es[j].first, d = es[j].second;
        if (a == c || a == d || b == c || b == d) continue;
        bool induced = !g.has_edge(a, c) && !g.has_edge(a, d) &&
                       !g.has_edge(b, c) && !g.has_edge(b, d);
        if (induced == want_induced) pairs.push_back({a, b, c, d});
      }
  }

  auto side = [&](int a, int b) {
    std::vector<char> in(n, 0);
    for (int w : g.adj(a)) in[w] = 1;
    for (int w : g.adj(b)) in[w] = 1;
    in[a] = in[b] = 0;
    return in;
  };

  std::set<std::vector<int>> tried;
  for (const auto& [a, b, c, d] : pairs) {
    auto in1 = side(a, b);
    auto in2 = side(c, d);
    std::vector<int> base;
    for (int v = 0; v < n; ++v)
      if (in1[v] && in2[v]) base.push_back(v);

    for (int drop = -1; drop < static_cast<int>(base.size()); ++drop) {
      std::vector<int> x3;
      for (int idx = 0; idx < static_cast<int>(base.size()); ++idx)
        if (idx != drop) x3.push_back(base[idx]);
      if (!tried.insert(x3).second) continue;

      bool indep = true;
      for (std::size_t p = 0; p < x3.size() && indep; ++p)
        for (std::size_t q = p + 1; q < x3.size(); ++q)
          if (g.has_edge(x3[p], x3[q])) {
            indep = false;
            break;
          }
      if (!indep) continue;

      std::vector<char> in3(n, 0);
      for (int v : x3) in3[v] = 1;
      std::vector<int> keep;
      for (int v = 0; v < n; ++v)
        if (!in3[v]) keep.push_back(v);
      Graph f = g.induced(keep);
      if (!is_forest(f) || component_count(f) > 2) continue;

      for (const auto& two : forest_two_colourings(f)) {
        std::vector<int> col(n, 3);
        for (int i = 0; i < f.n(); ++i) col[keep[i]] = two.colors[i];
        VertexColouring vc{3, std::move(col)};
        if (!check_colouring(g, vc, ColouringKind::Acyclic))
          return {std::move(vc), AcyclicTrace::PairEnumeration};
      }
    }
  }
  return {std::nullopt, AcyclicTrace::PairEnumeration};
}

}  // namespace chromadia
