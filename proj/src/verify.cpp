#include "chromadia/verify.hpp"

#include <algorithm>

namespace chromadia {

namespace {

bool colours_in_range(const VertexColouring& c) {
  for (int x : c.colors)
    if (x < 1 || x > c.k) return false;
  return true;
}

// First improper edge in lexicographic edge order.
std::optional<Violation> improper_edge(const Graph& g, const std::vector<int>& col) {
  for (auto [u, v] : g.edges())
    if (col[u] == col[v])
      return Violation{Violation::Kind::ImproperEdge, {u, v}};
  return std::nullopt;
}

// Cycle in the subgraph induced by colour classes {a, b}, if any. Strips
// degree-<=1 vertices; a nonempty remainder is a 2-core, walked from its
// smallest vertex to the smallest non-backtracking neighbour until a vertex
// repeats. Exact and deterministic.
std::optional<std::vector<int>> bichromatic_cycle(const Graph& g,
                                                  const std::vector<int>& col,
                                                  int a, int b) {
  int n = g.n();
  std::vector<char> in(n, 0);
  std::vector<int> d(n, 0);
  for (int v = 0; v < n; ++v) in[v] = (col[v] == a || col[v] == b);
  for (auto [u, v] : g.edges())
    if (in[u] && in[v]) {
      ++d[u];
      ++d[v];
    }
  std::vector<int> strip;
  for (int v = 0; v < n; ++v)
    if (in[v] && d[v] <= 1) strip.push_back(v);
  while (!strip.empty()) {
    int u = strip.back();
    strip.pop_back();
    in[u] = 0;
    for (int w : g.adj(u))
      if (in[w] && --d[w] == 1) strip.push_back(w);
  }
  int s = -1;
  for (int v = 0; v < n && s == -1; ++v)
    if (in[v]) s = v;
  if (s == -1) return std::nullopt;
  std::vector<int> seq;
  std::vector<int> pos(n, -1);
  int prev = -1, cur = s;
  while (pos[cur] == -1) {
    pos[cur] = static_cast<int>(seq.size());
    seq.push_back(cur);
    int next = -1;
    for (int w : g.adj(cur))
      if (in[w] && w != prev) {
        next = w;
        break;
      }
    prev = cur;
    cur = next;
  }
  return std::vector<int>(seq.begin() + pos[cur], seq.end());
}

bool subgraph_two_colours_has_cycle(const Graph& g, const std::vector<int>& col,
                                    int a, int b) {
  // Forest test on the {a,b} classes: edges vs vertices per component.
  int n = g.n();
  std::vector<int> comp(n, -1);
  int verts = 0, edgecnt = 0, comps = 0;
  for (int s = 0; s < n; ++s) {
    if (col[s] != a && col[s] != b) continue;
    ++verts;
    if (comp[s] != -1) continue;
    ++comps;
    std::vector<int> stack{s};
    comp[s] = s;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.adj(u)) {
        if (col[w] != a && col[w] != b) continue;
        if (comp[w] == -1) {
          comp[w] = s;
          stack.push_back(w);
        }
      }
    }
  }
  for (auto [u, v] : g.edges())
    if ((col[u] == a || col[u] == b) && (col[v] == a || col[v] == b)) ++edgecnt;
  return edgecnt > verts - comps;
}

// Star-forest view: a proper colouring is a star colouring iff every two
// colour classes induce a disjoint union of stars (no path on 4 vertices).
bool two_classes_form_star_forest(const Graph& g, const std::vector<int>& col,
                                  int a, int b) {
  int n = g.n();
  std::vector<int> d(n, 0);
  for (auto [u, v] : g.edges())
    if ((col[u] == a || col[u] == b) && (col[v] == a || col[v] == b)) {
      ++d[u];
      ++d[v];
    }
  // A disjoint union of stars = every edge has an endpoint of degree 1,
  // plus no cycles. Equivalent: no edge with both endpoints of degree >= 2.
  for (auto [u, v] : g.edges())
    if ((col[u] == a || col[u] == b) && (col[v] == a || col[v] == b))
      if (d[u] >= 2 && d[v] >= 2) return false;
  return !subgraph_two_colours_has_cycle(g, col, a, b);
}

void revalidate(const Graph& g, const std::vector<int>& col, const Violation& v) {
  auto dies = [] { throw Error(Err::Internal, "witness failed revalidation"); };
  const auto& w = v.witness;
  auto edge = [&](int i, int j) { return g.has_edge(w[i], w[j]); };
  switch (v.kind) {
    case Violation::Kind::ImproperEdge:
      if (w.size() != 2 || !edge(0, 1) || col[w[0]] != col[w[1]]) dies();
      break;
    case Violation::Kind::BichromaticCycle: {
      if (w.size() < 3) dies();
      std::vector<int> cs;
      for (size_t i = 0; i < w.size(); ++i) {
        if (!g.has_edge(w[i], w[(i + 1) % w.size()])) dies();
        cs.push_back(col[w[i]]);
      }
      std::sort(cs.begin(), cs.end());
      cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
      if (cs.size() > 2) dies();
      break;
    }
    case Violation::Kind::BichromaticP4: {
      if (w.size() != 4 || !edge(0, 1) || !edge(1, 2) || !edge(2, 3)) dies();
      std::vector<int> vs(w);
      std::sort(vs.begin(), vs.end());
      if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) dies();
      if (col[w[0]] != col[w[2]] || col[w[1]] != col[w[3]] || col[w[0]] == col[w[1]])
        dies();
      break;
    }
    case Violation::Kind::BichromaticP3:
      if (w.size() != 3 || !edge(0, 1) || !edge(1, 2) || w[0] == w[2] ||
          col[w[0]] != col[w[2]])
        dies();
      break;
    default:
      break;
  }
}

}  // namespace

const char* kind_name(ColouringKind k) {
  switch (k) {
    case ColouringKind::Proper: return "proper";
    case ColouringKind::Acyclic: return "acyclic";
    case ColouringKind::Star: return "star";
    case ColouringKind::Injective: return "injective";
  }
  return "?";
}

const char* violation_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::ColourOutOfRange: return "colour out of range";
    case Violation::Kind::ImproperEdge: return "improper edge";
    case Violation::Kind::BichromaticCycle: return "bichromatic cycle";
    case Violation::Kind::BichromaticP4: return "bichromatic P4";
    case Violation::Kind::BichromaticP3: return "bichromatic P3";
    case Violation::Kind::AdjacentGap: return "adjacent label gap too small";
    case Violation::Kind::DistanceTwoGap: return "distance-2 label gap too small";
    case Violation::Kind::LabelOutOfRange: return "label out of range";
    case Violation::Kind::IndependenceEdge: return "edge inside independent part";
    case Violation::Kind::ForestCycle: return "cycle inside forest part";
  }
  return "?";
}

CheckResult check_colouring(const Graph& g, const VertexColouring& c,
                            ColouringKind kind) {
  if (static_cast<int>(c.colors.size()) != g.n())
    throw Error(Err::ArityMismatch, "colour vector length != graph order");
  const auto& col = c.colors;
  if (!colours_in_range(c)) {
    for (int v = 0; v < g.n(); ++v)
      if (col[v] < 1 || col[v] > c.k)
        return Violation{Violation::Kind::ColourOutOfRange, {v}};
  }
  if (auto bad = improper_edge(g, col)) {
    revalidate(g, col, *bad);
    return bad;
  }
  if (kind == ColouringKind::Proper) return std::nullopt;

  if (kind == ColouringKind::Acyclic) {
    for (int a = 1; a <= c.k; ++a)
      for (int b = a + 1; b <= c.k; ++b)
        if (auto cyc = bichromatic_cycle(g, col, a, b)) {
          Violation v{Violation::Kind::BichromaticCycle, *cyc};
          revalidate(g, col, v);
          return v;
        }
    return std::nullopt;
  }

  if (kind == ColouringKind::Star) {
    // Scan P4s around each edge as the middle edge, ascending.
    std::optional<Violation> found;
    for (auto [b, cc] : g.edges()) {
      for (int a : g.adj(b)) {
        if (a == cc) continue;
        for (int d : g.adj(cc)) {
          if (d == b || d == a) continue;
          if (col[a] == col[cc] && col[b] == col[d] && col[a] != col[b]) {
            found = Violation{Violation::Kind::BichromaticP4, {a, b, cc, d}};
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    // Independent check via the star-forest characterisation.
    bool forest_ok = true;
    for (int a = 1; a <= c.k && forest_ok; ++a)
      for (int b = a + 1; b <= c.k && forest_ok; ++b)
        if (!two_classes_form_star_forest(g, col, a, b)) forest_ok = false;
    if (found.has_value() == forest_ok)
      throw Error(Err::Internal, "star checkers disagree");
    if (found) {
      revalidate(g, col, *found);
      return found;
    }
    return std::nullopt;
  }

  // Injective: no bichromatic path on 3 vertices, i.e. no two vertices with a
  // common neighbour share a colour.
  for (int b = 0; b < g.n(); ++b) {
    const auto& nb = g.adj(b);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        if (col[nb[i]] == col[nb[j]]) {
          Violation v{Violation::Kind::BichromaticP3, {nb[i], b, nb[j]}};
          revalidate(g, col, v);
          return v;
        }
  }
  return std::nullopt;
}

CheckResult check_lab_labelling(const Graph& g, const Labelling& lab) {
  if (static_cast<int>(lab.labels.size()) != g.n())
    throw Error(Err::ArityMismatch, "label vector length != graph order");
  const auto& lb = lab.labels;
  for (int v = 0; v < g.n(); ++v)
    if (lb[v] < 1 || lb[v] > lab.k)
      return Violation{Violation::Kind::LabelOutOfRange, {v}};
  for (auto [u, v] : g.edges())
    if (std::abs(lb[u] - lb[v]) < lab.a1)
      return Violation{Violation::Kind::AdjacentGap, {u, v}};
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      auto com = common_neighbours(g, u, v);
      if (!com.empty() && std::abs(lb[u] - lb[v]) < lab.a2)
        return Violation{Violation::Kind::DistanceTwoGap, {u, com.front(), v}};
    }
  return std::nullopt;
}

CheckResult check_if_partition(const Graph& g, const IFPartition& p) {
  std::vector<int> count(g.n(), 0);
  for (int v : p.I) {
    if (v < 0 || v >= g.n()) throw Error(Err::NotAPartition, "I vertex out of range");
    ++count[v];
  }
  for (int v : p.F) {
    if (v < 0 || v >= g.n()) throw Error(Err::NotAPartition, "F vertex out of range");
    ++count[v];
  }
  for (int v = 0; v < g.n(); ++v)
    if (count[v] != 1)
      throw Error(Err::NotAPartition, "vertex " + std::to_string(v) +
                                          (count[v] ? " covered twice" : " uncovered"));
  std::vector<char> inI(g.n(), 0);
  for (int v : p.I) inI[v] = 1;
  for (auto [u, v] : g.edges())
    if (inI[u] && inI[v])
      return Violation{Violation::Kind::IndependenceEdge, {u, v}};
  // F must induce a forest.
  std::vector<int> fs;
  for (int v = 0; v < g.n(); ++v)
    if (!inI[v]) fs.push_back(v);
  std::sort(fs.begin(), fs.end());
  Graph f = g.induced(fs);
  if (!is_forest(f)) {
    // Surface some cycle: colour everything 1 and reuse the cycle finder.
    std::vector<int> ones(f.n(), 1);
    auto cyc = bichromatic_cycle(f, ones, 1, 1);
    std::vector<int> witness;
    if (cyc)
      for (int x : *cyc) witness.push_back(fs[x]);
    return Violation{Violation::Kind::ForestCycle, witness};
  }
  return std::nullopt;
}

}  // namespace chromadia
