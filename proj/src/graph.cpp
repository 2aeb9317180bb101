#include "chromadia/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace chromadia {

const char* err_name(Err e) {
  switch (e) {
    case Err::SelfLoop: return "SelfLoop";
    case Err::DuplicateEdge: return "DuplicateEdge";
    case Err::VertexOutOfRange: return "VertexOutOfRange";
    case Err::EmptyGraph: return "EmptyGraph";
    case Err::SameVertex: return "SameVertex";
    case Err::Disconnected: return "Disconnected";
    case Err::DiameterTooLarge: return "DiameterTooLarge";
    case Err::DiameterNot2: return "DiameterNot2";
    case Err::ArityMismatch: return "ArityMismatch";
    case Err::NotAPartition: return "NotAPartition";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::EmptyList: return "EmptyList";
    case Err::ListTooLarge: return "ListTooLarge";
    case Err::NotAForest: return "NotAForest";
    case Err::TooManyComponents: return "TooManyComponents";
    case Err::PreconditionViolated: return "PreconditionViolated";
    case Err::NotBipartite: return "NotBipartite";
    case Err::NoDegree2Vertex: return "NoDegree2Vertex";
    case Err::WitnessInvalid: return "WitnessInvalid";
    case Err::ParseError: return "ParseError";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw Error(Err::VertexOutOfRange, "negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(Err::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") outside 0.." + std::to_string(n - 1));
    if (u == v)
      throw Error(Err::SelfLoop, "self-loop at vertex " + std::to_string(u));
    auto e = std::minmax(u, v);
    if (!seen.insert({e.first, e.second}).second)
      throw Error(Err::DuplicateEdge, "duplicate edge (" + std::to_string(e.first) +
                                          "," + std::to_string(e.second) + ")");
  }
  for (auto [u, v] : seen) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    g.edges_.emplace_back(u, v);
  }
  for (auto& row : g.adj_) std::sort(row.begin(), row.end());
  if (n <= 64) {
    g.mask_.assign(n, 0);
    for (auto [u, v] : g.edges_) {
      g.mask_[u] |= std::uint64_t(1) << v;
      g.mask_[v] |= std::uint64_t(1) << u;
    }
  }
  return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  if (!mask_.empty()) return (mask_[u] >> v) & 1;
  const auto& row = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(row.begin(), row.end(), other);
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> pos(n_, -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    int v = keep[i];
    if (v < 0 || v >= n_) throw Error(Err::VertexOutOfRange, "induced: vertex out of range");
    if (pos[v] != -1) throw Error(Err::Internal, "induced: repeated vertex");
    pos[v] = i;
  }
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : edges_)
    if (pos[u] != -1 && pos[v] != -1) es.emplace_back(pos[u], pos[v]);
  return from_edge_list(static_cast<int>(keep.size()), es);
}

Graph Graph::with_extra(int extra_vertices,
                        std::span<const std::pair<int, int>> extra_edges) const {
  std::vector<std::pair<int, int>> es = edges_;
  es.insert(es.end(), extra_edges.begin(), extra_edges.end());
  return from_edge_list(n_ + extra_vertices, es);
}

std::vector<int> bfs_dist(const Graph& g, int src) {
  std::vector<int> dist(g.n(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.adj(u))
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  auto d = bfs_dist(g, 0);
  return std::find(d.begin(), d.end(), -1) == d.end();
}

std::optional<int> diameter(const Graph& g) {
  if (g.n() == 0) throw Error(Err::EmptyGraph, "diameter of the empty graph");
  int best = 0;
  for (int v = 0; v < g.n(); ++v) {
    auto d = bfs_dist(g, v);
    for (int x : d) {
      if (x == -1) return std::nullopt;
      best = std::max(best, x);
    }
  }
  return best;
}

std::vector<int> common_neighbours(const Graph& g, int u, int v) {
  if (u == v) throw Error(Err::SameVertex, "common_neighbours of a vertex with itself");
  if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
    throw Error(Err::VertexOutOfRange, "common_neighbours: vertex out of range");
  std::vector<int> out;
  std::set_intersection(g.adj(u).begin(), g.adj(u).end(), g.adj(v).begin(),
                        g.adj(v).end(), std::back_inserter(out));
  return out;
}

bool is_forest(const Graph& g) {
  // A graph is a forest iff m = n - #components.
  return g.m() == g.n() - component_count(g);
}

int component_count(const Graph& g) {
  std::vector<char> seen(g.n(), 0);
  int comps = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    ++comps;
    std::queue<int> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.adj(u))
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
  }
  return comps;
}

std::vector<std::vector<int>> degree2_false_twin_classes(const Graph& g) {
  // Identical neighbourhoods already force non-adjacency (no self-loops).
  std::vector<int> verts;
  for (int v = 0; v < g.n(); ++v)
    if (g.deg(v) == 2) verts.push_back(v);
  std::vector<std::vector<int>> classes;
  std::vector<char> used(g.n(), 0);
  for (int v : verts) {
    if (used[v]) continue;
    std::vector<int> cls{v};
    used[v] = 1;
    for (int w : verts)
      if (!used[w] && g.adj(w) == g.adj(v)) {
        cls.push_back(w);
        used[w] = 1;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<InducedTwoP2> enumerate_induced_2p2(const Graph& g) {
  std::vector<InducedTwoP2> out;
  const auto& es = g.edges();
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j) {
      auto [u1, v1] = es[i];
      auto [u2, v2] = es[j];
      if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) continue;
      if (g.has_edge(u1, u2) || g.has_edge(u1, v2) || g.has_edge(v1, u2) ||
          g.has_edge(v1, v2))
        continue;
      out.push_back({u1, v1, u2, v2});
    }
  return out;
}

StructureReport violating_structures(const Graph& g) {
  StructureReport rep;
  // 4-cycles, canonical: v0 minimal, v1 < v3 among v0's cycle neighbours.
  for (int v0 = 0; v0 < g.n(); ++v0) {
    const auto& nb = g.adj(v0);
    for (size_t a = 0; a < nb.size(); ++a) {
      int v1 = nb[a];
      if (v1 <= v0) continue;
      for (size_t b = a + 1; b < nb.size(); ++b) {
        int v3 = nb[b];
        if (v3 <= v0) continue;
        for (int v2 : common_neighbours(g, v1, v3)) {
          if (v2 <= v0 || v2 == v1 || v2 == v3) continue;
          bool pair02 = g.deg(v0) == 2 && g.deg(v2) == 2;
          bool pair13 = g.deg(v1) == 2 && g.deg(v3) == 2;
          if (!pair02 && !pair13) rep.bad4cycles.push_back({v0, v1, v2, v3});
        }
      }
    }
  }
  // 5-cycles, canonical: v0 minimal, v1 < v4.
  for (int v0 = 0; v0 < g.n(); ++v0)
    for (int v1 : g.adj(v0)) {
      if (v1 <= v0) continue;
      for (int v4 : g.adj(v0)) {
        if (v4 <= v1) continue;
        for (int v2 : g.adj(v1)) {
          if (v2 <= v0 || v2 == v4) continue;
          for (int v3 : g.adj(v2)) {
            if (v3 <= v0 || v3 == v1 || v3 == v4) continue;
            if (g.has_edge(v3, v4)) rep.fivecycles.push_back({v0, v1, v2, v3, v4});
          }
        }
      }
    }
  return rep;
}

}  // namespace chromadia
