#include "chromadia/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace chromadia {

namespace {

std::vector<int> bfs_order(const Graph& g) {
  std::vector<int> order;
  std::vector<char> seen(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      int u = order[head++];
      for (int w : g.adj(u))
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
    }
  }
  return order;
}

struct NodeCounter {
  long long nodes = 0;
  long long cap = -1;
  void tick() {
    if (cap >= 0 && ++nodes > cap)
      throw Error(Err::BudgetExceeded, "search node budget exhausted");
  }
};

// Shared engine for the colouring-flavoured searches: branch in BFS order,
// values ascending, forward checking on the proper constraint, plus a
// kind-specific test for violations through the newly coloured vertex. The
// incremental test is exact on full assignments (every violation has a last
// coloured vertex), so pruning never changes the first valid leaf.
struct ColourSearch {
  const Graph& g;
  int k;
  ColouringKind kind;
  std::vector<std::uint64_t> avail;  // remaining candidate colours per vertex
  std::vector<int> order;
  std::vector<int> col;  // 0 = uncoloured
  NodeCounter counter;

  ColourSearch(const Graph& gg, int kk, ColouringKind kd,
               std::vector<std::uint64_t> allowed)
      : g(gg), k(kk), kind(kd), avail(std::move(allowed)), order(bfs_order(gg)),
        col(gg.n(), 0) {}

  bool cycle_through(int v) const {
    // A bichromatic cycle through v among coloured vertices: two neighbours
    // of v sharing colour d and connected inside the {col[v],d} subgraph
    // minus v.
    int cv = col[v];
    for (int d = 1; d <= k; ++d) {
      if (d == cv) continue;
      int hits = 0;
      for (int w : g.adj(v)) hits += col[w] == d;
      if (hits < 2) continue;
      std::vector<int> comp(g.n(), -1);
      for (int s = 0; s < g.n(); ++s) {
        if (s == v || comp[s] != -1 || (col[s] != cv && col[s] != d)) continue;
        std::vector<int> stack{s};
        comp[s] = s;
        while (!stack.empty()) {
          int u = stack.back();
          stack.pop_back();
          for (int w : g.adj(u)) {
            if (w == v || comp[w] != -1 || (col[w] != cv && col[w] != d)) continue;
            comp[w] = s;
            stack.push_back(w);
          }
        }
      }
      std::vector<int> seen_comp;
      for (int w : g.adj(v)) {
        if (col[w] != d) continue;
        if (std::find(seen_comp.begin(), seen_comp.end(), comp[w]) !=
            seen_comp.end())
          return true;
        seen_comp.push_back(comp[w]);
      }
    }
    return false;
  }

  bool p4_through(int v) const {
    int cv = col[v];
    // v as an endpoint: v-x-y-z.
    for (int x : g.adj(v)) {
      if (!col[x]) continue;
      for (int y : g.adj(x)) {
        if (!col[y] || y == v || col[y] != cv) continue;
        for (int z : g.adj(y))
          if (col[z] && z != x && z != v && col[z] == col[x]) return true;
      }
    }
    // v as an inner vertex: x-v-y-z.
    for (int x : g.adj(v)) {
      if (!col[x]) continue;
      for (int y : g.adj(v)) {
        if (!col[y] || y == x || col[y] != col[x]) continue;
        for (int z : g.adj(y))
          if (col[z] && z != v && z != x && col[z] == cv) return true;
      }
    }
    return false;
  }

  bool p3_through(int v) const {
    int cv = col[v];
    const auto& nb = g.adj(v);
    for (size_t i = 0; i < nb.size(); ++i) {
      if (!col[nb[i]]) continue;
      for (size_t j = i + 1; j < nb.size(); ++j)
        if (col[nb[j]] && col[nb[i]] == col[nb[j]]) return true;
    }
    for (int x : g.adj(v))
      for (int z : g.adj(x))
        if (z != v && col[z] == cv) return true;
    return false;
  }

  bool ok_through(int v) const {
    switch (kind) {
      case ColouringKind::Proper: return true;
      case ColouringKind::Acyclic: return !cycle_through(v);
      case ColouringKind::Star: return !p4_through(v) && !cycle_through(v);
      case ColouringKind::Injective: return !p3_through(v);
    }
    return true;
  }

  bool run(size_t i) {
    if (i == order.size()) return true;
    int v = order[i];
    std::uint64_t cand = avail[v];
    while (cand) {
      int bit = std::countr_zero(cand);
      cand &= cand - 1;
      counter.tick();
      col[v] = bit + 1;
      if (ok_through(v)) {
        std::vector<std::pair<int, std::uint64_t>> saved;
        bool dead = false;
        for (int w : g.adj(v)) {
          if (col[w]) continue;
          if (avail[w] & (std::uint64_t(1) << bit)) {
            saved.emplace_back(w, avail[w]);
            avail[w] &= ~(std::uint64_t(1) << bit);
            if (!avail[w]) dead = true;
          }
        }
        if (!dead && run(i + 1)) return true;
        for (auto& [w, m] : saved) avail[w] = m;
      }
      col[v] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<VertexColouring> exact_colouring(const Graph& g, int k,
                                               ColouringKind kind,
                                               OracleBudget b) {
  if (k < 0) throw Error(Err::PreconditionViolated, "negative colour count");
  if (g.n() > b.max_vertices)
    throw Error(Err::BudgetExceeded,
                "order " + std::to_string(g.n()) + " beyond budget " +
                    std::to_string(b.max_vertices));
  if (g.n() == 0) return VertexColouring{k, {}};
  if (k == 0) return std::nullopt;
  // The lexicographically smallest colouring never needs a colour past the
  // branching position, so clamping to n keeps the result identical.
  int keff = std::min(k, g.n());
  if (keff > 62) throw Error(Err::BudgetExceeded, "colour count beyond engine range");
  std::uint64_t full = (std::uint64_t(1) << keff) - 1;
  std::vector<std::uint64_t> allowed(g.n(), full);
  ColourSearch search(g, keff, kind, std::move(allowed));
  if (b.max_nodes) search.counter.cap = *b.max_nodes;
  search.avail[search.order[0]] = 1;  // colour classes permute; pin the root
  if (!search.run(0)) return std::nullopt;
  VertexColouring c{k, search.col};
  if (check_colouring(g, c, kind))
    throw Error(Err::Internal, "oracle produced an invalid colouring");
  return c;
}

std::optional<VertexColouring> exact_list_star3(
    const Graph& g, const std::vector<std::vector<int>>& lists, OracleBudget b) {
  if (static_cast<int>(lists.size()) != g.n())
    throw Error(Err::ArityMismatch, "list count != graph order");
  if (g.n() > b.max_vertices)
    throw Error(Err::BudgetExceeded,
                "order " + std::to_string(g.n()) + " beyond budget " +
                    std::to_string(b.max_vertices));
  std::vector<std::uint64_t> allowed(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    if (lists[v].empty())
      throw Error(Err::EmptyList, "empty list at vertex " + std::to_string(v));
    for (int c : lists[v]) {
      if (c < 1 || c > 3)
        throw Error(Err::ParseError, "list colour outside {1,2,3}");
      allowed[v] |= std::uint64_t(1) << (c - 1);
    }
  }
  if (g.n() == 0) return VertexColouring{3, {}};
  ColourSearch search(g, 3, ColouringKind::Star, std::move(allowed));
  if (b.max_nodes) search.counter.cap = *b.max_nodes;
  if (!search.run(0)) return std::nullopt;
  VertexColouring c{3, search.col};
  if (check_colouring(g, c, ColouringKind::Star))
    throw Error(Err::Internal, "oracle produced an invalid colouring");
  for (int v = 0; v < g.n(); ++v)
    if (std::find(lists[v].begin(), lists[v].end(), c.colors[v]) == lists[v].end())
      throw Error(Err::Internal, "oracle left a vertex off its list");
  return c;
}

std::optional<Labelling> exact_lab(const Graph& g, int a1, int a2, int k,
                                   OracleBudget b) {
  if ((a1 != 1 && a1 != 2) || (a2 != 1 && a2 != 2))
    throw Error(Err::PreconditionViolated, "gaps must lie in {1,2}");
  if (k < 0) throw Error(Err::PreconditionViolated, "negative label bound");
  if (g.n() == 0) return Labelling{a1, a2, k, {}};
  // Degree bound: a labelled vertex's neighbours take distinct labels
  // differing from its own, so degree <= k is necessary.
  for (int v = 0; v < g.n(); ++v)
    if (g.deg(v) > k) return std::nullopt;
  // Order bound for connected graphs: n <= 1 + k + k^2 + ... + k^diam.
  if (is_connected(g) && g.n() > 1) {
    // An edge forces k >= 1 past the degree bound, so powers are sound here.
    int d = *diameter(g);
    long long bound = 1, pow = 1;
    for (int i = 0; i < d && bound < g.n(); ++i) {
      pow = std::min<long long>(pow * k, g.n());
      bound += pow;
    }
    if (g.n() > bound) return std::nullopt;
  }
  if (g.n() > b.max_vertices)
    throw Error(Err::BudgetExceeded,
                "order " + std::to_string(g.n()) + " beyond budget " +
                    std::to_string(b.max_vertices));
  if (k > 62) throw Error(Err::BudgetExceeded, "label bound beyond engine range");

  int n = g.n();
  // Path existence is label-independent; precompute both relations.
  std::vector<std::vector<char>> near(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) near[u][v] = near[v][u] = 1;
      if (!common_neighbours(g, u, v).empty()) {
        near[u][v] |= 2;
        near[v][u] |= 2;
      }
    }
  auto gap_mask = [&](int label, int a) {
    int lo = std::max(1, label - a + 1), hi = std::min(k, label + a - 1);
    std::uint64_t m = 0;
    for (int x = lo; x <= hi; ++x) m |= std::uint64_t(1) << (x - 1);
    return m;
  };
  std::vector<int> order = bfs_order(g);
  std::vector<int> lab(n, 0);
  std::vector<std::uint64_t> avail(n, k == 0 ? 0 : (std::uint64_t(1) << k) - 1);
  NodeCounter counter;
  if (b.max_nodes) counter.cap = *b.max_nodes;

  auto rec = [&](auto&& self, size_t i) -> bool {
    if (i == order.size()) return true;
    int v = order[i];
    std::uint64_t cand = avail[v];
    while (cand) {
      int bit = std::countr_zero(cand);
      cand &= cand - 1;
      counter.tick();
      int label = bit + 1;
      lab[v] = label;
      std::vector<std::pair<int, std::uint64_t>> saved;
      bool dead = false;
      for (int w = 0; w < n && !dead; ++w) {
        if (lab[w] || !near[v][w]) continue;
        std::uint64_t forbid = 0;
        if (near[v][w] & 1) forbid |= gap_mask(label, a1);
        if (near[v][w] & 2) forbid |= gap_mask(label, a2);
        if (avail[w] & forbid) {
          saved.emplace_back(w, avail[w]);
          avail[w] &= ~forbid;
          if (!avail[w]) dead = true;
        }
      }
      if (!dead && self(self, i + 1)) return true;
      for (auto& [w, m] : saved) avail[w] = m;
      lab[v] = 0;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  Labelling out{a1, a2, k, lab};
  if (check_lab_labelling(g, out))
    throw Error(Err::Internal, "oracle produced an invalid labelling");
  return out;
}

std::optional<IFPartition> exact_near_bipartite(const Graph& g, OracleBudget b) {
  if (g.n() > b.max_vertices)
    throw Error(Err::BudgetExceeded,
                "order " + std::to_string(g.n()) + " beyond budget " +
                    std::to_string(b.max_vertices));
  if (g.n() == 0) return IFPartition{{}, {}};
  if (g.n() > 62) throw Error(Err::BudgetExceeded, "order beyond engine range");
  int n = g.n();
  const auto& masks = g.masks();
  for (std::uint64_t I = 1; I < (std::uint64_t(1) << n); ++I) {
    bool indep = true;
    for (int v = 0; v < n && indep; ++v)
      if ((I >> v) & 1)
        if (masks[v] & I) indep = false;
    if (!indep) continue;
    // Forest test on the complement: edges <= vertices - components.
    int fv = 0, fe = 0, comps = 0;
    std::vector<int> label(n, -1);
    for (int v = 0; v < n; ++v)
      if (!((I >> v) & 1)) ++fv;
    for (auto [u, v] : g.edges())
      if (!((I >> u) & 1) && !((I >> v) & 1)) ++fe;
    for (int s = 0; s < n; ++s) {
      if (((I >> s) & 1) || label[s] != -1) continue;
      ++comps;
      std::vector<int> stack{s};
      label[s] = s;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.adj(u))
          if (!((I >> w) & 1) && label[w] == -1) {
            label[w] = s;
            stack.push_back(w);
          }
      }
    }
    if (fe > fv - comps) continue;
    IFPartition p;
    for (int v = 0; v < n; ++v)
      ((I >> v) & 1 ? p.I : p.F).push_back(v);
    if (check_if_partition(g, p))
      throw Error(Err::Internal, "oracle produced an invalid partition");
    return p;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> exact_hamiltonian(const Graph& g, HamMode mode,
                                                  OracleBudget b) {
  if (g.n() > b.max_vertices)
    throw Error(Err::BudgetExceeded,
                "order " + std::to_string(g.n()) + " beyond budget " +
                    std::to_string(b.max_vertices));
  int n = g.n();
  if (n == 0) return std::vector<int>{};
  if (n == 1) return std::vector<int>{0};
  std::vector<std::vector<char>> sharing(n, std::vector<char>(n, 0));
  if (mode == HamMode::PathNoTriangleEdge)
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!common_neighbours(g, u, v).empty()) sharing[u][v] = sharing[v][u] = 1;

  std::vector<char> used(n, 0);
  std::vector<int> seq;
  NodeCounter counter;
  if (b.max_nodes) counter.cap = *b.max_nodes;

  // Every unreached vertex must stay reachable from the live endpoint
  // through unreached vertices; for cycles the root must stay adjacent to
  // that region. Sound pruning: any completion walks exactly that region.
  auto viable = [&](int endpoint, int root) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{endpoint};
    seen[endpoint] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.adj(u)) {
        if (seen[w]) continue;
        if (used[w] && w != root) continue;
        if (mode == HamMode::PathNoTriangleEdge && sharing[u][w]) continue;
        seen[w] = 1;
        if (!used[w]) stack.push_back(w);  // the root is a door, not a corridor
      }
    }
    for (int v = 0; v < n; ++v)
      if (!used[v] && !seen[v]) return false;
    return root < 0 || seen[root];
  };

  auto rec = [&](auto&& self) -> bool {
    int len = static_cast<int>(seq.size());
    if (len == n) {
      if (mode == HamMode::Cycle) return g.has_edge(seq.back(), seq.front());
      return true;
    }
    int cur = seq.back();
    for (int w : g.adj(cur)) {
      if (used[w]) continue;
      if (mode == HamMode::PathNoTriangleEdge && sharing[cur][w]) continue;
      counter.tick();
      used[w] = 1;
      seq.push_back(w);
      bool good = viable(w, mode == HamMode::Cycle ? seq.front() : -1);
      if (good && self(self)) return true;
      seq.pop_back();
      used[w] = 0;
    }
    return false;
  };

  if (mode == HamMode::Cycle) {
    used[0] = 1;
    seq.push_back(0);
    if (rec(rec)) return seq;
    return std::nullopt;
  }
  for (int s = 0; s < n; ++s) {
    std::fill(used.begin(), used.end(), 0);
    seq.clear();
    used[s] = 1;
    seq.push_back(s);
    if (rec(rec)) return seq;
  }
  return std::nullopt;
}

}  // namespace chromadia
