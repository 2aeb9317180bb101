#include "chromadia/star_d3.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "chromadia/oracle.hpp"

namespace chromadia {

const char* reduction_rule_name(ReductionRule r) {
  switch (r) {
    case ReductionRule::CommonNeighbourDrop: return "CommonNeighbourDrop";
    case ReductionRule::FalseTwinDedup: return "FalseTwinDedup";
  }
  return "?";
}

const char* branch_case_name(BranchCase c) {
  switch (c) {
    case BranchCase::Case1: return "Case1";
    case BranchCase::Case2a: return "Case2a";
    case BranchCase::Case2b: return "Case2b";
  }
  return "?";
}

namespace {

constexpr std::uint8_t kFull = 0b111;

std::uint8_t cbit(int c) { return static_cast<std::uint8_t>(1u << (c - 1)); }

Graph drop_vertex(const Graph& g, int u, std::vector<int>& ids) {
  std::vector<int> keep;
  keep.reserve(g.n() - 1);
  for (int v = 0; v < g.n(); ++v)
    if (v != u) keep.push_back(v);
  std::vector<int> nids;
  nids.reserve(keep.size());
  for (int v : keep) nids.push_back(ids[v]);
  ids = std::move(nids);
  return g.induced(keep);
}

}  // namespace

Reduced reduce(const Graph& g) {
  Graph cur = g;
  std::vector<int> ids(g.n());
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<Removal> log;

  bool again = true;
  while (again) {
    again = false;
    for (int u = 0; u < cur.n() && !again; ++u)
      for (int v = u + 1; v < cur.n() && !again; ++v) {
        auto com = common_neighbours(cur, u, v);
        if (com.size() < 3) continue;
        if (!std::all_of(com.begin(), com.end(),
                         [&](int w) { return cur.deg(w) == 2; }))
          continue;
        int w = com.front();
        log.push_back({ids[w], ReductionRule::CommonNeighbourDrop, {ids[u], ids[v]}});
        cur = drop_vertex(cur, w, ids);
        again = true;
      }
  }

  auto classes = degree2_false_twin_classes(cur);
  std::vector<char> dead(cur.n(), 0);
  for (const auto& cls : classes) {
    if (cls.size() < 3) continue;
    for (std::size_t i = 2; i < cls.size(); ++i) {
      log.push_back({ids[cls[i]], ReductionRule::FalseTwinDedup, {ids[cls[0]], ids[cls[1]]}});
      dead[cls[i]] = 1;
    }
  }
  if (std::find(dead.begin(), dead.end(), char(1)) != dead.end()) {
    std::vector<int> keep;
    for (int v = 0; v < cur.n(); ++v)
      if (!dead[v]) keep.push_back(v);
    std::vector<int> nids;
    nids.reserve(keep.size());
    for (int v : keep) nids.push_back(ids[v]);
    ids = std::move(nids);
    cur = cur.induced(keep);
  }
  return {std::move(cur), std::move(ids), std::move(log)};
}

EdgeExtension edge_extension(const Graph& g, const ListAssignment& L) {
  if (L.n() != g.n()) throw Error(Err::ArityMismatch, "edge_extension: list count != graph order");
  const auto& es = g.edges();
  const int n = g.n();
  const int m = g.m();

  std::vector<std::pair<int, int>> add;
  add.reserve(2 * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    add.push_back({es[i].first, n + i});
    add.push_back({es[i].second, n + i});
  }
  std::vector<std::vector<int>> zadj(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int a = es[i].first, b = es[i].second;
      int c = es[j].first, d = es[j].second;
      if (a == c || a == d || b == c || b == d) continue;
      if (g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) ||
          g.has_edge(b, d)) {
        add.push_back({n + i, n + j});
        zadj[i].push_back(j);
        zadj[j].push_back(i);
      }
    }
  Graph gs = g.with_extra(m, add);

  ListAssignment ls;
  ls.m = L.m;
  ls.m.resize(static_cast<std::size_t>(n) + m, kFull);

  // Endpoint rules read the input lists, which never change: one pass.
  for (int i = 0; i < m; ++i) {
    auto [u, v] = es[i];
    if (L.size_at(u) == 1) ls.m[n + i] &= static_cast<std::uint8_t>(~L.m[u]);
    if (L.size_at(v) == 1) ls.m[n + i] &= static_cast<std::uint8_t>(~L.m[v]);
    if (L.m[u] == L.m[v] && L.size_at(u) == 2)
      ls.m[n + i] &= static_cast<std::uint8_t>(L.m[u] ^ kFull);
  }
  // Singleton pushes along added-vertex edges, to a fixpoint.
  std::vector<int> work;
  for (int i = 0; i < m; ++i)
    if (std::popcount(ls.m[n + i]) == 1) work.push_back(i);
  std::vector<char> done(m, 0);
  while (!work.empty()) {
    int i = work.back();
    work.pop_back();
    if (done[i]) continue;
    done[i] = 1;
    for (int j : zadj[i]) {
      if (!(ls.m[n + j] & ls.m[n + i])) continue;
      ls.m[n + j] &= static_cast<std::uint8_t>(~ls.m[n + i]);
      if (std::popcount(ls.m[n + j]) == 1) work.push_back(j);
    }
  }
  return {std::move(gs), std::move(ls)};
}

namespace {

struct LayerCtx {
  const Graph& g;
  std::vector<int> dist;
  std::vector<int> n1, n2, n3;
};

struct LayerClasses {
  std::vector<int> W, X, Y;        // N1 vertices with list {3}, {2}, {2,3}
  std::vector<int> Ws, Xs;         // N2: neighbours of W; of X (minus Ws)
  std::vector<int> T1, T2, S1, S2, R;  // N3; R may overlap the others
};

// Propagation plus the first-layer rules, to a fixpoint. False on an empty.
bool inner_rules(const LayerCtx& c, ListAssignment& L) {
  for (;;) {
    auto p = propagate(c.g, L);
    if (!p) return false;
    L = std::move(*p);
    bool changed = false;
    for (int w : c.n1) {
      if (L.m[w] != cbit(3)) continue;
      for (int x : c.g.adj(w)) {
        if (c.dist[x] != 2 || !(L.m[x] & cbit(1))) continue;
        L.m[x] &= static_cast<std::uint8_t>(~cbit(1));
        if (!L.m[x]) return false;
        changed = true;
      }
    }
    for (int x : c.n2)
      if (L.m[x] == kFull) {
        L.m[x] &= static_cast<std::uint8_t>(~cbit(1));
        changed = true;
      }
    if (!changed) return true;
  }
}

LayerClasses classify(const LayerCtx& c, const ListAssignment& L) {
  const int n = c.g.n();
  LayerClasses out;
  std::vector<char> inW(n, 0), inX(n, 0);
  for (int u : c.n1) {
    if (L.m[u] == cbit(3)) {
      out.W.push_back(u);
      inW[u] = 1;
    } else if (L.m[u] == cbit(2)) {
      out.X.push_back(u);
      inX[u] = 1;
    } else {
      out.Y.push_back(u);
    }
  }
  std::vector<char> inWs(n, 0), inXs(n, 0);
  for (int u : c.n2) {
    bool nw = std::any_of(c.g.adj(u).begin(), c.g.adj(u).end(),
                          [&](int w) { return inW[w]; });
    if (nw) {
      inWs[u] = 1;
      out.Ws.push_back(u);
    }
  }
  for (int u : c.n2) {
    if (inWs[u]) continue;
    bool nx = std::any_of(c.g.adj(u).begin(), c.g.adj(u).end(),
                          [&](int w) { return inX[w]; });
    if (nx) {
      inXs[u] = 1;
      out.Xs.push_back(u);
    }
  }

  // R: distance-3 vertices reaching W along an X*, X pair of hops.
  std::vector<char> xw(n, 0);
  for (int u : out.X)
    for (int w : c.g.adj(u))
      if (inW[w]) {
        xw[u] = 1;
        break;
      }
  std::vector<char> xsr(n, 0);
  for (int u : out.Xs)
    for (int w : c.g.adj(u))
      if (inX[w] && xw[w]) {
        xsr[u] = 1;
        break;
      }

  std::vector<char> inT1(n, 0), inT2(n, 0);
  for (int s : c.n3) {
    int cnt = 0;
    for (int w : c.g.adj(s)) cnt += inWs[w];
    if (cnt >= 2) {
      out.T1.push_back(s);
      inT1[s] = 1;
    } else if (cnt == 1) {
      out.T2.push_back(s);
      inT2[s] = 1;
    }
  }
  for (int s : c.n3) {
    bool isR = std::any_of(c.g.adj(s).begin(), c.g.adj(s).end(),
                           [&](int w) { return xsr[w] != 0; });
    if (isR) out.R.push_back(s);
    if (inT1[s] || inT2[s]) continue;
    bool t1n = std::any_of(c.g.adj(s).begin(), c.g.adj(s).end(),
                           [&](int w) { return inT1[w]; });
    if (t1n) {
      out.S1.push_back(s);
      continue;
    }
    int t2cnt = 0;
    for (int w : c.g.adj(s)) t2cnt += inT2[w];
    if (t2cnt >= 2) {
      out.S2.push_back(s);
      continue;
    }
    if (!isR)
      throw Error(Err::Internal, "branch_lists: unclassified distance-3 vertex");
  }
  return out;
}

// Strips a colour, reporting both "changed" and "emptied".
bool strip(ListAssignment& L, int v, int colour, bool& changed) {
  if (!(L.m[v] & cbit(colour))) return true;
  L.m[v] &= static_cast<std::uint8_t>(~cbit(colour));
  changed = true;
  return L.m[v] != 0;
}

std::optional<ListAssignment> joint_fixpoint(const LayerCtx& c, ListAssignment L) {
  for (;;) {
    if (!inner_rules(c, L)) return std::nullopt;
    auto cls = classify(c, L);
    bool changed = false;
    for (int s : cls.T1)
      if (!strip(L, s, 3, changed)) return std::nullopt;
    for (int s : cls.S2)
      if (!strip(L, s, 2, changed)) return std::nullopt;
    for (int s : cls.R)
      if (!strip(L, s, 2, changed)) return std::nullopt;
    if (!changed) return L;
  }
}

}  // namespace

std::vector<BranchedAssignment> branch_lists(const Graph& g) {
  if (!violating_structures(g).clean())
    throw Error(Err::PreconditionViolated, "branch_lists: structure gate failed");
  const int n = g.n();
  int centre = -1;
  for (int v = 0; v < n && centre < 0; ++v)
    if (g.deg(v) >= 5) centre = v;
  std::vector<BranchedAssignment> out;
  if (centre < 0) return out;

  LayerCtx ctx{g, bfs_dist(g, centre), {}, {}, {}};
  for (int v = 0; v < n; ++v) {
    if (ctx.dist[v] < 0)
      throw Error(Err::Disconnected, "branch_lists: disconnected input");
    if (ctx.dist[v] > 3)
      throw Error(Err::DiameterTooLarge, "branch_lists: diameter exceeds 3");
    if (ctx.dist[v] == 1) ctx.n1.push_back(v);
    if (ctx.dist[v] == 2) ctx.n2.push_back(v);
    if (ctx.dist[v] == 3) ctx.n3.push_back(v);
  }

  // Case 1: monochromatic neighbourhood. The second layer is forced to one
  // colour (the centre's colour on a second-layer vertex closes a
  // bichromatic path through two of its neighbours), the third excludes it.
  {
    ListAssignment L = ListAssignment::full(n);
    L.m[centre] = cbit(1);
    for (int u : ctx.n1) L.m[u] = cbit(3);
    for (int u : ctx.n2) L.m[u] = cbit(2);
    for (int u : ctx.n3) L.m[u] = static_cast<std::uint8_t>(cbit(1) | cbit(3));
    out.push_back({std::move(L), BranchCase::Case1, {}});
  }

  // Case 2: mixed neighbourhood. Four seed neighbours carry a fixed pattern
  // with threes in the majority; a fourth three (or a first two) is branched
  // over the remaining neighbours when the pattern lacks one.
  std::vector<int> seeds(ctx.n1.begin(), ctx.n1.begin() + 4);
  std::vector<int> rest(ctx.n1.begin() + 4, ctx.n1.end());
  for (int pat = 0; pat < 16; ++pat) {
    std::array<int, 4> pc;
    int threes = 0;
    for (int i = 0; i < 4; ++i) {
      pc[i] = ((pat >> (3 - i)) & 1) ? 3 : 2;
      threes += (pc[i] == 3);
    }
    if (threes < 2) continue;

    struct Option {
      std::optional<int> extra;
      int extra_colour = 0;
    };
    std::vector<Option> opts;
    if (threes == 4)
      for (int e : rest) opts.push_back({e, 2});
    else if (threes == 3)
      opts.push_back({});
    else
      for (int e : rest) opts.push_back({e, 3});

    for (const auto& opt : opts) {
      ListAssignment L = ListAssignment::full(n);
      L.m[centre] = cbit(1);
      for (int u : ctx.n1) L.m[u] = static_cast<std::uint8_t>(cbit(2) | cbit(3));
      for (int i = 0; i < 4; ++i) L.m[seeds[i]] = cbit(pc[i]);
      if (opt.extra) L.m[*opt.extra] = cbit(opt.extra_colour);

      // Two colour-3 neighbours may not be adjacent.
      std::vector<int> w0;
      for (int u : ctx.n1)
        if (L.m[u] == cbit(3)) w0.push_back(u);
      bool indep = true;
      for (std::size_t i = 0; i < w0.size() && indep; ++i)
        for (std::size_t j = i + 1; j < w0.size(); ++j)
          if (g.has_edge(w0[i], w0[j])) {
            indep = false;
            break;
          }
      if (!indep) continue;

      auto fixed = joint_fixpoint(ctx, std::move(L));
      if (!fixed) continue;
      auto cls = classify(ctx, *fixed);

      std::vector<int> sd = seeds;
      if (opt.extra) sd.push_back(*opt.extra);

      if (cls.X.size() == 1) {
        ListAssignment La = *fixed;
        bool ok = true;
        for (int y : cls.Y) {
          La.m[y] &= cbit(3);
          if (!La.m[y]) {
            ok = false;
            break;
          }
        }
        if (ok) {
          if (auto pa = propagate(g, La))
            out.push_back({std::move(*pa), BranchCase::Case2a, sd});
        }
      }
      {
        ListAssignment Lb = *fixed;
        bool ok = true;
        bool dummy = false;
        for (int u : cls.Xs)
          if (!strip(Lb, u, 1, dummy)) {
            ok = false;
            break;
          }
        if (ok) {
          auto pb = propagate(g, Lb);
          if (!pb)
            ok = false;
          else
            Lb = std::move(*pb);
        }
        if (ok)
          for (int s : cls.S2)
            if (!strip(Lb, s, 3, dummy)) {
              ok = false;
              break;
            }
        if (ok) {
          if (auto pb = propagate(g, Lb))
            out.push_back({std::move(*pb), BranchCase::Case2b, sd});
        }
      }
    }
  }
  return out;
}

namespace {

VertexColouring lift_back(const Graph& g, const Reduced& r, const VertexColouring& rc) {
  const int n = g.n();
  std::vector<char> alive(n, 0);
  std::vector<int> col(n, 0);
  for (std::size_t i = 0; i < r.kept.size(); ++i) {
    alive[r.kept[i]] = 1;
    col[r.kept[i]] = rc.colors[i];
  }
  for (auto it = r.log.rbegin(); it != r.log.rend(); ++it) {
    const int t = it->vertex;
    const auto [a, b] = it->anchors;
    if (it->rule == ReductionRule::CommonNeighbourDrop) {
      std::vector<int> com;
      for (int w : common_neighbours(g, a, b))
        if (alive[w]) com.push_back(w);
      // The drop fired at three commons, so at least two are alive here.
      if (com.size() < 2)
        throw Error(Err::Internal, "lift: shrunken common neighbourhood");
      bool same = std::all_of(com.begin(), com.end(),
                              [&](int w) { return col[w] == col[com.front()]; });
      if (same) {
        col[t] = col[com.front()];
      } else {
        // Mixed commons force the whole live graph to be the pair plus its
        // commons (a complete bipartite K_{2,j}); recolour it outright.
        if (g.has_edge(a, b))
          throw Error(Err::Internal, "lift: mixed commons beside an adjacent pair");
        int live = static_cast<int>(std::count(alive.begin(), alive.end(), char(1)));
        if (live != static_cast<int>(com.size()) + 2)
          throw Error(Err::Internal, "lift: mixed commons in a non-bipartite remainder");
        col[a] = 1;
        col[b] = 2;
        for (int w : com) col[w] = 3;
        col[t] = 3;
      }
    } else {
      if (col[a] != col[b])
        throw Error(Err::Internal, "lift: twin pair split across colours");
      col[t] = col[a];
    }
    alive[t] = 1;
  }
  return {3, std::move(col)};
}

}  // namespace

std::optional<VertexColouring> decide_star3_d3(const Graph& g) {
  if (!is_connected(g))
    throw Error(Err::Disconnected, "decide_star3_d3: disconnected input");
  auto diam = diameter(g);
  if (*diam > 3)
    throw Error(Err::DiameterTooLarge, "decide_star3_d3: diameter exceeds 3");
  if (!violating_structures(g).clean()) return std::nullopt;

  Reduced r = reduce(g);
  int maxdeg = 0;
  for (int v = 0; v < r.graph.n(); ++v) maxdeg = std::max(maxdeg, r.graph.deg(v));

  std::optional<VertexColouring> reduced_col;
  if (maxdeg <= 4) {
    // Diameter <= 3 at degree <= 4 caps the order at 1 + 4 + 12 + 36 = 53.
    OracleBudget b;
    b.max_vertices = std::max(r.graph.n(), 53);
    reduced_col = exact_colouring(r.graph, 3, ColouringKind::Star, b);
  } else {
    for (auto& br : branch_lists(r.graph)) {
      auto ext = edge_extension(r.graph, br.lists);
      bool emptied = false;
      for (std::size_t v = 0; v < ext.lists.m.size() && !emptied; ++v)
        emptied = ext.lists.m[v] == 0;
      if (emptied) continue;
      auto pc = solve_2list(ext.gs, ext.lists);
      if (!pc) continue;
      VertexColouring rc{3, std::vector<int>(pc->colors.begin(),
                                             pc->colors.begin() + r.graph.n())};
      if (check_colouring(r.graph, rc, ColouringKind::Star))
        throw Error(Err::Internal, "decide_star3_d3: restriction is not a star colouring");
      reduced_col = std::move(rc);
      break;
    }
  }
  if (!reduced_col) return std::nullopt;

  VertexColouring full = lift_back(g, r, *reduced_col);
  if (check_colouring(g, full, ColouringKind::Star))
    throw Error(Err::Internal, "decide_star3_d3: lifted colouring failed verification");
  return full;
}

}  // namespace chromadia
