#include "chromadia/list2.hpp"

#include <algorithm>
#include <bit>

namespace chromadia {

ListAssignment ListAssignment::from_lists(const std::vector<std::vector<int>>& lists) {
  ListAssignment L;
  L.m.reserve(lists.size());
  for (const auto& lst : lists) {
    std::uint8_t mask = 0;
    for (int c : lst) {
      if (c < 1 || c > 3) throw Error(Err::ParseError, "list colour outside {1,2,3}");
      mask |= std::uint8_t(1) << (c - 1);
    }
    L.m.push_back(mask);
  }
  return L;
}

std::vector<std::vector<int>> ListAssignment::to_lists() const {
  std::vector<std::vector<int>> out(m.size());
  for (size_t v = 0; v < m.size(); ++v)
    for (int c = 1; c <= 3; ++c)
      if ((m[v] >> (c - 1)) & 1) out[v].push_back(c);
  return out;
}

int ListAssignment::size_at(int v) const { return std::popcount(m[v]); }

int ListAssignment::sole(int v) const {
  return std::popcount(m[v]) == 1 ? std::countr_zero(m[v]) + 1 : 0;
}

std::optional<ListAssignment> propagate(const Graph& g, const ListAssignment& L) {
  if (L.n() != g.n()) throw Error(Err::ArityMismatch, "list count != graph order");
  ListAssignment out = L;
  std::vector<int> work;
  for (int v = 0; v < g.n(); ++v) {
    if (!out.m[v]) return std::nullopt;
    if (out.size_at(v) == 1) work.push_back(v);
  }
  // done[v]: v's singleton has been pushed to its neighbours already.
  std::vector<char> done(g.n(), 0);
  while (!work.empty()) {
    int v = work.back();
    work.pop_back();
    if (done[v]) continue;
    done[v] = 1;
    std::uint8_t bit = out.m[v];
    for (int w : g.adj(v)) {
      if (!(out.m[w] & bit)) continue;
      out.m[w] &= ~bit;
      if (!out.m[w]) return std::nullopt;
      if (out.size_at(w) == 1) work.push_back(w);
    }
  }
  return out;
}

std::optional<VertexColouring> solve_2list(const Graph& g, const ListAssignment& L) {
  if (L.n() != g.n()) throw Error(Err::ArityMismatch, "list count != graph order");
  int n = g.n();
  std::vector<int> lo(n), hi(n);
  for (int v = 0; v < n; ++v) {
    int sz = L.size_at(v);
    if (sz == 0) throw Error(Err::EmptyList, "empty list at vertex " + std::to_string(v));
    if (sz == 3) throw Error(Err::ListTooLarge, "size-3 list at vertex " + std::to_string(v));
    lo[v] = std::countr_zero(L.m[v]) + 1;
    hi[v] = lo[v];
    for (int c = lo[v] + 1; c <= 3; ++c)
      if (L.has(v, c)) hi[v] = c;
  }

  // Literal 2v = "v takes lo[v]", literal 2v+1 = "v takes hi[v]". For
  // singletons both name the same choice and the edge (2v+1)->(2v) forces it.
  int nl = 2 * n;
  std::vector<std::vector<int>> imp(nl);
  auto lit_eq = [&](int v, int c) { return 2 * v + (c == hi[v] && lo[v] != hi[v] ? 1 : 0); };
  auto neg = [](int l) { return l ^ 1; };
  auto add_impl = [&](int a, int b) {
    imp[a].push_back(b);
    imp[neg(b)].push_back(neg(a));
  };
  for (int v = 0; v < n; ++v)
    if (lo[v] == hi[v]) imp[2 * v + 1].push_back(2 * v);
  for (auto [u, v] : g.edges())
    for (int c = 1; c <= 3; ++c)
      if (L.has(u, c) && L.has(v, c)) add_impl(lit_eq(u, c), neg(lit_eq(v, c)));

  // Tarjan SCC, iterative, deterministic.
  std::vector<int> comp(nl, -1), low(nl), num(nl, -1), stk;
  int counter = 0, ncomp = 0;
  std::vector<char> onstk(nl, 0);
  for (int root = 0; root < nl; ++root) {
    if (num[root] != -1) continue;
    std::vector<std::pair<int, size_t>> call{{root, 0}};
    while (!call.empty()) {
      auto& [u, it] = call.back();
      if (it == 0) {
        num[u] = low[u] = counter++;
        stk.push_back(u);
        onstk[u] = 1;
      }
      bool descended = false;
      while (it < imp[u].size()) {
        int w = imp[u][it++];
        if (num[w] == -1) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (onstk[w]) low[u] = std::min(low[u], num[w]);
      }
      if (descended) continue;
      if (low[u] == num[u]) {
        while (true) {
          int w = stk.back();
          stk.pop_back();
          onstk[w] = 0;
          comp[w] = ncomp;
          if (w == u) break;
        }
        ++ncomp;
      }
      int done_u = u;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done_u]);
    }
  }
  for (int v = 0; v < n; ++v)
    if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;

  // Condensation reachability, for spotting literals that imply their own
  // negation (those are forced before any tie-breaking).
  int words = (ncomp + 63) / 64;
  std::vector<std::uint64_t> reach(static_cast<size_t>(ncomp) * words, 0);
  auto rbit = [&](int a, int b) -> bool {
    return (reach[static_cast<size_t>(a) * words + b / 64] >> (b % 64)) & 1;
  };
  for (int c = 0; c < ncomp; ++c)
    reach[static_cast<size_t>(c) * words + c / 64] |= std::uint64_t(1) << (c % 64);
  // Tarjan numbers components in reverse topological order: every cross edge
  // runs from a higher-numbered component to a lower one, so one ascending
  // pass closes reachability exactly.
  std::vector<std::vector<int>> cedges(ncomp);
  for (int l = 0; l < nl; ++l)
    for (int w : imp[l])
      if (comp[l] != comp[w]) cedges[comp[l]].push_back(comp[w]);
  for (int a = 0; a < ncomp; ++a)
    for (int b : cedges[a])
      for (int t = 0; t < words; ++t)
        reach[static_cast<size_t>(a) * words + t] |=
            reach[static_cast<size_t>(b) * words + t];

  std::vector<int> val(nl, -1);
  auto set_true = [&](int l) {
    std::vector<int> stack{l};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (val[x] == 1) continue;
      if (val[x] == 0) throw Error(Err::Internal, "2-SAT closure contradiction");
      val[x] = 1;
      val[neg(x)] = 0;
      for (int w : imp[x]) stack.push_back(w);
    }
  };
  // Forced literals first (x ->* !x makes x false in every solution).
  for (int v = 0; v < n; ++v) {
    if (val[2 * v] != -1) continue;
    bool f0 = rbit(comp[2 * v], comp[2 * v + 1]);
    bool f1 = rbit(comp[2 * v + 1], comp[2 * v]);
    if (f0 && f1) throw Error(Err::Internal, "2-SAT: both polarities forced");
    if (f0) set_true(2 * v + 1);
    else if (f1) set_true(2 * v);
  }
  // Tie-break: ascending vertices; the first unset vertex is the smallest in
  // its component pair and takes its smaller colour.
  for (int v = 0; v < n; ++v)
    if (val[2 * v] == -1) set_true(2 * v);

  VertexColouring c{3, std::vector<int>(n)};
  for (int v = 0; v < n; ++v) c.colors[v] = val[2 * v] == 1 ? lo[v] : hi[v];
  if (check_colouring(g, c, ColouringKind::Proper))
    throw Error(Err::Internal, "2-list colouring failed the proper check");
  for (int v = 0; v < n; ++v)
    if (!L.has(v, c.colors[v]))
      throw Error(Err::Internal, "2-list colouring left a vertex off its list");
  return c;
}

}  // namespace chromadia
