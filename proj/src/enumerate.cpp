#include "chromadia/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace chromadia {

void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 0) throw Error(Err::VertexOutOfRange, "negative vertex count");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  if (pairs.size() > 30) throw Error(Err::BudgetExceeded, "labelled sweep too large");
  std::uint64_t total = std::uint64_t(1) << pairs.size();
  std::vector<std::pair<int, int>> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (size_t t = 0; t < pairs.size(); ++t)
      if ((mask >> t) & 1) edges.push_back(pairs[t]);
    fn(Graph::from_edge_list(n, edges));
  }
}

namespace {

// Branch-and-bound over vertex placements: placing position t fixes the
// upper-triangle column t, compared against the best full key so far.
struct CanonSearch {
  int n;
  const Graph& g;
  std::vector<int> place;       // position -> original vertex
  std::vector<char> taken;
  std::uint64_t best = ~std::uint64_t(0);
  std::uint64_t prefix = 0;     // columns fixed so far, packed high-first
  int bits_done = 0;

  explicit CanonSearch(const Graph& gg) : n(gg.n()), g(gg), taken(gg.n(), 0) {}

  void run(int pos) {
    if (pos == n) {
      best = std::min(best, prefix);
      return;
    }
    int colbits = pos;  // column `pos` holds bits (i, pos) for i < pos
    // Candidates ordered by the column value they produce, then by index.
    std::vector<std::pair<std::uint64_t, int>> cands;
    for (int v = 0; v < n; ++v) {
      if (taken[v]) continue;
      std::uint64_t col = 0;
      for (int i = 0; i < pos; ++i)
        col = (col << 1) | (g.has_edge(place[i], v) ? 1 : 0);
      cands.emplace_back(col, v);
    }
    std::sort(cands.begin(), cands.end());
    for (auto [col, v] : cands) {
      std::uint64_t cand_prefix = (prefix << colbits) | col;
      int cand_bits = bits_done + colbits;
      // Compare against best aligned at the same length.
      int total_bits = n * (n - 1) / 2;
      if (best != ~std::uint64_t(0) &&
          cand_prefix > (best >> (total_bits - cand_bits)))
        break;  // sorted by column, every later candidate is no better
      place.push_back(v);
      taken[v] = 1;
      std::uint64_t save_prefix = prefix;
      int save_bits = bits_done;
      prefix = cand_prefix;
      bits_done = cand_bits;
      run(pos + 1);
      prefix = save_prefix;
      bits_done = save_bits;
      taken[v] = 0;
      place.pop_back();
    }
  }
};

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
  // 11*10/2 = 55 triangle bits; n=12 would overflow the packed key.
  if (g.n() > 11) throw Error(Err::BudgetExceeded, "canonical_key beyond n=11");
  if (g.n() <= 1) return 0;
  CanonSearch s(g);
  s.place.reserve(g.n());
  s.run(0);
  return s.best;
}

std::vector<Graph> all_graphs_upto_iso(int n) {
  if (n < 1 || n > 11) throw Error(Err::BudgetExceeded, "iso enumeration range is 1..11");
  std::vector<Graph> cur{Graph::from_edge_list(1, {})};
  for (int t = 1; t < n; ++t) {
    std::map<std::uint64_t, Graph> next;
    for (const auto& g : cur) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << t); ++mask) {
        std::vector<std::pair<int, int>> extra;
        for (int v = 0; v < t; ++v)
          if ((mask >> v) & 1) extra.emplace_back(v, t);
        Graph h = g.with_extra(1, extra);
        std::uint64_t key = canonical_key(h);
        next.try_emplace(key, std::move(h));
      }
    }
    cur.clear();
    for (auto& [key, g] : next) cur.push_back(std::move(g));
  }
  return cur;
}

std::vector<Graph> connected_graphs_upto_iso(int n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs_upto_iso(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

int Rng::below(int bound) {
  if (bound <= 0) throw Error(Err::Internal, "Rng::below with empty range");
  std::uint64_t b = static_cast<std::uint64_t>(bound);
  std::uint64_t mask = std::bit_ceil(b) - 1;
  while (true) {
    std::uint64_t x = word() & mask;
    if (x < b) return static_cast<int>(x);
  }
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[below(i + 1)]);
  return p;
}

std::optional<Graph> random_connected_graph(Rng& rng, const GenOptions& opts) {
  int n = opts.n;
  if (n < 1) return std::nullopt;
  // Impossible shapes, settled without sampling.
  if (opts.diam > n - 1) return std::nullopt;
  if (n == 1 && opts.mode == DiamMode::Exact && opts.diam != 0) return std::nullopt;
  if (n > 1 && opts.mode == DiamMode::Exact && opts.diam == 0) return std::nullopt;
  if (opts.max_degree && *opts.max_degree < 1 && n > 1) return std::nullopt;

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  for (int attempt = 0; attempt < opts.retries; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    if (opts.max_degree) {
      std::vector<int> deg(n, 0);
      auto order = rng.permutation(static_cast<int>(pairs.size()));
      for (int idx : order) {
        auto [u, v] = pairs[idx];
        if (deg[u] >= *opts.max_degree || deg[v] >= *opts.max_degree) continue;
        if (!rng.coin()) continue;
        edges.push_back(pairs[idx]);
        ++deg[u];
        ++deg[v];
      }
    } else {
      for (auto& p : pairs)
        if (rng.coin()) edges.push_back(p);
    }
    Graph g = Graph::from_edge_list(n, edges);
    if (!is_connected(g)) continue;
    int d = *diameter(g);
    bool ok = opts.mode == DiamMode::Exact ? d == opts.diam : d <= opts.diam;
    if (ok) return g;
  }
  return std::nullopt;
}

Graph planted_acyclic_yes(int k, Rng& rng) {
  if (k < 3) throw Error(Err::PreconditionViolated, "planted family needs k >= 3");
  int n = k + 4;
  auto p = rng.permutation(n);
  int a = p[0], b = p[1], c = p[2], d = p[3];
  int r = rng.below(k);
  std::vector<std::pair<int, int>> edges{{a, c}, {a, d}, {b, c}};
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(a, p[4 + i]);
    edges.emplace_back(c, p[4 + i]);
  }
  edges.emplace_back(b, p[4 + r]);
  edges.emplace_back(d, p[4 + r]);
  return Graph::from_edge_list(n, edges);
}

}  // namespace chromadia
