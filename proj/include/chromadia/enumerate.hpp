#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "chromadia/graph.hpp"

namespace chromadia {

// Every labelled graph on n vertices (all edge subsets), mask order:
// bit t covers the t-th pair in (0,1),(0,2),...,(0,n-1),(1,2),... order.
void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& fn);

// Lexicographically smallest upper-triangle bit string over all vertex
// orders, packed column-wise; the isomorphism-class key. n <= 11.
std::uint64_t canonical_key(const Graph& g);

// All graphs on n vertices up to isomorphism (ascending canonical key).
// Built by extending the (n-1)-vertex list one vertex at a time.
std::vector<Graph> all_graphs_upto_iso(int n);
std::vector<Graph> connected_graphs_upto_iso(int n);

// Deterministic RNG with byte-stable helpers (standard distributions are
// not reproducible across library implementations).
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t word() { return eng(); }
  bool coin() { return word() & 1; }
  // Uniform in [0, bound): masked rejection.
  int below(int bound);
  // Uniform permutation of 0..n-1.
  std::vector<int> permutation(int n);
};

enum class DiamMode { Exact, AtMost };

struct GenOptions {
  int n = 0;
  int diam = 0;
  DiamMode mode = DiamMode::Exact;
  std::optional<int> max_degree = std::nullopt;
  int retries = 5000;
};

// Rejection sampling: edges by fair coin (degree-capped greedy order when
// max_degree is set), accepted when connected with the demanded diameter.
// nullopt when the retry budget runs out or the constraints are impossible.
std::optional<Graph> random_connected_graph(Rng& rng, const GenOptions& opts);

// Planted yes-instance for the acyclic decider's pair-enumeration path:
// k+4 vertices, m = 2n-3, diameter 2, no single-vertex deletion leaves a
// forest, no induced 2P2, yet acyclically 3-colourable. Vertex names are
// scrambled by a random permutation. k >= 3.
Graph planted_acyclic_yes(int k, Rng& rng);

}  // namespace chromadia
