#pragma once

#include <optional>
#include <vector>

#include "chromadia/graph.hpp"
#include "chromadia/verify.hpp"

namespace chromadia {

// Exhaustive-search budgets. max_vertices gates up front; max_nodes, when
// set, caps search-tree nodes. Exceeding either throws BudgetExceeded.
struct OracleBudget {
  int max_vertices = 12;
  std::optional<long long> max_nodes = std::nullopt;
};

inline OracleBudget hamiltonian_budget() { return {16, std::nullopt}; }

// Ground-truth searches. All are deterministic: vertices are branched in BFS
// order from vertex 0 (restarting at the smallest unreached vertex), values
// ascending, so the first witness found is the lexicographically smallest
// under that order. Results are internally re-verified before return.

// Proper/acyclic/star/injective k-colouring; colour of the first branched
// vertex is pinned to 1 (colour classes are permutable).
std::optional<VertexColouring> exact_colouring(const Graph& g, int k,
                                               ColouringKind kind,
                                               OracleBudget b = {});

// Star 3-colouring where every vertex is confined to its list (subset of
// {1,2,3}). No symmetry breaking; lists pin the roles. Throws EmptyList on an
// empty input list.
std::optional<VertexColouring> exact_list_star3(
    const Graph& g, const std::vector<std::vector<int>>& lists,
    OracleBudget b = {});

// L(a1,a2)-k-labelling, path-existence semantics (both constraints apply on a
// triangle edge). Labels are not permutable, so no symmetry breaking. Prunes
// with the order bound n <= 1 + k + ... + k^diam and the degree bound
// deg <= k before searching; both give certain refusals past the budget.
std::optional<Labelling> exact_lab(const Graph& g, int a1, int a2, int k,
                                   OracleBudget b = {});

// Partition into independent I and forest-inducing F, by enumerating I as
// bitmasks ascending from {0}. (For n >= 1 a valid partition with empty I
// implies the graph is a forest, and then any single vertex also works, so
// starting at nonempty masks loses nothing.)
std::optional<IFPartition> exact_near_bipartite(const Graph& g,
                                                OracleBudget b = {});

enum class HamMode { Cycle, Path, PathNoTriangleEdge };

// Hamiltonian cycle/path by backtracking with connectivity pruning. Cycle
// witnesses start at vertex 0; path witnesses try start vertices ascending.
// In PathNoTriangleEdge mode consecutive path vertices must have no common
// neighbour. Degenerate orders: n=1 is a trivial yes in every mode; for n=2
// with an edge, Cycle accepts (0,1) (consecutive vertices adjacent, closing
// edge included).
std::optional<std::vector<int>> exact_hamiltonian(
    const Graph& g, HamMode mode, OracleBudget b = hamiltonian_budget());

}  // namespace chromadia
