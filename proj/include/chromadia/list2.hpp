#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chromadia/graph.hpp"
#include "chromadia/verify.hpp"

namespace chromadia {

// Per-vertex colour sets within {1,2,3}, stored as 3-bit masks
// (bit c-1 = colour c allowed). A 2-list assignment has all sizes <= 2.
struct ListAssignment {
  std::vector<std::uint8_t> m;

  static ListAssignment full(int n) { return {std::vector<std::uint8_t>(n, 7)}; }
  static ListAssignment from_lists(const std::vector<std::vector<int>>& lists);
  std::vector<std::vector<int>> to_lists() const;

  int n() const { return static_cast<int>(m.size()); }
  bool has(int v, int c) const { return (m[v] >> (c - 1)) & 1; }
  int size_at(int v) const;
  // Sole colour of a singleton list; 0 otherwise.
  int sole(int v) const;

  bool operator==(const ListAssignment&) const = default;
};

// Fixpoint of: a singleton list deletes its colour from every neighbour's
// list. nullopt (infeasible) iff some list empties, including on input.
// The fixpoint is unique, so no order is observable.
std::optional<ListAssignment> propagate(const Graph& g, const ListAssignment& L);

// Proper colouring of g with every vertex on its list, all lists of size
// 1 or 2, via the 2-SAT implication-closure technique. None iff no such
// colouring exists. Deterministic: unforced components are resolved in
// ascending order of their smallest vertex, which takes its smaller colour.
// Throws ListTooLarge on a size-3 list, EmptyList on a size-0 list.
std::optional<VertexColouring> solve_2list(const Graph& g, const ListAssignment& L);

}  // namespace chromadia
