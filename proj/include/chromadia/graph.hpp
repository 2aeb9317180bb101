#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chromadia {

enum class Err {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  EmptyGraph,
  SameVertex,
  Disconnected,
  DiameterTooLarge,
  DiameterNot2,
  ArityMismatch,
  NotAPartition,
  BudgetExceeded,
  EmptyList,
  ListTooLarge,
  NotAForest,
  TooManyComponents,
  PreconditionViolated,
  NotBipartite,
  NoDegree2Vertex,
  WitnessInvalid,
  ParseError,
  Internal,
};

// Single exception type for the whole library; `kind` is the stable,
// machine-checkable identity, `what()` carries context for humans.
class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

const char* err_name(Err e);

// Simple undirected graph on vertices 0..n-1. Immutable after construction:
// adjacency lists are sorted ascending, the edge list is canonical (u < v,
// sorted lexicographically). No self-loops, no parallel edges.
class Graph {
 public:
  Graph() = default;
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& adj(int v) const { return adj_[v]; }
  int deg(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;

  // Adjacency rows as bitmasks, available only while n <= 64 (used by the
  // exhaustive search paths; empty otherwise).
  const std::vector<std::uint64_t>& masks() const { return mask_; }

  // Induced subgraph on `keep` (sorted ascending, distinct, in range).
  // New vertex i corresponds to keep[i].
  Graph induced(const std::vector<int>& keep) const;

  // Adds fresh isolated vertices / edges; builders for the gadget module.
  Graph with_extra(int extra_vertices,
                   std::span<const std::pair<int, int>> extra_edges) const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> mask_;
};

// Distances from src by BFS; -1 for unreachable vertices.
std::vector<int> bfs_dist(const Graph& g, int src);

bool is_connected(const Graph& g);

// Largest pairwise distance. nullopt encodes an infinite diameter
// (disconnected input). Throws EmptyGraph when n = 0.
std::optional<int> diameter(const Graph& g);

// Common neighbours of the distinct pair u, v; sorted ascending.
// Throws SameVertex when u == v.
std::vector<int> common_neighbours(const Graph& g, int u, int v);

bool is_forest(const Graph& g);
int component_count(const Graph& g);

// Partition of the degree-2 vertices into false-twin classes: two degree-2
// vertices share a class iff their neighbourhoods are identical (which forces
// them non-adjacent). Classes sorted internally and by smallest member.
std::vector<std::vector<int>> degree2_false_twin_classes(const Graph& g);

// Two vertex-disjoint edges (u1,v1), (u2,v2) with no edge between the pairs.
// Stored with u1 < v1, u2 < v2 and (u1,v1) < (u2,v2) lexicographically.
struct InducedTwoP2 {
  int u1, v1, u2, v2;
  bool operator==(const InducedTwoP2&) const = default;
};

// All induced 2P2 subgraphs, in lexicographic order of the edge pair.
std::vector<InducedTwoP2> enumerate_induced_2p2(const Graph& g);

// Structures that block star 3-colourability at diameter <= 3.
// A 4-cycle (not necessarily induced) v0 v1 v2 v3 is bad unless at least one
// opposite pair consists of two degree-2 vertices. Every 5-cycle (not
// necessarily induced) violates. Canonical forms: smallest vertex first;
// 4-cycles with second < fourth, 5-cycles with second < fifth.
struct StructureReport {
  std::vector<std::array<int, 4>> bad4cycles;
  std::vector<std::array<int, 5>> fivecycles;
  bool clean() const { return bad4cycles.empty() && fivecycles.empty(); }
};

StructureReport violating_structures(const Graph& g);

}  // namespace chromadia
