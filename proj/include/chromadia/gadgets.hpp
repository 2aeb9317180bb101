#pragma once

#include <string>
#include <vector>

#include "chromadia/graph.hpp"
#include "chromadia/verify.hpp"

namespace chromadia {

// A constructed graph with per-vertex provenance and a report of the
// preconditions and self-checks that were evaluated. Unconditional structural
// guarantees are asserted (Internal on failure); conditional ones are
// asserted when their hypothesis holds and otherwise reported as skipped.
struct GadgetOutput {
  Graph graph;
  std::vector<std::string> roles;
  std::vector<std::string> notes;
};

// Joins a t-clique to the whole graph: t new vertices ("apex"), pairwise
// adjacent and adjacent to every input vertex. The result has diameter <= 2.
GadgetOutput dominating_clique(const Graph& g, int t);

// Subdivides every edge ("sub"), adds one hub ("apex"), two degree-2
// attachments per input vertex v (adjacent to v and the hub) and three per
// subdivision vertex. The result is triangle-free, 2-degenerate, has
// diameter <= 4, and is acyclically 3-colourable exactly when the input
// splits into an independent set and a forest.
GadgetOutput nearbip_to_acyclic3(const Graph& g);

// Replaces every edge uv by three common neighbours of u and v (roles
// "x_u_v"); the edge itself is dropped. The result is star 3-colourable
// exactly when the input is properly 3-colourable, and diameter <= 3 inputs
// give diameter <= 8 outputs.
GadgetOutput col3_to_star3(const Graph& g);

// Replaces vertex v by a 4-cycle on ids 4v..4v+3 (roles "v0".."v3") and
// every edge uv, u < v, by the two edges u0-v3 and u3-v0. The result is
// bipartite, keeps Hamiltonicity in both directions, and has maximum degree
// at most 5 when the input is subcubic.
GadgetOutput hc_expand_4cycles(const Graph& g);

// Duplicates the smallest degree-2 vertex ("split") as a non-adjacent twin
// ("twin") with the same neighbourhood and hangs one pendant off each. The
// result has a Hamiltonian path exactly when the input has a Hamiltonian
// cycle. Throws NoDegree2Vertex when no vertex has degree 2.
GadgetOutput hc_to_hp(const Graph& g);

// Adds an edge between every same-class pair at distance greater than 2 in a
// bipartite graph with the given two-part partition. Original edges lie in
// no triangle of the result. When every non-adjacent cross pair has a
// neighbour far from the other end, the result has diameter <= 2; when every
// completed pair has a same-class vertex far from both ends, every added
// edge lies in a triangle. Both conditions are evaluated and reported.
GadgetOutput complete_same_class_pairs(const Graph& g,
                                       const std::vector<std::vector<int>>& parts);

// Witness converters behind the diameter-2 equivalence between
// L(1,2)-n-labellings and Hamiltonian paths whose edges avoid triangles.
// Both validate their input witness (WitnessInvalid) and require diameter
// exactly 2 (DiameterNot2).

// Sorts the vertices by label; the order is a Hamiltonian path whose
// consecutive vertices are adjacent and share no neighbour.
std::vector<int> labelling_to_path(const Graph& g, const Labelling& lab);

// Labels the i-th path vertex i+1; the result is an L(1,2)-n-labelling.
Labelling path_to_labelling(const Graph& g, const std::vector<int>& path);

}  // namespace chromadia
