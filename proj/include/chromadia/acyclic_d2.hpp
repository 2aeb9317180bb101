#pragma once

#include <optional>
#include <vector>

#include "chromadia/graph.hpp"
#include "chromadia/verify.hpp"

namespace chromadia {

// Which stage of the diameter-2 decision procedure settled the instance.
enum class AcyclicTrace {
  EdgeBound,             // refused: m > 2n-3
  SmallGraph,            // exhaustive search below the size cutoff
  VertexDeletionForest,  // some single vertex deletion leaves a forest
  PairEnumeration,       // colour-3 class search over disjoint edge pairs
};

const char* acyclic_trace_name(AcyclicTrace t);

struct AcyclicOptions {
  // Instances up to this order go straight to exhaustive search.
  int small_cutoff = 24;
};

struct AcyclicDecision {
  // Engaged exactly when the graph is acyclically 3-colourable.
  std::optional<VertexColouring> colouring;
  AcyclicTrace trace;
};

// The proper 2-colourings of a forest with at most two components, colours
// {1,2}, the smallest vertex of the first component pinned to 1. One
// component yields a single colouring (the global swap adds nothing); two
// components yield two, the second component's swap listed after the
// unswapped form. Throws NotAForest / TooManyComponents.
std::vector<VertexColouring> forest_two_colourings(const Graph& g);

// Decides acyclic 3-colourability for connected graphs of diameter <= 2.
// Stages, in order: the edge-count refusal m > 2n-3 (n >= 2; every pair of
// colour classes induces a forest, so m is at most the sum of three forest
// bounds), exhaustive search for small orders, a single vertex whose removal
// leaves a forest (colour it 1, parity-colour the forest with {2,3}), and
// otherwise a search for the colour-3 class among sets of the form
// N(e1) ∩ N(e2) minus at most one vertex, over disjoint edge pairs e1, e2
// (induced pairs first). Throws Disconnected / DiameterTooLarge.
AcyclicDecision decide_acyclic3_d2(const Graph& g, const AcyclicOptions& opt = {});

}  // namespace chromadia
