#pragma once

#include <array>
#include <optional>
#include <vector>

#include "chromadia/graph.hpp"
#include "chromadia/list2.hpp"
#include "chromadia/verify.hpp"

namespace chromadia {

enum class ReductionRule {
  // A vertex pair with three or more common neighbours, all of degree
  // exactly two, loses its smallest common neighbour. The degree guard keeps
  // the rule star-preserving on arbitrary inputs; on graphs that pass
  // violating_structures it coincides with dropping any third common
  // neighbour.
  CommonNeighbourDrop,
  // A class of three or more degree-2 vertices with identical neighbourhoods
  // keeps its two smallest members.
  FalseTwinDedup,
};

const char* reduction_rule_name(ReductionRule r);

struct Removal {
  int vertex;                  // original vertex id
  ReductionRule rule;
  // CommonNeighbourDrop: the pair whose common neighbourhood shrank.
  // FalseTwinDedup: the two kept twins. Original ids, ascending.
  std::array<int, 2> anchors;
};

struct Reduced {
  Graph graph;
  std::vector<int> kept;       // kept[new id] = original id, ascending
  std::vector<Removal> log;    // in removal order
};

// Applies CommonNeighbourDrop to exhaustion (pairs scanned lexicographically,
// rescanning from the start after each removal), then FalseTwinDedup once
// per class. Star 3-colourability and pairwise distances are preserved for
// inputs that pass the structure gate.
Reduced reduce(const Graph& g);

// The graph g plus one vertex per edge: z_i (id n+i) is adjacent to both ends
// of edge i, and two added vertices are adjacent when their edges are
// vertex-disjoint with at least one edge between the endpoint pairs. Lists:
// original vertices keep L; z_i starts {1,2,3} and loses the colour of any
// singleton endpoint, collapses to the third colour when both endpoint lists
// are the same 2-set, and loses the colours of adjacent singleton z's (to a
// fixpoint). A proper colouring of the result on the combined lists restricts
// to a star colouring of g on L, and conversely every star colouring of g on
// L extends.
struct EdgeExtension {
  Graph gs;
  ListAssignment lists;
};

EdgeExtension edge_extension(const Graph& g, const ListAssignment& L);

enum class BranchCase { Case1, Case2a, Case2b };

const char* branch_case_name(BranchCase c);

struct BranchedAssignment {
  ListAssignment lists;
  BranchCase tag;
  std::vector<int> seeds;      // branched neighbours of the centre
};

// List-assignment branches for a graph of diameter <= 3 that passes the
// structure gate, covering all star 3-colourings around the smallest vertex
// of degree >= 5 (empty when maximum degree <= 4): either that vertex's
// neighbourhood is monochromatic (Case 1), or the branch fixes the colours of
// four of its neighbours plus, when the pattern needs it, one more, and
// narrows the remaining lists by propagation rules keyed to the layers around
// the centre. Throws PreconditionViolated if the gate fails.
std::vector<BranchedAssignment> branch_lists(const Graph& g);

// Decides star 3-colourability for connected graphs of diameter <= 3.
// Refuses structurally (returns nullopt) when the gate finds a 5-cycle or a
// bad 4-cycle; otherwise reduces, then either solves the reduced graph
// exhaustively (maximum degree <= 4 bounds its order by 53) or runs the
// branch list assignments through the edge extension and the 2-list solver.
// A found colouring is lifted back through the reduction log and verified on
// the input graph.
std::optional<VertexColouring> decide_star3_d3(const Graph& g);

}  // namespace chromadia
