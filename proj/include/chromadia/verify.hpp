#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chromadia/graph.hpp"

namespace chromadia {

// Colours are 1-based; colors.size() must equal the graph order.
struct VertexColouring {
  int k = 0;
  std::vector<int> colors;
  bool operator==(const VertexColouring&) const = default;
};

enum class ColouringKind { Proper, Acyclic, Star, Injective };

const char* kind_name(ColouringKind k);

// L(a1,a2)-k-labelling candidate. Labels are 1-based, in 1..k. Constraints
// follow path existence: a path of length 1 between u,v demands a label gap
// >= a1, a path of length 2 (a common neighbour) demands a gap >= a2; on a
// triangle edge both apply.
struct Labelling {
  int a1 = 1, a2 = 1, k = 0;
  std::vector<int> labels;
  bool operator==(const Labelling&) const = default;
};

// Independent set I plus forest-inducing remainder F.
struct IFPartition {
  std::vector<int> I, F;
};

struct Violation {
  enum class Kind {
    ColourOutOfRange,
    ImproperEdge,
    BichromaticCycle,
    BichromaticP4,
    BichromaticP3,
    AdjacentGap,
    DistanceTwoGap,
    LabelOutOfRange,
    IndependenceEdge,
    ForestCycle,
  };
  Kind kind;
  std::vector<int> witness;  // vertices of the offending structure, in order
};

const char* violation_name(Violation::Kind k);

// nullopt means the certificate checks out. The first violation found in a
// fixed lexicographic scan order is returned, and every returned witness is
// re-validated internally before being handed out.
using CheckResult = std::optional<Violation>;

// Throws ArityMismatch when the colour vector length differs from g.n().
// Star checking runs both a bichromatic-P4 scan and an independent
// star-forest decomposition check; disagreement raises Internal.
CheckResult check_colouring(const Graph& g, const VertexColouring& c, ColouringKind kind);

// Throws ArityMismatch on length mismatch.
CheckResult check_lab_labelling(const Graph& g, const Labelling& lab);

// Throws NotAPartition when I and F fail to partition the vertex set.
CheckResult check_if_partition(const Graph& g, const IFPartition& p);

}  // namespace chromadia
