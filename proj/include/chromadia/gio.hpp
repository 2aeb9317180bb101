#pragma once

#include <string>
#include <vector>

#include "chromadia/graph.hpp"
#include "chromadia/verify.hpp"

namespace chromadia {

// graph6, bit-exact: short form (n <= 62) and the '~'-prefixed long form.
// Strict parsing: length must match, padding bits must be zero, bytes must
// lie in the printable range 63..126. Throws ParseError otherwise.
Graph read_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

// One graph per non-empty line.
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& gs);

// Plain text: first line "n m", then m lines "u v" (0-based).
Graph read_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

// Extension-based loading: ".g6" -> graph6 lines, anything else -> edge list.
// A .g6 file with several graphs is an error here (callers that want batches
// use read_graph6_file).
Graph load_graph_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// JSON certificates, 1-based colours/labels: {"schema":1,"k":3,"colors":[...]}
// and {"schema":1,"a1":1,"a2":2,"k":4,"labels":[...]}. Lists files:
// {"schema":1,"lists":[[1,3],[2],...]}.
std::string colouring_to_json(const VertexColouring& c);
VertexColouring colouring_from_json(const std::string& text);
std::string labelling_to_json(const Labelling& lab);
Labelling labelling_from_json(const std::string& text);
std::string lists_to_json(const std::vector<std::vector<int>>& lists);
std::vector<std::vector<int>> lists_from_json(const std::string& text);

}  // namespace chromadia
