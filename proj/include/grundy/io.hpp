#pragma once

#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"

#include <string>

namespace grundy {

enum class GraphFormat { dimacs, edge_list };

// dimacs: "p edge n m" header, "e u v" lines with 1-based vertices,
//         "c" comment lines ignored.
// edge_list: first line "n m", then m lines "u v" with 0-based vertices.
// Duplicate edges are tolerated and collapsed; anything else malformed
// throws std::invalid_argument.
Graph parse_graph(const std::string& text, GraphFormat format);
std::string emit_graph(const Graph& g, GraphFormat format);

// Deterministic DOT rendering; with a coloring, node labels read "v3:2".
std::string emit_dot(const Graph& g, const Coloring* coloring = nullptr);

// Coloring documents are JSON objects with fields exactly "n" and "colors"
// (1-based colors aligned to vertex index, 0 = unassigned).
std::string emit_coloring(const Coloring& c);
Coloring parse_coloring(const std::string& text);

}  // namespace grundy
