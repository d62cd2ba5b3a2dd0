#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "rainbow/graph.hpp"

namespace rainbow {

// Edge-list text: "n m" header followed by m lines "u v".
void write_edge_list(std::ostream& out, const graph& g);
graph read_edge_list(std::istream& in);

/// Accepts a named family ("Kn:5", "Kst:2,3", "Pn:4", "Cn:5", "Star:4",
/// "tree:0-1,1-2"), a path to an edge-list or graph6 file, or a graph6 string.
graph parse_graph_spec(const std::string& spec);

} // namespace rainbow
