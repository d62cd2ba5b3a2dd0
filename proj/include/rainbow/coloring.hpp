#pragma once

#include <istream>
#include <ostream>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// Palette cap for the subset-state verifiers and the exact searches.
inline constexpr int kMaxPalette = 20;

/// Color per edge, indexed like graph::edges().
struct edge_coloring {
    int palette_size = 1;
    std::vector<int> colors;
    friend bool operator==(const edge_coloring&, const edge_coloring&) = default;
};

/// Color per vertex. With an empty palette every entry is kUncolored; this is
/// only meaningful on complete graphs, where no path has internal vertices.
struct vertex_coloring {
    static constexpr int kUncolored = -1;
    int palette_size = 0;
    std::vector<int> colors;
    friend bool operator==(const vertex_coloring&, const vertex_coloring&) = default;
};

// Text formats: "k" header then "u v c" per edge / "v c" per vertex.
void write_edge_coloring(std::ostream& out, const graph& g, const edge_coloring& c);
void write_vertex_coloring(std::ostream& out, const vertex_coloring& c);

/// Reads "u v c" lines and maps them onto g's edge order; every edge of g must
/// appear exactly once.
edge_coloring read_edge_coloring(std::istream& in, const graph& g);
vertex_coloring read_vertex_coloring(std::istream& in, const graph& g);

/// Number of distinct colors actually used.
int colors_used(const edge_coloring& c);
int colors_used(const vertex_coloring& c);

} // namespace rainbow
