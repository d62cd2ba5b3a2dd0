#include "rainbow/coloring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

void write_edge_coloring(std::ostream& out, const graph& g, const edge_coloring& c) {
    out << c.palette_size << '\n';
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        out << edges[i].u << ' ' << edges[i].v << ' ' << c.colors.at(i) << '\n';
}

void write_vertex_coloring(std::ostream& out, const vertex_coloring& c) {
    out << c.palette_size << '\n';
    if (c.palette_size == 0) return;
    for (std::size_t v = 0; v < c.colors.size(); ++v) out << v << ' ' << c.colors[v] << '\n';
}

edge_coloring read_edge_coloring(std::istream& in, const graph& g) {
    edge_coloring c;
    if (!(in >> c.palette_size) || c.palette_size < 1)
        throw invalid_input("edge coloring: missing or bad palette header");
    auto edges = g.edges();
    c.colors.assign(edges.size(), -1);
    int u = 0;
    int v = 0;
    int col = 0;
    while (in >> u >> v >> col) {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), edge{u, v});
        if (it == edges.end() || *it != edge{u, v})
            throw invalid_input("edge coloring: (" + std::to_string(u) + "," + std::to_string(v) +
                                ") is not an edge");
        auto idx = static_cast<std::size_t>(it - edges.begin());
        if (c.colors[idx] != -1) throw invalid_input("edge coloring: edge colored twice");
        if (col < 0 || col >= c.palette_size) throw invalid_input("edge coloring: color outside palette");
        c.colors[idx] = col;
    }
    if (!in.eof()) throw invalid_input("edge coloring: malformed line");
    if (std::count(c.colors.begin(), c.colors.end(), -1) != 0)
        throw invalid_input("edge coloring: not every edge is colored");
    return c;
}

vertex_coloring read_vertex_coloring(std::istream& in, const graph& g) {
    vertex_coloring c;
    if (!(in >> c.palette_size) || c.palette_size < 0)
        throw invalid_input("vertex coloring: missing or bad palette header");
    c.colors.assign(static_cast<std::size_t>(g.order()), vertex_coloring::kUncolored);
    int v = 0;
    int col = 0;
    while (in >> v >> col) {
        if (v < 0 || v >= g.order()) throw invalid_input("vertex coloring: vertex out of range");
        if (c.colors[v] != vertex_coloring::kUncolored)
            throw invalid_input("vertex coloring: vertex colored twice");
        if (col < 0 || col >= c.palette_size) throw invalid_input("vertex coloring: color outside palette");
        c.colors[v] = col;
    }
    if (!in.eof()) throw invalid_input("vertex coloring: malformed line");
    if (c.palette_size > 0 &&
        std::count(c.colors.begin(), c.colors.end(), vertex_coloring::kUncolored) != 0)
        throw invalid_input("vertex coloring: not every vertex is colored");
    return c;
}

int colors_used(const edge_coloring& c) {
    return static_cast<int>(std::set<int>(c.colors.begin(), c.colors.end()).size());
}

int colors_used(const vertex_coloring& c) {
    std::set<int> s;
    for (int col : c.colors)
        if (col != vertex_coloring::kUncolored) s.insert(col);
    return static_cast<int>(s.size());
}

} // namespace rainbow
