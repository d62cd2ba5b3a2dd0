#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

using vertex = int;

struct edge {
    vertex u;
    vertex v;
    friend auto operator<=>(const edge&, const edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one 64-bit row per vertex, so the order is capped
/// at kMaxOrder. Every graph in this project (enumeration, solvers, the
/// constructed families up to n = 60) fits comfortably.
class graph {
public:
    static constexpr int kMaxOrder = 64;

    graph() : graph(1) {}
    explicit graph(int n);

    /// Rows must be symmetric with an empty diagonal; throws invalid_input otherwise.
    static graph from_rows(int n, std::span<const std::uint64_t> rows);

    int order() const { return n_; }
    int size() const { return m_; }

    bool adjacent(vertex u, vertex v) const { return (rows_[u] >> v) & 1U; }
    std::uint64_t row(vertex v) const { return rows_[v]; }
    std::span<const std::uint64_t> rows() const { return rows_; }
    int degree(vertex v) const;

    /// Edges with u < v, sorted lexicographically. Edge colorings index into this list.
    std::vector<edge> edges() const;

    /// Returns the graph whose vertex perm[v] corresponds to v here.
    graph relabeled(std::span<const int> perm) const;

    graph with_edge(vertex u, vertex v) const;

    std::uint64_t all_vertices() const;

    friend bool operator==(const graph&, const graph&) = default;

private:
    int n_ = 1;
    int m_ = 0;
    std::vector<std::uint64_t> rows_;
};

struct degree_profile_t {
    std::vector<int> degrees;
    int max_degree = 0;
};

/// Builds a graph from an edge list, collapsing duplicates in either orientation.
graph build_graph(int n, std::span<const edge> edges);
graph build_graph(int n, std::initializer_list<edge> edges);

/// Longest shortest-path distance; nullopt when the graph is disconnected.
std::optional<int> diameter(const graph& g);
bool is_connected(const graph& g);
bool is_complete(const graph& g);
bool is_tree(const graph& g);
degree_profile_t degree_profile(const graph& g);

/// Vertices of degree 1.
std::vector<vertex> leaves(const graph& g);

/// Removes every degree-1 vertex once and relabels the survivors in label order.
graph delete_leaves(const graph& g);

// Standard families. complete_bipartite puts part X on [0,s) and Y on [s,s+t).
graph complete_graph(int n);
graph complete_bipartite(int s, int t);
graph path_graph(int n);
graph cycle_graph(int n);
graph star_graph(int leaves);

} // namespace rainbow
