#include "rainbow/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

void check_order(int n) {
    if (n < 1)
        throw invalid_input("graph order must be at least 1, got " + std::to_string(n));
    if (n > graph::kMaxOrder)
        throw capacity_error("graph order " + std::to_string(n) + " exceeds cap " +
                             std::to_string(graph::kMaxOrder));
}

} // namespace

graph::graph(int n) : n_(n) {
    check_order(n);
    rows_.assign(static_cast<std::size_t>(n), 0);
}

graph graph::from_rows(int n, std::span<const std::uint64_t> rows) {
    graph g(n);
    if (static_cast<int>(rows.size()) != n)
        throw invalid_input("row count does not match order");
    const std::uint64_t mask = g.all_vertices();
    int bits = 0;
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~mask) throw invalid_input("adjacency row has bits beyond the order");
        if ((rows[v] >> v) & 1U) throw invalid_input("loop at vertex " + std::to_string(v));
        bits += std::popcount(rows[v]);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (((rows[u] >> v) & 1U) != ((rows[v] >> u) & 1U))
                throw invalid_input("adjacency is not symmetric");
    g.rows_.assign(rows.begin(), rows.end());
    g.m_ = bits / 2;
    return g;
}

int graph::degree(vertex v) const { return std::popcount(rows_[v]); }

std::vector<edge> graph::edges() const {
    std::vector<edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        std::uint64_t higher = rows_[u] & ~((std::uint64_t{2} << u) - 1);
        while (higher) {
            int v = std::countr_zero(higher);
            higher &= higher - 1;
            out.push_back({u, v});
        }
    }
    return out;
}

graph graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw invalid_input("permutation has wrong length");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
    for (int u = 0; u < n_; ++u) {
        std::uint64_t r = rows_[u];
        while (r) {
            int v = std::countr_zero(r);
            r &= r - 1;
            rows[perm[u]] |= std::uint64_t{1} << perm[v];
        }
    }
    return from_rows(n_, rows);
}

graph graph::with_edge(vertex u, vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw invalid_input("edge endpoint out of range");
    if (u == v) throw invalid_input("loop at vertex " + std::to_string(u));
    graph g = *this;
    if (!g.adjacent(u, v)) {
        g.rows_[u] |= std::uint64_t{1} << v;
        g.rows_[v] |= std::uint64_t{1} << u;
        ++g.m_;
    }
    return g;
}

std::uint64_t graph::all_vertices() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

graph build_graph(int n, std::span<const edge> edges) {
    graph g(n);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw invalid_input("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") out of range for order " + std::to_string(n));
        if (u == v) throw invalid_input("loop at vertex " + std::to_string(u));
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
    }
    return graph::from_rows(n, rows);
}

graph build_graph(int n, std::initializer_list<edge> edges) {
    return build_graph(n, std::span<const edge>(edges.begin(), edges.size()));
}

std::optional<int> diameter(const graph& g) {
    const int n = g.order();
    const std::uint64_t all = g.all_vertices();
    int diam = 0;
    for (int s = 0; s < n; ++s) {
        std::uint64_t seen = std::uint64_t{1} << s;
        std::uint64_t frontier = seen;
        int depth = 0;
        while (seen != all) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
            next &= ~seen;
            if (!next) return std::nullopt;
            seen |= next;
            frontier = next;
            ++depth;
        }
        diam = std::max(diam, depth);
    }
    return diam;
}

bool is_connected(const graph& g) {
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.all_vertices();
}

bool is_complete(const graph& g) {
    const long long n = g.order();
    return g.size() == n * (n - 1) / 2;
}

bool is_tree(const graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

degree_profile_t degree_profile(const graph& g) {
    degree_profile_t p;
    p.degrees.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        p.degrees.push_back(g.degree(v));
        p.max_degree = std::max(p.max_degree, p.degrees.back());
    }
    return p;
}

std::vector<vertex> leaves(const graph& g) {
    std::vector<vertex> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

graph delete_leaves(const graph& g) {
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 1) keep.push_back(v);
    if (keep.empty()) throw invalid_input("deleting leaves removes every vertex");
    std::vector<edge> kept;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(keep.size()); ++j)
            if (g.adjacent(keep[i], keep[j])) kept.push_back({i, j});
    return build_graph(static_cast<int>(keep.size()), kept);
}

graph complete_graph(int n) {
    std::vector<edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return build_graph(n, e);
}

graph complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw invalid_input("complete_bipartite needs s, t >= 1");
    std::vector<edge> e;
    for (int x = 0; x < s; ++x)
        for (int y = 0; y < t; ++y) e.push_back({x, s + y});
    return build_graph(s + t, e);
}

graph path_graph(int n) {
    std::vector<edge> e;
    for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    return build_graph(n, e);
}

graph cycle_graph(int n) {
    if (n < 3) throw invalid_input("cycle needs at least 3 vertices");
    std::vector<edge> e;
    for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
    return build_graph(n, e);
}

graph star_graph(int leaf_count) {
    std::vector<edge> e;
    for (int v = 1; v <= leaf_count; ++v) e.push_back({0, v});
    return build_graph(leaf_count + 1, e);
}

} // namespace rainbow
