#include "rainbow/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <unordered_set>

#include "rainbow/canonical.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph6.hpp"

namespace rainbow {

namespace {

std::mutex cache_mutex;
std::map<int, std::vector<graph>> graph_cache;

void sort_by_key(std::vector<graph>& gs) {
    std::vector<std::pair<std::string, graph>> keyed;
    keyed.reserve(gs.size());
    for (auto& g : gs) keyed.emplace_back(graph6_encode(g), std::move(g));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    gs.clear();
    for (auto& [key, g] : keyed) gs.push_back(std::move(g));
}

// Vertex augmentation: every graph of order n arises from one of order n-1 by
// adding a vertex; children are deduplicated on their canonical key.
std::vector<graph> augment(const std::vector<graph>& parents, int n) {
    std::unordered_set<std::string> seen;
    std::vector<graph> out;
    const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
    for (const graph& p : parents) {
        std::vector<std::uint64_t> rows(p.rows().begin(), p.rows().end());
        rows.push_back(0);
        for (std::uint64_t nb = 0; nb < subsets; ++nb) {
            std::vector<std::uint64_t> child = rows;
            child[n - 1] = nb;
            for (std::uint64_t r = nb; r; r &= r - 1)
                child[std::countr_zero(r)] |= std::uint64_t{1} << (n - 1);
            graph c = canonical_graph(graph::from_rows(n, child));
            if (seen.insert(graph6_encode(c)).second) out.push_back(std::move(c));
        }
    }
    sort_by_key(out);
    return out;
}

std::string rooted_code(const graph& t, int v, int parent) {
    std::vector<std::string> kids;
    for (std::uint64_t r = t.row(v); r; r &= r - 1) {
        int w = std::countr_zero(r);
        if (w != parent) kids.push_back(rooted_code(t, w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids) out += k;
    out += ")";
    return out;
}

} // namespace

std::vector<graph> enumerate_graphs(int n) {
    if (n < 1) throw invalid_input("enumeration order must be at least 1");
    if (n > kMaxEnumerationOrder)
        throw capacity_error("enumeration supports n <= " + std::to_string(kMaxEnumerationOrder) +
                             ", got " + std::to_string(n));
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = graph_cache.find(n); it != graph_cache.end()) return it->second;
    }
    std::vector<graph> result;
    if (n == 1)
        result.push_back(graph(1));
    else
        result = augment(enumerate_graphs(n - 1), n);
    std::lock_guard lock(cache_mutex);
    return graph_cache.emplace(n, std::move(result)).first->second;
}

std::vector<graph> enumerate_connected_graphs(int n, std::optional<int> edge_count) {
    std::vector<graph> out;
    for (const graph& g : enumerate_graphs(n))
        if ((!edge_count || g.size() == *edge_count) && is_connected(g)) out.push_back(g);
    return out;
}

std::string tree_code(const graph& tree) {
    if (!is_tree(tree)) throw invalid_input("tree_code: input is not a tree");
    const int n = tree.order();
    if (n == 1) return "()";
    // Peel leaves layer by layer; the last one or two vertices are the centres.
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = tree.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer)
            for (std::uint64_t r = tree.row(v); r; r &= r - 1) {
                int w = std::countr_zero(r);
                if (--deg[w] == 1) next.push_back(w);
            }
        layer = std::move(next);
    }
    std::string best;
    for (int c : layer) {
        std::string code = rooted_code(tree, c, -1);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

std::vector<graph> enumerate_trees(int n) {
    if (n < 1) throw invalid_input("tree order must be at least 1");
    if (n > kMaxTreeOrder)
        throw capacity_error("tree enumeration supports n <= " + std::to_string(kMaxTreeOrder));
    std::vector<graph> level{graph(1)};
    for (int order = 2; order <= n; ++order) {
        std::set<std::string> seen;
        std::vector<graph> next;
        for (const graph& t : level) {
            for (int v = 0; v < order - 1; ++v) {
                std::vector<std::uint64_t> rows(t.rows().begin(), t.rows().end());
                rows.push_back(std::uint64_t{1} << v);
                rows[v] |= std::uint64_t{1} << (order - 1);
                graph child = graph::from_rows(order, rows);
                if (seen.insert(tree_code(child)).second) next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }
    for (auto& t : level) t = canonical_graph(t);
    sort_by_key(level);
    return level;
}

} // namespace rainbow
