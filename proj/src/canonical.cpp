#include "rainbow/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "rainbow/graph6.hpp"

namespace rainbow {

namespace {

using partition = std::vector<std::vector<int>>;

// Splits cells by neighbour counts into the current cells until stable. Only
// structural information is used, so the result commutes with relabeling.
void refine(const graph& g, partition& cells) {
    const int n = g.order();
    std::vector<int> cell_of(static_cast<std::size_t>(n));
    for (;;) {
        const std::size_t before = cells.size();
        std::vector<std::uint64_t> masks(cells.size(), 0);
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) {
                cell_of[v] = static_cast<int>(c);
                masks[c] |= std::uint64_t{1} << v;
            }

        partition next;
        next.reserve(static_cast<std::size_t>(n));
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> sig;
            sig.reserve(cell.size());
            for (int v : cell) {
                std::vector<int> counts(cells.size());
                for (std::size_t c = 0; c < cells.size(); ++c)
                    counts[c] = std::popcount(g.row(v) & masks[c]);
                sig.emplace_back(std::move(counts), v);
            }
            std::sort(sig.begin(), sig.end());
            for (std::size_t i = 0; i < sig.size(); ++i) {
                if (i == 0 || sig[i].first != sig[i - 1].first) next.emplace_back();
                next.back().push_back(sig[i].second);
            }
        }
        cells = std::move(next);
        if (cells.size() == before) return;
    }
}

struct search_state {
    const graph& g;
    std::vector<std::uint64_t> best_key;
    std::vector<int> best_perm;
    bool have_best = false;

    void leaf(const partition& cells) {
        const int n = g.order();
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < cells.size(); ++i) perm[cells[i][0]] = static_cast<int>(i);
        std::vector<std::uint64_t> key(static_cast<std::size_t>(n), 0);
        for (int u = 0; u < n; ++u)
            for (std::uint64_t r = g.row(u); r; r &= r - 1)
                key[perm[u]] |= std::uint64_t{1} << perm[std::countr_zero(r)];
        if (!have_best || key < best_key) {
            best_key = std::move(key);
            best_perm = std::move(perm);
            have_best = true;
        }
    }

    bool twins(int u, int v) const {
        const std::uint64_t bu = std::uint64_t{1} << u;
        const std::uint64_t bv = std::uint64_t{1} << v;
        return (g.row(u) & ~bv) == (g.row(v) & ~bu);
    }

    void descend(partition cells) {
        refine(g, cells);
        if (static_cast<int>(cells.size()) == g.order()) {
            leaf(cells);
            return;
        }
        std::size_t target = 0;
        while (cells[target].size() == 1) ++target;
        const std::vector<int> cell = cells[target];
        std::vector<int> tried;
        for (int v : cell) {
            if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); }))
                continue;
            tried.push_back(v);
            partition child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<long>(target));
            child.push_back({v});
            std::vector<int> rest;
            for (int w : cell)
                if (w != v) rest.push_back(w);
            child.push_back(std::move(rest));
            child.insert(child.end(), cells.begin() + static_cast<long>(target) + 1, cells.end());
            descend(std::move(child));
        }
    }
};

} // namespace

std::vector<int> canonical_labeling(const graph& g) {
    search_state state{g, {}, {}, false};
    partition all(1);
    for (int v = 0; v < g.order(); ++v) all[0].push_back(v);
    state.descend(std::move(all));
    return state.best_perm;
}

graph canonical_graph(const graph& g) { return g.relabeled(canonical_labeling(g)); }

canonical_form canonical_key(const graph& g) { return {graph6_encode(canonical_graph(g))}; }

} // namespace rainbow
