#include "rainbow/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

constexpr std::size_t kMaxPathElements = std::size_t{1} << 24;

void require_connected(const graph& g, const char* who) {
    if (!is_connected(g)) throw invalid_input(std::string(who) + ": graph is disconnected");
}

void require_palette(int k, const char* who) {
    if (k > kMaxPalette)
        throw capacity_error(std::string(who) + ": palette " + std::to_string(k) + " exceeds cap " +
                             std::to_string(kMaxPalette));
}

std::vector<std::vector<int>> edge_index_matrix(const graph& g) {
    std::vector<std::vector<int>> id(static_cast<std::size_t>(g.order()),
                                     std::vector<int>(static_cast<std::size_t>(g.order()), -1));
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        id[edges[i].u][edges[i].v] = static_cast<int>(i);
        id[edges[i].v][edges[i].u] = static_cast<int>(i);
    }
    return id;
}

// Reachability over (vertex, used-color-set) states. `step` decides whether a
// move from `from` (reached with `used`) to `to` is allowed and returns the new
// set, or -1 when it is not.
template <class Step>
bool all_pairs_reachable(const graph& g, int k, Step step) {
    const int n = g.order();
    const std::size_t states = static_cast<std::size_t>(n) << k;
    std::vector<std::uint64_t> seen((states + 63) / 64);
    std::vector<std::pair<int, std::uint32_t>> stack;
    for (int s = 0; s < n; ++s) {
        std::fill(seen.begin(), seen.end(), 0);
        std::uint64_t reached = std::uint64_t{1} << s;
        stack.assign(1, {s, 0U});
        seen[static_cast<std::size_t>(s) / 64] |= std::uint64_t{1} << (s % 64);
        while (!stack.empty() && reached != g.all_vertices()) {
            auto [v, used] = stack.back();
            stack.pop_back();
            for (std::uint64_t r = g.row(v); r; r &= r - 1) {
                const int w = std::countr_zero(r);
                const long long next = step(s, v, w, used);
                if (next < 0) continue;
                reached |= std::uint64_t{1} << w;
                const std::size_t idx = (static_cast<std::size_t>(next) * static_cast<std::size_t>(n)) +
                                        static_cast<std::size_t>(w);
                if (seen[idx / 64] >> (idx % 64) & 1U) continue;
                seen[idx / 64] |= std::uint64_t{1} << (idx % 64);
                stack.emplace_back(w, static_cast<std::uint32_t>(next));
            }
        }
        if (reached != g.all_vertices()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Path-constraint search shared by the edge and vertex variants. Elements are
// edges or vertices; each unsatisfied vertex pair must end up with one path
// whose elements carry pairwise-distinct colors.

struct path_problem {
    int elements = 0;
    int k = 0;
    std::vector<std::vector<std::vector<int>>> pair_paths;
    std::vector<int> order; // branching order over elements
};

struct search_node {
    std::vector<int> color;
    std::vector<std::uint32_t> domain;
    int max_used = -1;
};

class path_search {
public:
    explicit path_search(const path_problem& p) : p_(p) {}

    std::optional<std::vector<int>> run() {
        for (const auto& paths : p_.pair_paths)
            if (paths.empty()) return std::nullopt;
        search_node root;
        root.color.assign(static_cast<std::size_t>(p_.elements), -1);
        root.domain.assign(static_cast<std::size_t>(p_.elements), full_domain());
        std::vector<int> open(p_.pair_paths.size());
        std::iota(open.begin(), open.end(), 0);
        if (!propagate(root, open)) return std::nullopt;
        if (descend(root, open)) return result_;
        return std::nullopt;
    }

private:
    std::uint32_t full_domain() const { return p_.k >= 32 ? ~0U : (1U << p_.k) - 1; }

    // Can the unassigned elements of the path still be given distinct colors?
    static bool distinct_completion(const std::vector<std::uint32_t>& doms) {
        const int count = static_cast<int>(doms.size());
        if (count == 0) return true;
        std::uint32_t all = 0;
        for (auto d : doms) {
            if (!d) return false;
            all |= d;
        }
        if (std::popcount(all) < count) return false;
        std::vector<int> owner(32, -1);
        for (int e = 0; e < count; ++e) {
            std::uint32_t visited = 0;
            if (!augment(doms, e, visited, owner)) return false;
        }
        return true;
    }

    static bool augment(const std::vector<std::uint32_t>& doms, int e, std::uint32_t& visited,
                        std::vector<int>& owner) {
        for (std::uint32_t d = doms[e] & ~visited; d; d &= d - 1) {
            const int c = std::countr_zero(d);
            visited |= 1U << c;
            if (owner[c] < 0 || augment(doms, owner[c], visited, owner)) {
                owner[c] = e;
                return true;
            }
        }
        return false;
    }

    enum class path_state { dead, open, done };

    path_state classify(const search_node& s, const std::vector<int>& path, std::uint32_t& used) const {
        used = 0;
        bool complete = true;
        for (int e : path) {
            const int c = s.color[e];
            if (c < 0) {
                complete = false;
                continue;
            }
            if (used >> c & 1U) return path_state::dead;
            used |= 1U << c;
        }
        if (complete) return path_state::done;
        std::vector<std::uint32_t> doms;
        for (int e : path)
            if (s.color[e] < 0) doms.push_back(s.domain[e] & ~used);
        return distinct_completion(doms) ? path_state::open : path_state::dead;
    }

    static void assign(search_node& s, int e, int c) {
        s.color[e] = c;
        s.domain[e] = 1U << c;
        s.max_used = std::max(s.max_used, c);
    }

    bool propagate(search_node& s, std::vector<int>& open) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<int> still;
            still.reserve(open.size());
            for (int pair : open) {
                const auto& paths = p_.pair_paths[pair];
                int viable = 0;
                const std::vector<int>* only = nullptr;
                std::uint32_t only_used = 0;
                bool done = false;
                for (const auto& path : paths) {
                    std::uint32_t used = 0;
                    auto st = classify(s, path, used);
                    if (st == path_state::done) {
                        done = true;
                        break;
                    }
                    if (st == path_state::open) {
                        if (++viable == 1) {
                            only = &path;
                            only_used = used;
                        }
                    }
                }
                if (done) continue;
                if (viable == 0) return false;
                still.push_back(pair);
                if (viable != 1) continue;
                // A single usable connector: its open elements must avoid its colors.
                for (int e : *only) {
                    if (s.color[e] >= 0) continue;
                    const std::uint32_t narrowed = s.domain[e] & ~only_used;
                    if (narrowed == s.domain[e]) continue;
                    if (!narrowed) return false;
                    s.domain[e] = narrowed;
                    changed = true;
                    if (std::popcount(narrowed) == 1) {
                        assign(s, e, std::countr_zero(narrowed));
                        only_used |= narrowed;
                    }
                }
            }
            open = std::move(still);
        }
        return true;
    }

    bool descend(const search_node& s, const std::vector<int>& open) {
        int branch = -1;
        for (int e : p_.order)
            if (s.color[e] < 0) {
                branch = e;
                break;
            }
        if (branch < 0 || open.empty()) {
            result_ = s.color;
            for (auto& c : result_)
                if (c < 0) c = 0;
            return true;
        }
        // Colors above max_used are interchangeable, so try only the first of them.
        const int limit = std::min(p_.k, s.max_used + 2);
        const std::uint32_t allowed = s.domain[branch] & ((1U << limit) - 1);
        for (std::uint32_t d = allowed; d; d &= d - 1) {
            search_node child = s;
            assign(child, branch, std::countr_zero(d));
            std::vector<int> child_open = open;
            if (propagate(child, child_open) && descend(child, child_open)) return true;
        }
        return false;
    }

    const path_problem& p_;
    std::vector<int> result_;
};

// Simple paths from u to v with at most max_edges edges; the recorded
// elements are the edge ids (edge variant) or the internal vertices.
void collect_paths(const graph& g, int u, int v, int max_edges, bool vertex_elements,
                   const std::vector<std::vector<int>>& eid, std::vector<std::vector<int>>& out,
                   std::size_t& budget) {
    std::vector<int> trail;
    std::uint64_t on_path = std::uint64_t{1} << u;
    auto dfs = [&](auto&& self, int at, int depth) -> void {
        for (std::uint64_t r = g.row(at) & ~on_path; r; r &= r - 1) {
            const int w = std::countr_zero(r);
            if (vertex_elements) {
                if (w == v) {
                    out.push_back(trail);
                    budget += trail.size() + 1;
                    continue;
                }
                if (depth + 1 >= max_edges) continue;
                trail.push_back(w);
            } else {
                trail.push_back(eid[at][w]);
                if (w == v) {
                    out.push_back(trail);
                    budget += trail.size();
                    trail.pop_back();
                    continue;
                }
                if (depth + 1 >= max_edges) {
                    trail.pop_back();
                    continue;
                }
            }
            if (budget > kMaxPathElements)
                throw capacity_error("rainbow search: too many candidate paths");
            on_path |= std::uint64_t{1} << w;
            self(self, w, depth + 1);
            on_path &= ~(std::uint64_t{1} << w);
            trail.pop_back();
        }
    };
    dfs(dfs, u, 0);
}

path_problem edge_problem(const graph& g, int k) {
    path_problem p;
    p.elements = g.size();
    p.k = k;
    auto eid = edge_index_matrix(g);
    std::size_t budget = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (g.adjacent(u, v)) continue;
            p.pair_paths.emplace_back();
            collect_paths(g, u, v, k, false, eid, p.pair_paths.back(), budget);
        }
    auto edges = g.edges();
    p.order.resize(edges.size());
    std::iota(p.order.begin(), p.order.end(), 0);
    auto weight = [&](int e) { return std::min(g.degree(edges[e].u), g.degree(edges[e].v)); };
    std::stable_sort(p.order.begin(), p.order.end(),
                     [&](int a, int b) { return weight(a) > weight(b); });
    return p;
}

path_problem vertex_problem(const graph& g, int k) {
    path_problem p;
    p.elements = g.order();
    p.k = k;
    std::size_t budget = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (g.adjacent(u, v)) continue;
            p.pair_paths.emplace_back();
            collect_paths(g, u, v, k + 1, true, {}, p.pair_paths.back(), budget);
        }
    p.order.resize(static_cast<std::size_t>(g.order()));
    std::iota(p.order.begin(), p.order.end(), 0);
    std::stable_sort(p.order.begin(), p.order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return p;
}

// Renumbers colors to 0..used-1 preserving their order.
int compact(std::vector<int>& colors) {
    std::vector<int> present;
    for (int c : colors)
        if (c >= 0) present.push_back(c);
    std::sort(present.begin(), present.end());
    present.erase(std::unique(present.begin(), present.end()), present.end());
    for (int& c : colors)
        if (c >= 0) c = static_cast<int>(std::lower_bound(present.begin(), present.end(), c) - present.begin());
    return static_cast<int>(present.size());
}

} // namespace

bool verify_rc_coloring(const graph& g, const edge_coloring& c) {
    require_connected(g, "verify_rc_coloring");
    if (c.palette_size < 1) throw invalid_input("verify_rc_coloring: palette must be positive");
    require_palette(c.palette_size, "verify_rc_coloring");
    if (static_cast<int>(c.colors.size()) != g.size())
        throw invalid_input("verify_rc_coloring: coloring does not cover the edges");
    for (int col : c.colors)
        if (col < 0 || col >= c.palette_size) throw invalid_input("verify_rc_coloring: color outside palette");
    auto eid = edge_index_matrix(g);
    return all_pairs_reachable(g, c.palette_size, [&](int, int from, int to, std::uint32_t used) -> long long {
        const std::uint32_t bit = 1U << c.colors[eid[from][to]];
        return (used & bit) ? -1 : static_cast<long long>(used | bit);
    });
}

bool verify_rvc_coloring(const graph& g, const vertex_coloring& c) {
    require_connected(g, "verify_rvc_coloring");
    if (c.palette_size < 0) throw invalid_input("verify_rvc_coloring: negative palette");
    require_palette(c.palette_size, "verify_rvc_coloring");
    if (static_cast<int>(c.colors.size()) != g.order())
        throw invalid_input("verify_rvc_coloring: coloring does not cover the vertices");
    for (int col : c.colors) {
        if (c.palette_size == 0 && col != vertex_coloring::kUncolored)
            throw invalid_input("verify_rvc_coloring: empty palette but a vertex is colored");
        if (c.palette_size > 0 && (col < 0 || col >= c.palette_size))
            throw invalid_input("verify_rvc_coloring: color outside palette");
    }
    if (c.palette_size == 0) return is_complete(g);
    return all_pairs_reachable(g, c.palette_size, [&](int source, int from, int, std::uint32_t used) -> long long {
        if (from == source) return used;
        const std::uint32_t bit = 1U << c.colors[from];
        return (used & bit) ? -1 : static_cast<long long>(used | bit);
    });
}

std::optional<rainbow_witness> rc_leq(const graph& g, int k) {
    require_connected(g, "rc_leq");
    if (g.order() < 2) throw invalid_input("rc_leq: rc is undefined on a single vertex");
    if (k < 1) throw invalid_input("rc_leq: k must be at least 1");
    require_palette(k, "rc_leq");
    auto problem = edge_problem(g, k);
    auto colors = path_search(problem).run();
    if (!colors) return std::nullopt;
    const int used = std::max(1, compact(*colors));
    edge_coloring c{used, std::move(*colors)};
    return rainbow_witness{rainbow_kind::edge, used, std::move(c)};
}

std::optional<rainbow_witness> rvc_leq(const graph& g, int k) {
    require_connected(g, "rvc_leq");
    if (k < 0) throw invalid_input("rvc_leq: k must be non-negative");
    require_palette(k, "rvc_leq");
    if (is_complete(g)) {
        vertex_coloring c{0, std::vector<int>(static_cast<std::size_t>(g.order()), vertex_coloring::kUncolored)};
        return rainbow_witness{rainbow_kind::vertex, 0, std::move(c)};
    }
    if (k == 0) return std::nullopt;
    auto problem = vertex_problem(g, k);
    auto colors = path_search(problem).run();
    if (!colors) return std::nullopt;
    const int used = std::max(1, compact(*colors));
    vertex_coloring c{used, std::move(*colors)};
    return rainbow_witness{rainbow_kind::vertex, used, std::move(c)};
}

rainbow_witness rc_exact(const graph& g) {
    require_connected(g, "rc_exact");
    if (g.order() < 2) throw invalid_input("rc_exact: rc is undefined on a single vertex");
    // A spanning tree with distinct colors is rainbow, so rc <= n - 1.
    for (int k = *diameter(g); k <= g.order() - 1; ++k) {
        require_palette(k, "rc_exact");
        if (auto w = rc_leq(g, k)) return *w;
    }
    throw std::logic_error("rc_exact: no coloring with n - 1 colors");
}

rainbow_witness rvc_exact(const graph& g) {
    require_connected(g, "rvc_exact");
    const int start = std::max(0, *diameter(g) - 1);
    for (int k = start; k <= std::max(0, g.order() - 2); ++k) {
        require_palette(k, "rvc_exact");
        if (auto w = rvc_leq(g, k)) return *w;
    }
    throw std::logic_error("rvc_exact: no coloring with n - 2 colors");
}

// ---------------------------------------------------------------------------

namespace {

struct connector {
    int first;  // edge u-w
    int second; // edge w-v
};

class rc2_search {
public:
    explicit rc2_search(const graph& g) : g_(g) {
        auto eid = edge_index_matrix(g);
        auto edges = g.edges();
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) {
                if (g.adjacent(u, v)) continue;
                std::vector<connector> cs;
                for (std::uint64_t r = g.row(u) & g.row(v); r; r &= r - 1) {
                    const int w = std::countr_zero(r);
                    cs.push_back({eid[u][w], eid[w][v]});
                }
                pairs_.push_back(std::move(cs));
            }
        order_.resize(edges.size());
        std::iota(order_.begin(), order_.end(), 0);
        auto weight = [&](int e) { return std::min(g.degree(edges[e].u), g.degree(edges[e].v)); };
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return weight(a) > weight(b); });
    }

    std::optional<std::vector<int>> run() {
        for (const auto& cs : pairs_)
            if (cs.empty()) return std::nullopt;
        std::vector<int> color(static_cast<std::size_t>(g_.size()), -1);
        if (!propagate(color)) return std::nullopt;
        // Swapping the two colors maps solutions to solutions: pin the first edge.
        first_ = true;
        if (descend(color)) return result_;
        return std::nullopt;
    }

private:
    bool propagate(std::vector<int>& color) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& cs : pairs_) {
                int open = 0;
                const connector* last = nullptr;
                bool satisfied = false;
                for (const auto& c : cs) {
                    const int a = color[c.first];
                    const int b = color[c.second];
                    if (a >= 0 && b >= 0) {
                        if (a != b) {
                            satisfied = true;
                            break;
                        }
                        continue;
                    }
                    ++open;
                    last = &c;
                }
                if (satisfied) continue;
                if (open == 0) return false;
                if (open > 1) continue;
                const int a = color[last->first];
                const int b = color[last->second];
                if (a >= 0 && b < 0) {
                    color[last->second] = 1 - a;
                    changed = true;
                } else if (b >= 0 && a < 0) {
                    color[last->first] = 1 - b;
                    changed = true;
                }
            }
        }
        return true;
    }

    bool descend(std::vector<int>& color) {
        int branch = -1;
        for (int e : order_)
            if (color[e] < 0) {
                branch = e;
                break;
            }
        if (branch < 0) {
            result_ = color;
            return true;
        }
        const int options = first_ ? 1 : 2;
        first_ = false;
        for (int c = 0; c < options; ++c) {
            std::vector<int> child = color;
            child[branch] = c;
            if (propagate(child) && descend(child)) return true;
        }
        return false;
    }

    const graph& g_;
    std::vector<std::vector<connector>> pairs_;
    std::vector<int> order_;
    std::vector<int> result_;
    bool first_ = false;
};

} // namespace

std::optional<edge_coloring> rc2_decide(const graph& g) {
    require_connected(g, "rc2_decide");
    auto colors = rc2_search(g).run();
    if (!colors) return std::nullopt;
    return edge_coloring{2, std::move(*colors)};
}

} // namespace rainbow
