#include "rainbow/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <thread>

#include "rainbow/enumerate.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph6.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

namespace {

// Evaluates pred on every candidate with up to `jobs` workers pulling indices
// from a shared counter. Results land by index, so the outcome is schedule-free.
template <class Pred>
std::vector<char> parallel_test(const std::vector<graph>& candidates, int jobs, Pred pred) {
    std::vector<char> ok(candidates.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < candidates.size(); i = next++) ok[i] = pred(candidates[i]) ? 1 : 0;
    };
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(candidates.size())));
    if (workers == 1) {
        worker();
        return ok;
    }
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return ok;
}

void check_search_order(int n, const search_options& opts) {
    if (n > kMaxEnumerationOrder)
        throw capacity_error("extremal search supports n <= " + std::to_string(kMaxEnumerationOrder));
    if (n > kDefaultSearchCap && !opts.allow_large)
        throw capacity_error("extremal search above n = " + std::to_string(kDefaultSearchCap) +
                             " needs the cap override");
}

template <class Pred>
search_report ascend_edges(int n, search_target target, int d, const search_options& opts, Pred pred) {
    const auto start = std::chrono::steady_clock::now();
    search_report report;
    report.n = n;
    report.target = target;
    report.d = d;
    const auto all = enumerate_connected_graphs(n);
    const int max_m = n * (n - 1) / 2;
    for (int m = n - 1; m <= max_m; ++m) {
        std::vector<graph> layer;
        for (const auto& g : all)
            if (g.size() == m) layer.push_back(g);
        auto ok = parallel_test(layer, opts.jobs, pred);
        report.graphs_examined += layer.size();
        for (std::size_t i = 0; i < layer.size(); ++i)
            if (ok[i]) report.witnesses.push_back({graph6_encode(layer[i])});
        if (opts.progress) opts.progress(m, report.graphs_examined);
        if (!report.witnesses.empty()) {
            report.value = m;
            break;
        }
    }
    std::sort(report.witnesses.begin(), report.witnesses.end());
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

class clique_finder {
public:
    explicit clique_finder(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

    int run() {
        const std::uint64_t all = adj_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << adj_.size()) - 1;
        expand(0, all);
        return best_;
    }

private:
    void expand(int size, std::uint64_t candidates) {
        if (!candidates) {
            best_ = std::max(best_, size);
            return;
        }
        while (candidates) {
            if (size + std::popcount(candidates) <= best_) return;
            const int v = std::countr_zero(candidates);
            expand(size + 1, candidates & adj_[v]);
            candidates &= candidates - 1;
        }
    }

    std::vector<std::uint64_t> adj_;
    int best_ = 0;
};

} // namespace

int delta_prune_bound(int n) {
    if (n < 2) throw invalid_input("delta_prune_bound: n must be at least 2");
    int r = 0;
    while (static_cast<long long>(r) * r < n - 1) ++r;
    return r;
}

search_report compute_e2(int n, const search_options& opts) {
    if (n < 1) throw invalid_input("compute_e2: n must be positive");
    if (n <= 2) {
        search_report r;
        r.n = n;
        r.target = search_target::e2;
        return r;
    }
    check_search_order(n, opts);
    const int min_delta = delta_prune_bound(n);
    // rc = 2 forces diameter exactly 2 (complete graphs have rc 1) and hence
    // n <= 1 + Δ^2; rc <= 2 together with non-completeness pins rc = 2.
    return ascend_edges(n, search_target::e2, 2, opts, [&](const graph& g) {
        auto diam = diameter(g);
        if (!diam || *diam != 2) return false;
        if (degree_profile(g).max_degree < min_delta) return false;
        return rc2_decide(g).has_value();
    });
}

search_report compute_e_prime(int n, int d, const search_options& opts) {
    if (n < 1) throw invalid_input("compute_e_prime: n must be positive");
    if (d < 2) throw invalid_input("compute_e_prime: d must be at least 2");
    check_search_order(n, opts);
    return ascend_edges(n, search_target::e_prime, d, opts, [&](const graph& g) {
        const int lower = std::max(0, *diameter(g) - 1);
        if (lower > d) return false;
        if (!rvc_leq(g, d)) return false;
        return !(d - 1 >= lower && rvc_leq(g, d - 1));
    });
}

std::vector<canonical_form> characterize_minimal_rvc(int n, int d) {
    if (d < 2) throw invalid_input("characterize_minimal_rvc: d must be at least 2");
    std::vector<canonical_form> out;
    for (const graph& t : enumerate_trees(n)) {
        if (static_cast<int>(leaves(t).size()) == t.order()) continue;
        graph core = delete_leaves(t);
        if (core.order() == d && is_tree(core)) out.push_back(canonical_key(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int claim1_auto_threshold(int n) {
    if (n < 1) throw invalid_input("claim1_auto_threshold: n must be positive");
    const double half_log = std::log2(static_cast<double>(n)) / 2.0;
    return static_cast<int>(std::ceil(half_log * half_log));
}

claim1_report claim1_verify(const graph& g, const edge_coloring& c, std::optional<int> k) {
    if (c.palette_size > 2 || std::any_of(c.colors.begin(), c.colors.end(), [](int x) { return x < 0 || x > 1; }))
        throw invalid_input("claim1_verify: coloring must use colors {0, 1}");
    if (!verify_rc_coloring(g, c)) throw invalid_input("claim1_verify: coloring is not rainbow connected");

    claim1_report r;
    r.k = k ? *k : claim1_auto_threshold(g.order());
    if (r.k < 0) throw invalid_input("claim1_verify: k must be non-negative");
    for (int v = 0; v < g.order(); ++v) (g.degree(v) < r.k ? r.S : r.T).push_back(v);
    r.bound = static_cast<long long>(r.k) * r.k + 1;

    auto edges = g.edges();
    auto color_of = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), edge{u, v});
        return c.colors[static_cast<std::size_t>(it - edges.begin())];
    };

    const int s = static_cast<int>(r.S.size());
    const int t = static_cast<int>(r.T.size());
    std::vector<std::uint64_t> support(static_cast<std::size_t>(s), 0);
    std::vector<std::uint64_t> negative(static_cast<std::size_t>(s), 0);
    for (int i = 0; i < s; ++i) {
        std::vector<int> row(static_cast<std::size_t>(t), 0);
        for (int j = 0; j < t; ++j) {
            if (!g.adjacent(r.S[i], r.T[j])) continue;
            const bool red = color_of(r.S[i], r.T[j]) == 0;
            row[j] = red ? 1 : -1;
            support[i] |= std::uint64_t{1} << j;
            if (!red) negative[i] |= std::uint64_t{1} << j;
        }
        r.a.push_back(std::popcount(support[i]));
        r.e_st += r.a.back();
        r.total_completions += std::ldexp(1.0, t - r.a.back());
        r.alpha.push_back(std::move(row));
    }

    // Sign vectors share a completion iff they agree wherever both are nonzero;
    // a set shares one iff it does so pairwise.
    std::vector<std::uint64_t> compatible(static_cast<std::size_t>(s), 0);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            if (i != j && ((negative[i] ^ negative[j]) & support[i] & support[j]) == 0)
                compatible[i] |= std::uint64_t{1} << j;
    r.max_multiplicity = s == 0 ? 0 : clique_finder(compatible).run();

    if (t <= kClaim1MaterializeLimit) {
        r.materialized = true;
        long long max_seen = 0;
        for (std::uint64_t alpha = 0; alpha < (std::uint64_t{1} << t); ++alpha) {
            long long count = 0;
            for (int i = 0; i < s; ++i)
                if (((alpha ^ negative[i]) & support[i]) == 0) ++count;
            if (count) {
                r.multiplicities.emplace(alpha, count);
                max_seen = std::max(max_seen, count);
            }
        }
        if (max_seen != r.max_multiplicity)
            throw std::logic_error("claim1_verify: streamed and pairwise multiplicities disagree");
    }

    r.vacuous = s == 0 || t == 0;
    r.holds = r.max_multiplicity <= r.bound;
    return r;
}

std::string to_string(search_target t) { return t == search_target::e2 ? "e2" : "eprime"; }

} // namespace rainbow
