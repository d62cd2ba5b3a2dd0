#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/canonical.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// compute_e2 / compute_e_prime run up to this order by default; the
// enumeration cap (kMaxEnumerationOrder) is reachable with allow_large.
inline constexpr int kDefaultSearchCap = 7;

enum class search_target { e2, e_prime };

struct search_report {
    int n = 0;
    search_target target = search_target::e2;
    int d = 2;
    std::optional<int> value;             // nullopt: infeasible
    std::vector<canonical_form> witnesses; // sorted
    std::uint64_t graphs_examined = 0;
    std::chrono::milliseconds elapsed{0};
};

struct search_options {
    int jobs = 1;
    bool allow_large = false;
    // Called after each edge count is fully scanned: (m, graphs examined so far).
    std::function<void(int, std::uint64_t)> progress;
};

/// ceil(sqrt(n - 1)), integer exact.
int delta_prune_bound(int n);

/// Minimum size of an order-n graph with rc = 2. n <= 2 yields an infeasible report.
search_report compute_e2(int n, const search_options& opts = {});

/// Minimum size of a connected order-n graph with rvc = d.
search_report compute_e_prime(int n, int d, const search_options& opts = {});

/// Canonical forms of order-n trees whose leaf deletion is a tree of order d.
std::vector<canonical_form> characterize_minimal_rvc(int n, int d);

struct claim1_report {
    int k = 0;
    std::vector<vertex> S; // degree < k
    std::vector<vertex> T; // degree >= k
    std::vector<int> a;    // |N(u_i) ∩ T| for u_i in S
    std::vector<std::vector<int>> alpha; // +1 color 0, -1 color 1, 0 non-adjacent
    long long e_st = 0;
    // Completed vectors (as T-indexed ±1 bitmask, bit j set for -1) and their
    // multiplicities. Filled only when t <= kClaim1MaterializeLimit.
    std::map<std::uint64_t, long long> multiplicities;
    bool materialized = false;
    long long max_multiplicity = 0;
    long long bound = 0; // k^2 + 1
    // Σ_i 2^(t - a_i) = Σ_α n_α
    double total_completions = 0.0;
    bool vacuous = false;
    bool holds = false;
};

inline constexpr int kClaim1MaterializeLimit = 20;

/// Auto threshold ceil((log2 sqrt(n))^2).
int claim1_auto_threshold(int n);

/// Degree split, sign vectors and completed-vector multiplicities for a
/// verified 2-coloring. The maximum multiplicity is a maximum set of pairwise
/// compatible sign vectors, so it never enumerates 2^t completions.
claim1_report claim1_verify(const graph& g, const edge_coloring& c, std::optional<int> k = std::nullopt);

std::string to_string(search_target t);

} // namespace rainbow
