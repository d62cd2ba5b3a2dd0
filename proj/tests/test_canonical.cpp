#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "rainbow/canonical.hpp"
#include "rainbow/enumerate.hpp"

using namespace rainbow;

TEST_CASE("canonical keys on small examples") {
    auto p3 = path_graph(3);
    auto p3_relabeled = build_graph(3, {{1, 0}, {0, 2}});
    CHECK(canonical_key(p3) == canonical_key(p3_relabeled));
    CHECK(canonical_key(p3) != canonical_key(complete_graph(3)));
    CHECK(canonical_key(complete_bipartite(2, 3)) != canonical_key(cycle_graph(5)));
    // Same degree sequence, not isomorphic: C_6 versus two triangles.
    auto two_triangles = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(canonical_key(cycle_graph(6)) != canonical_key(two_triangles));
}

TEST_CASE("canonical form is invariant under random relabeling") {
    std::mt19937 rng(11);
    for (int n = 1; n <= 8; ++n) {
        for (int sample = 0; sample < 12; ++sample) {
            auto g = oracle::random_graph(n, (sample % 4 + 1) / 5.0, rng);
            auto key = canonical_key(g);
            for (int i = 0; i < 100; ++i) {
                auto perm = oracle::random_permutation(n, rng);
                REQUIRE(canonical_key(g.relabeled(perm)) == key);
            }
        }
    }
}

TEST_CASE("canonical form separates exactly the naive isomorphism classes") {
    // Every labeled graph on 5 vertices: keys agree iff brute-force minimal rows agree.
    std::map<std::vector<std::uint64_t>, canonical_form> by_naive;
    std::set<canonical_form> keys;
    oracle::for_each_labeled_graph(5, [&](const graph& g) {
        auto naive = oracle::naive_canonical(g);
        auto key = canonical_key(g);
        auto [it, inserted] = by_naive.emplace(naive, key);
        if (!inserted) REQUIRE(it->second == key);
        keys.insert(key);
    });
    CHECK(by_naive.size() == 34);
    CHECK(keys.size() == 34);
}

TEST_CASE("highly symmetric graphs canonicalize quickly and correctly") {
    CHECK(canonical_graph(complete_graph(12)) == complete_graph(12));
    auto k = canonical_key(complete_bipartite(6, 6));
    std::mt19937 rng(3);
    CHECK(canonical_key(complete_bipartite(6, 6).relabeled(oracle::random_permutation(12, rng))) == k);
    // Cube graph Q_3.
    graph q3 = build_graph(8, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {2, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}});
    for (int i = 0; i < 20; ++i)
        CHECK(canonical_key(q3.relabeled(oracle::random_permutation(8, rng))) == canonical_key(q3));
}
