#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rainbow/canonical.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/graph6.hpp"
#include "rainbow/io.hpp"

using namespace rainbow;

TEST_CASE("build_graph constructs, deduplicates and validates") {
    auto p3 = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3 == path_graph(3));

    auto k1 = build_graph(1, {});
    CHECK(k1.size() == 0);

    auto dup = build_graph(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(dup.size() == 2);
    CHECK(dup == p3);

    CHECK_THROWS_AS(build_graph(3, {{1, 1}}), invalid_input);
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), invalid_input);
    CHECK_THROWS_AS(build_graph(3, {{-1, 0}}), invalid_input);
    CHECK_THROWS_AS(graph(0), invalid_input);
    CHECK_THROWS_AS(graph(65), capacity_error);
}

TEST_CASE("from_rows rejects asymmetric or looped adjacency") {
    std::vector<std::uint64_t> asym{0b10, 0b00};
    CHECK_THROWS_AS(graph::from_rows(2, asym), invalid_input);
    std::vector<std::uint64_t> loop{0b01};
    CHECK_THROWS_AS(graph::from_rows(1, loop), invalid_input);
}

TEST_CASE("diameter") {
    CHECK(diameter(complete_graph(4)) == 1);
    CHECK(diameter(path_graph(4)) == 3);
    CHECK_FALSE(diameter(build_graph(4, {{0, 1}, {2, 3}})).has_value());
    CHECK(diameter(graph(1)) == 0);
    for (int s = 1; s <= 5; ++s)
        for (int t = 1; t <= 5; ++t) CHECK(diameter(complete_bipartite(s, t)) == (s == 1 && t == 1 ? 1 : 2));
}

TEST_CASE("degree_profile") {
    auto k23 = degree_profile(complete_bipartite(2, 3));
    CHECK(k23.degrees == std::vector<int>{3, 3, 2, 2, 2});
    CHECK(k23.max_degree == 3);
    auto c5 = degree_profile(cycle_graph(5));
    CHECK(c5.degrees == std::vector<int>(5, 2));
    CHECK(c5.max_degree == 2);
    auto k1 = degree_profile(graph(1));
    CHECK(k1.degrees == std::vector<int>{0});
    CHECK(k1.max_degree == 0);

    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        auto g = oracle::random_graph(9, 0.4, rng);
        auto p = degree_profile(g);
        int sum = 0;
        for (int d : p.degrees) sum += d;
        CHECK(sum == 2 * g.size());
        CHECK(p.max_degree == *std::max_element(p.degrees.begin(), p.degrees.end()));
    }
}

TEST_CASE("complete_bipartite layout") {
    auto g = complete_bipartite(2, 3);
    CHECK(g.size() == 6);
    CHECK(degree_profile(g).max_degree == 3);
    CHECK(complete_bipartite(3, 5).size() == 15);
    CHECK(complete_bipartite(1, 1) == complete_graph(2));
    CHECK(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(2, 3));
}

TEST_CASE("leaf deletion") {
    CHECK(delete_leaves(path_graph(5)) == path_graph(3));
    CHECK(delete_leaves(star_graph(4)) == graph(1));
    CHECK_THROWS_AS(delete_leaves(complete_graph(2)), invalid_input);
}

TEST_CASE("graph6 encoding") {
    CHECK(graph6_encode(graph(1)) == "@");
    CHECK(graph6_encode(path_graph(3)) == "Bg");
    CHECK(graph6_encode(complete_graph(4)) == "C~");
    auto c5 = cycle_graph(5);
    CHECK(graph6_decode(graph6_encode(c5)) == c5);

    // 63-vertex graphs switch to the 4-byte header.
    auto big = path_graph(63);
    auto text = graph6_encode(big);
    CHECK(text.substr(0, 4) == std::string{char(126), char(63), char(63 + 0), char(63 + 63)});
    CHECK(graph6_decode(text) == big);
}

TEST_CASE("graph6 round trip on random graphs keeps the isomorphism class") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 200; ++i) {
        auto g = oracle::random_graph(7, 0.5, rng);
        auto back = graph6_decode(graph6_encode(g));
        CHECK(back == g);
        CHECK(canonical_key(back) == canonical_key(g));
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(graph6_decode(""), invalid_input);
    CHECK_THROWS_AS(graph6_decode("?"), invalid_input);        // order 0
    CHECK_THROWS_AS(graph6_decode("B"), invalid_input);        // missing data byte
    CHECK_THROWS_AS(graph6_decode("Bgg"), invalid_input);      // extra data byte
    CHECK_THROWS_AS(graph6_decode("Bh"), invalid_input);       // padding bit set
    CHECK_THROWS_AS(graph6_decode("B "), invalid_input);       // out-of-range char
    CHECK_THROWS_AS(graph6_decode("~??B"), invalid_input);     // non-minimal header
    CHECK_THROWS_AS(graph6_decode("~?B"), invalid_input);      // truncated header
    CHECK_THROWS_AS(graph6_decode("~?A?"), capacity_error);    // n = 64*... above cap
    CHECK(graph6_decode(">>graph6<<Bg\n") == path_graph(3));
}

TEST_CASE("edge list text format") {
    std::ostringstream out;
    write_edge_list(out, cycle_graph(4));
    CHECK(out.str() == "4 4\n0 1\n0 3\n1 2\n2 3\n");
    std::istringstream in(out.str());
    CHECK(read_edge_list(in) == cycle_graph(4));
    std::istringstream bad("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(bad), invalid_input);
}

TEST_CASE("graph specs") {
    CHECK(parse_graph_spec("Kst:2,3") == complete_bipartite(2, 3));
    CHECK(parse_graph_spec("Pn:5") == path_graph(5));
    CHECK(parse_graph_spec("Cn:4") == cycle_graph(4));
    CHECK(parse_graph_spec("Kn:4") == complete_graph(4));
    CHECK(parse_graph_spec("Star:3") == star_graph(3));
    CHECK(parse_graph_spec("tree:0-1,1-2,1-3") == build_graph(4, {{0, 1}, {1, 2}, {1, 3}}));
    CHECK(parse_graph_spec("Bg") == path_graph(3));
    CHECK_THROWS_AS(parse_graph_spec("tree:0-1,1-2,2-0"), invalid_input);
    CHECK_THROWS_AS(parse_graph_spec("Kst:2"), invalid_input);
    CHECK_THROWS_AS(parse_graph_spec("Wheel:5"), invalid_input);
    CHECK_THROWS_AS(parse_graph_spec("Pn:x"), invalid_input);
}
