#pragma once

#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct lemma1_family_t {
    int n = 0;
    int k = 0;
    graph g;
    edge_coloring coloring;
    long long edge_count = 0;
};

struct minimal_rvc_tree_t {
    int n = 0;
    int d = 0;
    graph tree;
    vertex_coloring coloring;
};

/// Smallest k with k + 2^(k-1) <= n <= k + 2^k.
int lemma1_parameter(int n);

/// K_{k,n-k} with its binary-code 2-coloring; n >= 3, otherwise infeasible.
lemma1_family_t lemma1_family(int n);

/// s x t matrix whose column j is the s-bit binary encoding of j (row i = bit i).
std::vector<std::vector<int>> binary_code_matrix(int s, int t);

/// Colors edge (x_i, y_j) of K_{s,t} with matrix[i][j]. No validity check.
edge_coloring coloring_from_matrix(const graph& kst, const std::vector<std::vector<int>>& matrix);

/// Binary-code 2-coloring of K_{s,t}. Refuses (invalid_input) unless
/// 1 <= s, 2 <= t <= 2^s and the code matrix has pairwise-distinct rows.
edge_coloring bipartite_code_coloring(int s, int t);

/// Internal vertices get distinct colors in label order; leaves get color 0.
vertex_coloring tree_rvc_coloring(const graph& tree);

/// Internal path P_d with floor((n-d)/2) pendants on vertex 0 and the rest on
/// vertex d-1. Requires d >= 2 and n >= d + 2.
minimal_rvc_tree_t minimal_rvc_tree(int n, int d);

} // namespace rainbow
