#include "rainbow/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

int lemma1_parameter(int n) {
    if (n < 2) throw infeasible("lemma1_parameter: n must be at least 2");
    for (int k = 1; k < 62; ++k) {
        const long long lo = k + (1LL << (k - 1));
        const long long hi = k + (1LL << k);
        if (lo <= n && n <= hi) return k;
    }
    throw std::logic_error("lemma1_parameter: no k found");
}

lemma1_family_t lemma1_family(int n) {
    if (n <= 2) throw infeasible("lemma1_family: no graph of order <= 2 has rc = 2");
    lemma1_family_t f;
    f.n = n;
    f.k = lemma1_parameter(n);
    f.g = complete_bipartite(f.k, n - f.k);
    f.coloring = bipartite_code_coloring(f.k, n - f.k);
    f.edge_count = static_cast<long long>(f.k) * (n - f.k);
    return f;
}

std::vector<std::vector<int>> binary_code_matrix(int s, int t) {
    if (s < 1 || t < 1) throw invalid_input("binary_code_matrix: s, t must be positive");
    std::vector<std::vector<int>> m(static_cast<std::size_t>(s), std::vector<int>(static_cast<std::size_t>(t)));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) m[i][j] = (i < 31) ? (j >> i) & 1 : 0;
    return m;
}

edge_coloring coloring_from_matrix(const graph& kst, const std::vector<std::vector<int>>& matrix) {
    const int s = static_cast<int>(matrix.size());
    const int t = s > 0 ? static_cast<int>(matrix[0].size()) : 0;
    if (kst.order() != s + t || kst.size() != s * t)
        throw invalid_input("coloring_from_matrix: matrix shape does not match K_{s,t}");
    edge_coloring c;
    c.palette_size = 2;
    for (const auto& [u, v] : kst.edges()) {
        if (u >= s || v < s) throw invalid_input("coloring_from_matrix: graph is not K_{s,t} with X first");
        c.colors.push_back(matrix[u][v - s]);
    }
    return c;
}

edge_coloring bipartite_code_coloring(int s, int t) {
    if (s < 1 || t < 2)
        throw invalid_input("bipartite_code_coloring: need s >= 1 and t >= 2");
    if (s < 31 && t > (1 << s))
        throw invalid_input("bipartite_code_coloring: t = " + std::to_string(t) + " exceeds 2^s; "
                            "columns would repeat, use rc_exact instead");
    auto m = binary_code_matrix(s, t);
    std::set<std::vector<int>> rows(m.begin(), m.end());
    if (static_cast<int>(rows.size()) != s)
        throw invalid_input("bipartite_code_coloring: code matrix rows are not distinct for (" +
                            std::to_string(s) + "," + std::to_string(t) + "); use rc_exact instead");
    return coloring_from_matrix(complete_bipartite(s, t), m);
}

vertex_coloring tree_rvc_coloring(const graph& tree) {
    if (!is_tree(tree)) throw invalid_input("tree_rvc_coloring: input is not a tree");
    vertex_coloring c;
    c.colors.assign(static_cast<std::size_t>(tree.order()), 0);
    for (int v = 0; v < tree.order(); ++v)
        if (tree.degree(v) >= 2) c.colors[v] = c.palette_size++;
    if (c.palette_size == 0) throw invalid_input("tree_rvc_coloring: tree has no internal vertex");
    return c;
}

minimal_rvc_tree_t minimal_rvc_tree(int n, int d) {
    if (d < 2 || n < d + 2)
        throw infeasible("minimal_rvc_tree: need d >= 2 and n >= d + 2, got n = " + std::to_string(n) +
                         ", d = " + std::to_string(d));
    std::vector<edge> edges;
    for (int v = 0; v + 1 < d; ++v) edges.push_back({v, v + 1});
    const int pendants = n - d;
    const int at_start = pendants / 2;
    int next = d;
    for (int i = 0; i < at_start; ++i) edges.push_back({0, next++});
    while (next < n) edges.push_back({d - 1, next++});
    minimal_rvc_tree_t out;
    out.n = n;
    out.d = d;
    out.tree = build_graph(n, edges);
    out.coloring = tree_rvc_coloring(out.tree);
    return out;
}

} // namespace rainbow
