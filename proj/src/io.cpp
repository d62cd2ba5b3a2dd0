#include "rainbow/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/graph6.hpp"

namespace rainbow {

namespace {

int parse_int(std::string_view s, const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw invalid_input("cannot parse " + what + " from '" + std::string(s) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

graph parse_family(std::string_view name, std::string_view args) {
    if (name == "tree") {
        std::vector<edge> edges;
        int n = 1;
        if (!args.empty()) {
            for (auto item : split(args, ',')) {
                auto ends = split(item, '-');
                if (ends.size() != 2) throw invalid_input("tree edge must look like u-v");
                edge e{parse_int(ends[0], "vertex"), parse_int(ends[1], "vertex")};
                n = std::max({n, e.u + 1, e.v + 1});
                edges.push_back(e);
            }
        }
        graph g = build_graph(n, edges);
        if (!is_tree(g)) throw invalid_input("tree: edges do not form a tree");
        return g;
    }
    auto params = split(args, ',');
    std::vector<int> p;
    for (auto s : params) p.push_back(parse_int(s, "family parameter"));
    auto need = [&](std::size_t count) {
        if (p.size() != count)
            throw invalid_input(std::string(name) + " expects " + std::to_string(count) + " parameter(s)");
    };
    if (name == "Kn") {
        need(1);
        return complete_graph(p[0]);
    }
    if (name == "Kst") {
        need(2);
        return complete_bipartite(p[0], p[1]);
    }
    if (name == "Pn") {
        need(1);
        return path_graph(p[0]);
    }
    if (name == "Cn") {
        need(1);
        return cycle_graph(p[0]);
    }
    if (name == "Star") {
        need(1);
        return star_graph(p[0]);
    }
    throw invalid_input("unknown graph family '" + std::string(name) + "'");
}

} // namespace

void write_edge_list(std::ostream& out, const graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

graph read_edge_list(std::istream& in) {
    long long n = 0;
    long long m = 0;
    if (!(in >> n >> m)) throw invalid_input("edge list: missing 'n m' header");
    if (n < 1 || n > graph::kMaxOrder || m < 0)
        throw invalid_input("edge list: bad header " + std::to_string(n) + " " + std::to_string(m));
    std::vector<edge> edges;
    for (long long i = 0; i < m; ++i) {
        edge e{};
        if (!(in >> e.u >> e.v)) throw invalid_input("edge list: expected " + std::to_string(m) + " edges");
        edges.push_back(e);
    }
    return build_graph(static_cast<int>(n), edges);
}

graph parse_graph_spec(const std::string& spec) {
    if (auto colon = spec.find(':'); colon != std::string::npos)
        return parse_family(std::string_view(spec).substr(0, colon),
                            std::string_view(spec).substr(colon + 1));
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) {
        std::ifstream file(spec);
        std::string first;
        std::getline(file, first);
        std::istringstream probe(first);
        long long a = 0;
        long long b = 0;
        if (probe >> a >> b) {
            file.clear();
            file.seekg(0);
            return read_edge_list(file);
        }
        return graph6_decode(first);
    }
    return graph6_decode(spec);
}

} // namespace rainbow
