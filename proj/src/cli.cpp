#include "rainbow/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "rainbow/bounds.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/graph6.hpp"
#include "rainbow/io.hpp"
#include "rainbow/report.hpp"
#include "rainbow/solver.hpp"

namespace rainbow::cli {

namespace {

struct options {
    std::string format = "json";
    std::string out_file;
    int jobs = 1;
    bool cap_override = false;
    std::optional<int> colors;

    std::string graph_spec;
    std::string coloring_file;
    std::string certificate_file;
    std::string target;
    std::string family;
    int n = 0;
    int d = 2;
    int s = 0;
    int t = 0;
    std::vector<std::string> values;
    std::vector<std::string> range;
    long long mul = 2;
};

// "131072", "2^17", "10^6"
std::int64_t parse_count(const std::string& token) {
    auto caret = token.find('^');
    try {
        std::size_t used = 0;
        if (caret == std::string::npos) {
            long long v = std::stoll(token, &used);
            if (used != token.size()) throw invalid_input("");
            return v;
        }
        long long base = std::stoll(token.substr(0, caret), &used);
        if (used != caret) throw invalid_input("");
        long long exp = std::stoll(token.substr(caret + 1), &used);
        if (used != token.size() - caret - 1 || exp < 0 || exp > 62) throw invalid_input("");
        std::int64_t v = 1;
        for (long long i = 0; i < exp; ++i) {
            if (v > INT64_MAX / std::max(base, 1LL)) throw capacity_error("value '" + token + "' overflows");
            v *= base;
        }
        return v;
    } catch (const capacity_error&) {
        throw;
    } catch (const std::exception&) {
        throw invalid_input("cannot parse count '" + token + "'");
    }
}

// Reads the coloring body that follows a graph: edge colorings have "u v c"
// rows, vertex colorings "v c" rows; an empty vertex palette has no rows.
std::variant<edge_coloring, vertex_coloring> read_any_coloring(std::istream& in, const graph& g) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream lines(text);
    std::string line;
    std::vector<std::string> body;
    while (std::getline(lines, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) body.push_back(line);
    if (body.empty()) throw invalid_input("coloring: empty input");
    bool vertex = true;
    if (body.size() > 1) {
        std::istringstream probe(body[1]);
        int tokens = 0;
        std::string tok;
        while (probe >> tok) ++tokens;
        vertex = tokens == 2;
        if (tokens != 2 && tokens != 3) throw invalid_input("coloring: rows must have 2 or 3 fields");
    } else if (g.size() > 0 && body[0].find_first_not_of(" \t\r0") != std::string::npos) {
        vertex = false;
    }
    std::istringstream again(text);
    if (vertex) return read_vertex_coloring(again, g);
    return read_edge_coloring(again, g);
}

class runner {
public:
    runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int rainbow_number(const options& o, rainbow_kind kind) {
        graph g = parse_graph_spec(o.graph_spec);
        std::optional<rainbow_witness> w;
        if (o.colors)
            w = kind == rainbow_kind::edge ? rc_leq(g, *o.colors) : rvc_leq(g, *o.colors);
        else
            w = kind == rainbow_kind::edge ? rc_exact(g) : rvc_exact(g);
        if (!w) {
            nlohmann::ordered_json j;
            j["schema"] = kWitnessSchema;
            j["graph"] = graph6_encode(g);
            j["kind"] = kind == rainbow_kind::edge ? "rc" : "rvc";
            j["status"] = "exhausted";
            j["k"] = *o.colors;
            emit(o, j.dump(2) + "\n");
            return negative;
        }
        if (o.format == "json") {
            emit(o, to_json(g, *w).dump(2) + "\n");
        } else {
            std::ostringstream text;
            text << graph6_encode(g) << '\n';
            if (kind == rainbow_kind::edge)
                write_edge_coloring(text, g, w->edges());
            else
                write_vertex_coloring(text, w->vertices());
            emit(o, text.str());
        }
        return ok;
    }

    int search(const options& o) {
        search_options so;
        so.jobs = o.jobs;
        so.allow_large = o.cap_override;
        so.progress = [this](int m, std::uint64_t seen) {
            err_ << "searched m = " << m << " (" << seen << " graphs)\n";
        };
        search_report r;
        if (o.target == "e2")
            r = compute_e2(o.n, so);
        else if (o.target == "eprime")
            r = compute_e_prime(o.n, o.d, so);
        else
            throw invalid_input("search target must be e2 or eprime");
        err_ << "elapsed " << r.elapsed.count() << " ms\n";
        std::ostringstream body;
        if (o.format == "g6") {
            for (const auto& w : r.witnesses) body << w.bytes << '\n';
        } else if (o.format == "csv") {
            body << "n,target,d,value,witnesses,graphs_examined\n";
            body << r.n << ',' << to_string(r.target) << ',' << r.d << ','
                 << (r.value ? std::to_string(*r.value) : std::string("NA")) << ',' << r.witnesses.size() << ','
                 << r.graphs_examined << '\n';
        } else {
            body << to_json(r).dump(2) << '\n';
        }
        emit(o, body.str());
        return r.value ? ok : negative;
    }

    int bounds(const options& o) {
        std::vector<std::int64_t> ns;
        for (const auto& v : o.values) ns.push_back(parse_count(v));
        if (!o.range.empty()) {
            if (o.range.size() != 2) throw invalid_input("--range takes two values");
            if (o.mul < 2) throw invalid_input("--mul must be at least 2");
            const std::int64_t lo = parse_count(o.range[0]);
            const std::int64_t hi = parse_count(o.range[1]);
            for (std::int64_t n = lo; n <= hi; n *= o.mul) {
                ns.push_back(n);
                if (n > hi / o.mul) break;
            }
        }
        if (ns.empty()) throw invalid_input("bounds: no values given");
        auto rows = ratio_table(ns);
        std::ostringstream csv;
        write_bounds_csv(csv, rows);
        emit(o, csv.str());
        if (std::all_of(ns.begin(), ns.end(), [](std::int64_t n) { return n >= kLemma2iiThreshold; }))
            err_ << "sandwich_check: " << (sandwich_check(ns) ? "true" : "false") << '\n';
        return ok;
    }

    int construct(const options& o) {
        graph g;
        std::variant<edge_coloring, vertex_coloring> coloring;
        nlohmann::ordered_json meta;
        if (o.family == "lemma1") {
            auto f = lemma1_family(o.n);
            g = f.g;
            coloring = f.coloring;
            meta = {{"family", "lemma1"}, {"n", f.n}, {"k", f.k}, {"edge_count", f.edge_count},
                    {"upper_bound", lemma1_upper(f.n)}};
        } else if (o.family == "code") {
            g = complete_bipartite(o.s, o.t);
            coloring = bipartite_code_coloring(o.s, o.t);
            meta = {{"family", "code"}, {"s", o.s}, {"t", o.t}};
        } else if (o.family == "rvc-tree") {
            auto f = minimal_rvc_tree(o.n, o.d);
            g = f.tree;
            coloring = f.coloring;
            meta = {{"family", "rvc-tree"}, {"n", f.n}, {"d", f.d}};
        } else if (o.family == "tree-coloring") {
            g = parse_graph_spec(o.graph_spec);
            coloring = tree_rvc_coloring(g);
            meta = {{"family", "tree-coloring"}};
        } else {
            throw invalid_input("unknown construction '" + o.family + "'");
        }

        std::ostringstream body;
        if (o.format == "g6") {
            body << graph6_encode(g) << '\n';
        } else if (o.format == "json") {
            rainbow_witness w;
            if (auto* ec = std::get_if<edge_coloring>(&coloring))
                w = {rainbow_kind::edge, ec->palette_size, *ec};
            else
                w = {rainbow_kind::vertex, std::get<vertex_coloring>(coloring).palette_size, coloring};
            auto j = to_json(g, w);
            j["construction"] = meta;
            body << j.dump(2) << '\n';
        } else {
            body << graph6_encode(g) << '\n';
            if (auto* ec = std::get_if<edge_coloring>(&coloring))
                write_edge_coloring(body, g, *ec);
            else
                write_vertex_coloring(body, std::get<vertex_coloring>(coloring));
        }
        emit(o, body.str());
        return ok;
    }

    int verify(const options& o) {
        graph g;
        std::variant<edge_coloring, vertex_coloring> coloring;
        if (!o.certificate_file.empty()) {
            std::ifstream in(o.certificate_file);
            if (!in) throw invalid_input("cannot open certificate '" + o.certificate_file + "'");
            std::string first;
            std::getline(in, first);
            g = graph6_decode(first);
            coloring = read_any_coloring(in, g);
        } else {
            if (o.graph_spec.empty() || o.coloring_file.empty())
                throw invalid_input("verify needs <graph> <coloring-file> or --certificate");
            g = parse_graph_spec(o.graph_spec);
            std::ifstream in(o.coloring_file);
            if (!in) throw invalid_input("cannot open coloring '" + o.coloring_file + "'");
            coloring = read_any_coloring(in, g);
        }
        bool valid = false;
        if (auto* ec = std::get_if<edge_coloring>(&coloring))
            valid = verify_rc_coloring(g, *ec);
        else
            valid = verify_rvc_coloring(g, std::get<vertex_coloring>(coloring));
        emit(o, valid ? "true\n" : "false\n");
        return valid ? ok : negative;
    }

private:
    void emit(const options& o, const std::string& payload) {
        if (o.out_file.empty()) {
            out_ << payload;
            return;
        }
        std::ofstream file(o.out_file);
        if (!file) throw invalid_input("cannot write '" + o.out_file + "'");
        file << payload;
    }

    std::ostream& out_;
    std::ostream& err_;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    options o;
    CLI::App app{"Exact rainbow connection workbench"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "g6", "text"}));
    app.add_option("--out", o.out_file, "Write the primary payload to FILE");
    app.add_option("--jobs", o.jobs, "Worker threads for extremal search")->check(CLI::PositiveNumber);
    app.add_flag("--cap-override", o.cap_override, "Allow extremal search above n = 7");

    auto* rc = app.add_subcommand("rc", "Rainbow connection number (or rc <= k with --colors)");
    rc->add_option("graph", o.graph_spec, "graph6, edge-list file, or family (Kst:2,3, Pn:5, ...)")->required();
    rc->add_option("--colors,-k", o.colors, "Decide rc <= k instead of computing rc");

    auto* rvc = app.add_subcommand("rvc", "Rainbow vertex connection number (or rvc <= k)");
    rvc->add_option("graph", o.graph_spec)->required();
    rvc->add_option("--colors,-k", o.colors);

    auto* search = app.add_subcommand("search", "Exact e2(n) or e'_d(n) by exhaustive search");
    search->add_option("target", o.target, "e2 | eprime")->required()->check(CLI::IsMember({"e2", "eprime"}));
    search->add_option("--n,-n", o.n)->required();
    search->add_option("--d,-d", o.d, "Target rvc for eprime");

    auto* bounds = app.add_subcommand("bounds", "Bound table as CSV");
    bounds->add_option("values", o.values, "Orders such as 1000, 2^17, 10^6");
    bounds->add_option("--range", o.range, "LO HI")->expected(2);
    bounds->add_option("--mul", o.mul, "Geometric step for --range");

    auto* construct = app.add_subcommand("construct", "Extremal constructions with certificates");
    construct->add_option("family", o.family, "lemma1 | code | rvc-tree | tree-coloring")->required();
    construct->add_option("--n,-n", o.n);
    construct->add_option("--d,-d", o.d);
    construct->add_option("--s", o.s);
    construct->add_option("--t", o.t);
    construct->add_option("--graph", o.graph_spec, "Tree for tree-coloring");

    auto* verify = app.add_subcommand("verify", "Check a coloring certificate");
    verify->add_option("graph", o.graph_spec);
    verify->add_option("coloring", o.coloring_file);
    verify->add_option("--certificate", o.certificate_file, "graph6 line followed by a coloring");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    }

    const bool format_given = app.count("--format") > 0;
    runner r(out, err);
    try {
        if (rc->parsed()) {
            if (!format_given) o.format = "json";
            return r.rainbow_number(o, rainbow_kind::edge);
        }
        if (rvc->parsed()) {
            if (!format_given) o.format = "json";
            return r.rainbow_number(o, rainbow_kind::vertex);
        }
        if (search->parsed()) return r.search(o);
        if (bounds->parsed()) return r.bounds(o);
        if (construct->parsed()) {
            if (!format_given) o.format = "text";
            return r.construct(o);
        }
        if (verify->parsed()) return r.verify(o);
    } catch (const capacity_error& e) {
        err << "capacity: " << e.what() << '\n';
        return over_capacity;
    } catch (const infeasible& e) {
        err << "infeasible: " << e.what() << '\n';
        return negative;
    } catch (const invalid_input& e) {
        err << "invalid input: " << e.what() << '\n';
        return bad_input;
    }
    return bad_input;
}

} // namespace rainbow::cli
