#include "rainbow/report.hpp"

#include <algorithm>

#include "rainbow/errors.hpp"
#include "rainbow/graph6.hpp"

namespace rainbow {

nlohmann::ordered_json to_json(const search_report& r) {
    nlohmann::ordered_json j;
    j["schema"] = kSearchSchema;
    j["order"] = r.n;
    j["target"] = to_string(r.target);
    if (r.target == search_target::e_prime) j["d"] = r.d;
    j["status"] = r.value ? "found" : "infeasible";
    j["value"] = r.value ? nlohmann::ordered_json(*r.value) : nlohmann::ordered_json(nullptr);
    auto& w = j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& cf : r.witnesses) w.push_back(cf.bytes);
    j["graphs_examined"] = r.graphs_examined;
    return j;
}

search_report search_report_from_json(const nlohmann::json& j) {
    if (j.value("schema", "") != kSearchSchema) throw invalid_input("search report: unknown schema");
    search_report r;
    r.n = j.at("order").get<int>();
    const auto target = j.at("target").get<std::string>();
    if (target == "e2") {
        r.target = search_target::e2;
    } else if (target == "eprime") {
        r.target = search_target::e_prime;
        r.d = j.at("d").get<int>();
    } else {
        throw invalid_input("search report: unknown target '" + target + "'");
    }
    if (!j.at("value").is_null()) r.value = j.at("value").get<int>();
    for (const auto& w : j.at("witnesses")) r.witnesses.push_back({w.get<std::string>()});
    r.graphs_examined = j.at("graphs_examined").get<std::uint64_t>();
    return r;
}

bool recheck_search_report(const search_report& r) {
    if (!r.value) return r.witnesses.empty();
    for (const auto& cf : r.witnesses) {
        graph g = graph6_decode(cf.bytes);
        if (g.order() != r.n || g.size() != *r.value || !is_connected(g)) return false;
        if (r.target == search_target::e2) {
            if (rc_exact(g).value != 2) return false;
        } else if (rvc_exact(g).value != r.d) {
            return false;
        }
    }
    return std::is_sorted(r.witnesses.begin(), r.witnesses.end());
}

nlohmann::ordered_json to_json(const graph& g, const rainbow_witness& w) {
    nlohmann::ordered_json j;
    j["schema"] = kWitnessSchema;
    j["graph"] = graph6_encode(g);
    j["kind"] = w.kind == rainbow_kind::edge ? "rc" : "rvc";
    j["status"] = "found";
    j["value"] = w.value;
    nlohmann::ordered_json col;
    if (w.kind == rainbow_kind::edge) {
        col["palette"] = w.edges().palette_size;
        auto& list = col["edges"] = nlohmann::ordered_json::array();
        auto edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i)
            list.push_back({edges[i].u, edges[i].v, w.edges().colors[i]});
    } else {
        col["palette"] = w.vertices().palette_size;
        auto& list = col["vertices"] = nlohmann::ordered_json::array();
        if (w.vertices().palette_size > 0)
            for (std::size_t v = 0; v < w.vertices().colors.size(); ++v)
                list.push_back({static_cast<int>(v), w.vertices().colors[v]});
    }
    j["coloring"] = std::move(col);
    return j;
}

nlohmann::ordered_json to_json(const claim1_report& r) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["S"] = r.S;
    j["T"] = r.T;
    j["a"] = r.a;
    j["e_ST"] = r.e_st;
    j["max_multiplicity"] = r.max_multiplicity;
    j["bound"] = r.bound;
    j["total_completions"] = r.total_completions;
    j["distinct_completions"] = r.materialized ? nlohmann::ordered_json(r.multiplicities.size())
                                               : nlohmann::ordered_json(nullptr);
    j["vacuous"] = r.vacuous;
    j["holds"] = r.holds;
    return j;
}

} // namespace rainbow
