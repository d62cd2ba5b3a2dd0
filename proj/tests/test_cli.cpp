#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "rainbow/canonical.hpp"
#include "rainbow/cli.hpp"
#include "rainbow/graph6.hpp"

using namespace rainbow;
using nlohmann::json;

namespace {

struct result {
    int status;
    std::string out;
    std::string err;
};

result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "rainbow_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

const std::filesystem::path kData{RAINBOW_TEST_DATA};

} // namespace

TEST_CASE("cli rc") {
    auto a = run({"rc", "Kst:2,3"});
    CHECK(a.status == 0);
    CHECK(json::parse(a.out)["value"] == 2);

    auto b = run({"rc", "Pn:3"});
    CHECK(b.status == 0);
    auto jb = json::parse(b.out);
    CHECK(jb["value"] == 2);
    CHECK(jb["graph"] == "Bg");

    auto c = run({"rc", "Kst:2,7", "--colors", "2"});
    CHECK(c.status == 1);
    CHECK(json::parse(c.out)["status"] == "exhausted");

    auto d = run({"rc", "Kst:2,7"});
    CHECK(d.status == 0);
    CHECK(json::parse(d.out)["value"] == 3);

    CHECK(run({"rc", "Kn:1"}).status == 2);
    CHECK(run({"rc", "tree:0-1,2-3"}).status == 2);
}

TEST_CASE("cli rvc") {
    auto a = run({"rvc", "Pn:5"});
    CHECK(a.status == 0);
    CHECK(json::parse(a.out)["value"] == 3);
    auto k = run({"rvc", "Kn:4"});
    CHECK(k.status == 0);
    CHECK(json::parse(k.out)["value"] == 0);
    CHECK(run({"rvc", "Pn:5", "-k", "2"}).status == 1);
}

TEST_CASE("cli search") {
    auto a = run({"search", "e2", "-n", "4"});
    CHECK(a.status == 0);
    auto ja = json::parse(a.out);
    CHECK(ja["value"] == 4);
    const std::string c4 = canonical_key(cycle_graph(4)).bytes;
    bool has_c4 = false;
    for (const auto& w : ja["witnesses"]) has_c4 = has_c4 || w == c4;
    CHECK(has_c4);

    auto b = run({"search", "eprime", "-n", "6", "-d", "2"});
    CHECK(b.status == 0);
    CHECK(json::parse(b.out)["value"] == 5);

    auto c = run({"search", "e2", "-n", "2"});
    CHECK(c.status == 1);
    CHECK(json::parse(c.out)["status"] == "infeasible");

    CHECK(run({"search", "e2", "-n", "8"}).status == 3);
    CHECK(json::parse(run({"search", "eprime", "-n", "6"}).out)["d"] == 2);
    CHECK(run({"search", "eprime", "-n", "6", "-d", "1"}).status == 2);
    CHECK(run({"search", "bogus", "-n", "6"}).status == 2);
}

TEST_CASE("cli search output matches the golden reports byte for byte") {
    for (int n = 3; n <= 7; ++n) {
        auto path = kData / ("e2_n" + std::to_string(n) + ".json");
        REQUIRE(std::filesystem::exists(path));
        for (const char* jobs : {"1", "3"}) {
            auto r = run({"--jobs", jobs, "search", "e2", "-n", std::to_string(n)});
            CHECK(r.status == 0);
            CHECK(r.out == slurp(path));
        }
    }
    for (auto [n, d] : {std::pair{5, 3}, std::pair{6, 2}, std::pair{7, 3}}) {
        auto path = kData / ("eprime_n" + std::to_string(n) + "_d" + std::to_string(d) + ".json");
        REQUIRE(std::filesystem::exists(path));
        auto r = run({"search", "eprime", "-n", std::to_string(n), "-d", std::to_string(d)});
        CHECK(r.out == slurp(path));
    }
}

TEST_CASE("golden e2 witnesses are independently rainbow 2-connected") {
    for (int n = 3; n <= 7; ++n) {
        auto j = json::parse(slurp(kData / ("e2_n" + std::to_string(n) + ".json")));
        for (const auto& w : j["witnesses"]) {
            auto g = graph6_decode(w.get<std::string>());
            CHECK(g.size() == j["value"].get<int>());
            CHECK(oracle::naive_rc(g) == 2);
        }
    }
}

TEST_CASE("cli bounds") {
    auto a = run({"bounds", "--range", "2^17", "2^20", "--mul", "2"});
    CHECK(a.status == 0);
    std::istringstream in(a.out);
    std::string line;
    int rows = -1;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 4);
    CHECK(a.err.find("sandwich") != std::string::npos);

    auto b = run({"bounds", "1024", "10^6"});
    CHECK(b.status == 0);
    CHECK(b.out.find("1024,10159,") != std::string::npos);
    CHECK(b.out.find("1000000,") != std::string::npos);

    CHECK(run({"bounds", "2"}).status == 2);
    CHECK(run({"bounds", "x"}).status == 2);
}

TEST_CASE("cli construct then verify") {
    const std::vector<std::vector<std::string>> cases{
        {"construct", "lemma1", "-n", "10"},
        {"construct", "lemma1", "-n", "37"},
        {"construct", "code", "--s", "3", "--t", "5"},
        {"construct", "rvc-tree", "-n", "9", "-d", "4"},
        {"construct", "tree-coloring", "--graph", "tree:0-1,1-2,2-3,2-4,4-5"},
    };
    int i = 0;
    for (const auto& args : cases) {
        auto c = run(args);
        REQUIRE(c.status == 0);
        auto cert = scratch("cert" + std::to_string(i++) + ".txt");
        std::ofstream(cert) << c.out;
        auto v = run({"verify", "--certificate", cert.string()});
        CHECK(v.status == 0);
    }

    CHECK(run({"construct", "code", "--s", "2", "--t", "5"}).status == 2);
    CHECK(run({"construct", "lemma1", "-n", "2"}).status != 0);
}

TEST_CASE("cli verify rejects bad certificates") {
    auto bad = scratch("same_color.txt");
    std::ofstream(bad) << "2\n0 1 0\n1 2 0\n";
    auto r = run({"verify", "Pn:3", bad.string()});
    CHECK(r.status == 1);

    auto good = scratch("p3_good.txt");
    std::ofstream(good) << "2\n0 1 0\n1 2 1\n";
    CHECK(run({"verify", "Pn:3", good.string()}).status == 0);

    auto vert = scratch("p4_vertices.txt");
    std::ofstream(vert) << "2\n0 0\n1 0\n2 1\n3 0\n";
    CHECK(run({"verify", "Pn:4", vert.string()}).status == 0);

    auto garbage = scratch("garbage.txt");
    std::ofstream(garbage) << "two\n0 1 x\n";
    CHECK(run({"verify", "Pn:3", garbage.string()}).status == 2);
    CHECK(run({"verify", "Pn:3", scratch("missing.txt").string()}).status == 2);
}

TEST_CASE("cli formats and output file") {
    auto g6 = run({"--format", "g6", "search", "e2", "-n", "5"});
    CHECK(g6.status == 0);
    CHECK(g6.out == "DB{\nDFw\nDK{\nDLs\n");

    auto csv = run({"--format", "csv", "search", "e2", "-n", "5"});
    CHECK(csv.out == "n,target,d,value,witnesses,graphs_examined\n5,e2,2,6,4,13\n");

    auto out = scratch("search.json");
    std::filesystem::remove(out);
    auto r = run({"--out", out.string(), "search", "e2", "-n", "4"});
    CHECK(r.status == 0);
    CHECK(slurp(out) == slurp(kData / "e2_n4.json"));
    CHECK(run({"--format", "yaml", "rc", "Pn:3"}).status == 2);
    CHECK(run({}).status == 2);
}
