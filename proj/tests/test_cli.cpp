#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "rankmc/cli.hpp"

using namespace rankmc;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("analyze reports") {
    const auto g = run({"analyze", "--construct", "gabidulin:2^1:3:3:2"});
    REQUIRE(g.code == 0);
    const auto j = nlohmann::json::parse(g.out);
    CHECK(j["M"] == "14");
    CHECK(j["verdict"] == "attained-lower");
    CHECK(j["code"]["mrd"] == true);
    CHECK(j["weight_distribution"] == nlohmann::json::array({"1", "0", "49", "14"}));
    CHECK(g.out == slurp(std::filesystem::path(RANKMC_GOLDEN_DIR) / "analyze_gabidulin.json"));

    const auto p = run({"analyze", "--construct", "poly:2^1:3:lambda=auto:t=1,2"});
    REQUIRE(p.code == 0);
    CHECK(nlohmann::json::parse(p.out)["M"] == "28");
    CHECK(nlohmann::json::parse(p.out)["verdict"] == "attained-upper");
    CHECK(p.out == slurp(std::filesystem::path(RANKMC_GOLDEN_DIR) / "analyze_poly.json"));

    const auto r = run({"analyze", "--construct", "redei:2^1:3"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["M"] == "406");

    const auto l = run({"analyze", "--construct", "lifted:2^1:4:sub=2:ell=1:t=1,2"});
    REQUIRE(l.code == 0);
    CHECK(nlohmann::json::parse(l.out)["code"]["n"] == 5);

    const auto s = run({"analyze", "--construct", "simplex:2^1:2:2"});
    REQUIRE(s.code == 0);
    CHECK(nlohmann::json::parse(s.out)["M"] == "15");

    const auto t = run({"analyze", "--construct", "gabidulin:2^1:3:3:2", "--timing"});
    CHECK(nlohmann::json::parse(t.out).contains("timing_ms"));
    CHECK_FALSE(nlohmann::json::parse(g.out).contains("timing_ms"));
}

TEST_CASE("analyze from a matrix file matches the construction") {
    const auto spec = run({"analyze", "--construct", "gabidulin:2^1:3:3:2"});
    const auto j = nlohmann::json::parse(spec.out);
    const auto file = temp_file("rmc_matrix.txt", j["code"]["generator"].get<std::string>() + "\n");
    const auto m = run({"analyze", "--matrix", file.string(), "--field", "2^1:3"});
    REQUIRE(m.code == 0);
    auto jm = nlohmann::json::parse(m.out);
    CHECK(jm["weight_distribution"] == j["weight_distribution"]);
    CHECK(jm["bounds"] == j["bounds"]);

    const auto out = std::filesystem::temp_directory_path() / "rmc_report.json";
    CHECK(run({"analyze", "--construct", "gabidulin:2^1:3:3:2", "--json", out.string()}).code == 0);
    CHECK(slurp(out) == spec.out);
}

TEST_CASE("exit codes") {
    const auto bad = temp_file("rmc_bad.txt", "1,z;0\n");
    CHECK(run({"analyze", "--matrix", bad.string(), "--field", "2^1:3"}).code == 1);
    const auto junk = temp_file("rmc_junk.txt", "1,q\n");
    CHECK(run({"analyze", "--matrix", junk.string(), "--field", "2^1:3"}).code == 1);
    const auto dep = temp_file("rmc_dep.txt", "1,z;1,z\n");
    CHECK(run({"analyze", "--matrix", dep.string(), "--field", "2^1:3"}).code == 1);
    CHECK(run({"analyze", "--matrix", bad.string()}).code == 1);
    CHECK(run({"analyze", "--matrix", "/nonexistent/file", "--field", "2^1:3"}).code == 1);
    CHECK(run({"analyze", "--construct", "nope:2^1:3"}).code == 1);
    CHECK(run({"analyze", "--construct", "gabidulin:2^1:3:4:2"}).code == 1);
    CHECK(run({"analyze", "--construct", "poly:2^1:3:lambda=auto:t=1,3"}).code == 1);
    CHECK(run({"analyze"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"analyze", "--construct", "simplex:2^1:3:9", "--budget", "100"}).code == 2);
    CHECK(run({"scan", "--q", "2", "--m", "4", "--k", "3", "--n", "6", "--budget", "10"}).code == 2);
    CHECK(run({"verify", "nonsense"}).code == 1);
    CHECK(run({"scan", "--q", "6"}).code == 1);
    CHECK(run({"scan", "--m", "x"}).code == 1);
}

TEST_CASE("exhaustive scan of two-dimensional systems over F_4") {
    const auto s = run({"scan", "--q", "2", "--m", "2", "--k", "2", "--n", "2"});
    REQUIRE(s.code == 0);
    const auto rows = csv_rows(s.out);
    REQUIRE(rows.size() == 36);
    CHECK(s.out.substr(0, s.out.find('\n')) == "q,h,m,n,k,d,e,M,bound,lower,upper,verdict");
    int spanning = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == 12);
        if (rows[i][11] == "non-spanning") continue;
        ++spanning;
        const long M = std::stol(rows[i][7]), lo = std::stol(rows[i][9]), hi = std::stol(rows[i][10]);
        CHECK(lo <= M);
        CHECK(M <= hi);
        CHECK(M == 6);
    }
    CHECK(spanning == 30);
}

TEST_CASE("seeded scans are reproducible") {
    const std::vector<std::string> args = {"scan", "--q", "2", "--m", "2-3", "--k", "2-3", "--n", "3-4", "--sample", "3", "--seed", "7"};
    const auto a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == slurp(std::filesystem::path(RANKMC_GOLDEN_DIR) / "scan_seed7.csv"));

    const auto empty = run({"scan", "--q", "2", "--m", "3", "--k", "2", "--n", "3", "--sample", "0"});
    CHECK(empty.code == 0);
    CHECK(empty.out == "q,h,m,n,k,d,e,M,bound,lower,upper,verdict\n");
}

TEST_CASE("verify suites") {
    const auto c = run({"verify", "census"});
    CHECK(c.code == 0);
    CHECK(c.out.find("(24,42,7)") != std::string::npos);
    CHECK(run({"verify", "duality"}).code == 0);
    CHECK(run({"verify", "bounds"}).code == 0);
    CHECK(run({"verify", "constructions"}).code == 0);
}
