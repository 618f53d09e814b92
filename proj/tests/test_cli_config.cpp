#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "qsu2/cli.hpp"

using namespace qsu2;

namespace {

int run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"qsu2"};
    argv.insert(argv.end(), args.begin(), args.end());
    return cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("grid parsing") {
    auto g = cli::parse_grid("-1:1:11");
    CHECK(g.lo == -1.0);
    CHECK(g.hi == 1.0);
    CHECK(g.n == 11);
    CHECK_THROWS_AS(cli::parse_grid("1:2"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_grid("a:b:c"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_grid("0:1:0"), std::invalid_argument);
}

TEST_CASE("q spec parsing") {
    QParam real = cli::parse_q_spec("real:2.0");
    CHECK(real.is_real());
    CHECK(real.real_q() == doctest::Approx(2.0));
    QParam circle = cli::parse_q_spec("circle:0.3");
    CHECK(!circle.is_real());
    CHECK(circle.tau() == doctest::Approx(0.3));
    CHECK_THROWS_AS(cli::parse_q_spec("weird:1"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_q_spec("real"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_q_spec("real:x"), std::invalid_argument);
    // genericity violations surface as domain errors
    CHECK_THROWS_AS(cli::parse_q_spec("circle:1.5707963267948966"), std::domain_error);
}

TEST_CASE("exit codes") {
    // parse errors
    CHECK(run_cli({"eval", "--fn", "Bogus", "--q", "real:2", "--eta", "1"}) == cli::kExitParse);
    CHECK(run_cli({"eval", "--fn", "Q", "--eta", "1"}) == cli::kExitParse); // missing --q
    CHECK(run_cli({"verify", "--suite", "nonsense"}) == cli::kExitParse);
    CHECK(run_cli({"bogus-command"}) == cli::kExitParse);
    // numeric-domain errors
    CHECK(run_cli({"eval", "--fn", "L", "--q", "real:2", "--eta", "1"}) == cli::kExitNumeric);
    CHECK(run_cli({"eval", "--fn", "P", "--J", "1", "--M", "0", "--N", "0", "--q", "real:2",
                   "--xi", "1.5"}) == cli::kExitNumeric);
    // I/O errors
    CHECK(run_cli({"table", "--fn", "Q", "--J", "1", "--q", "real:2", "--grid", "0:1:3", "--out",
                   "/nonexistent-dir-qsu2/x.csv"}) == cli::kExitIo);
    // success
    CHECK(run_cli({"eval", "--fn", "Q", "--J", "1", "--q", "real:2", "--eta", "1"}) ==
          cli::kExitOk);
}

TEST_CASE("tables are deterministic and carry the schema") {
    const char* path_a = "cli_table_a.csv";
    const char* path_b = "cli_table_b.csv";
    for (const char* p : {path_a, path_b}) {
        CHECK(run_cli({"table", "--fn", "P", "--J", "1", "--M", "0", "--N", "0", "--q", "real:2",
                       "--grid", "-0.9:0.9:11", "--out", p}) == cli::kExitOk);
    }
    std::string a = slurp(path_a);
    std::string b = slurp(path_b);
    CHECK(!a.empty());
    CHECK(a == b); // byte identical
    // header + 11 rows
    CHECK(std::count(a.begin(), a.end(), '\n') == 12);
    CHECK(a.rfind("J,M,N,q_regime,tau,xi,re,im\n", 0) == 0);
    std::remove(path_a);
    std::remove(path_b);

    const char* path_json = "cli_table.json";
    CHECK(run_cli({"table", "--fn", "Q", "--J", "1", "--q", "real:2", "--grid", "0:4:5",
                   "--format", "json", "--out", path_json}) == cli::kExitOk);
    auto doc = nlohmann::json::parse(slurp(path_json));
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["rows"].size() == 5);
    CHECK(doc["rows"][0]["q_regime"] == "real");
    std::remove(path_json);
}

TEST_CASE("verify reports are machine readable") {
    const char* path = "cli_verify.json";
    int code = run_cli({"verify", "--suite", "qbeta", "--out", path});
    CHECK(code == cli::kExitOk);
    auto doc = nlohmann::json::parse(slurp(path));
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["command"] == "verify");
    CHECK(doc["all_pass"] == true);
    CHECK(doc["config"]["suite"] == "qbeta");
    CHECK(doc["checks"].size() >= 3);
    for (const auto& c : doc["checks"]) {
        CHECK(c.contains("identity"));
        CHECK(c.contains("residual"));
        CHECK(c.contains("tolerance"));
        CHECK(c.contains("pass"));
    }
    std::remove(path);
}

TEST_CASE("limits command compares against the classical functions") {
    const char* path = "cli_limits.csv";
    CHECK(run_cli({"limits", "--J", "1", "--M", "0", "--N", "0", "--epsilon", "1e-4", "--grid",
                   "-0.9:0.9:7", "--out", path}) == cli::kExitOk);
    std::string text = slurp(path);
    CHECK(std::count(text.begin(), text.end(), '\n') == 8);
    // last column is the absolute difference; all rows small
    std::istringstream is(text);
    std::string line;
    std::getline(is, line); // header
    while (std::getline(is, line)) {
        auto pos = line.rfind(',');
        double diff = std::stod(line.substr(pos + 1));
        CHECK(diff < 5e-3);
    }
    std::remove(path);
}
