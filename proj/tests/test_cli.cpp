#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "conekit/cli.hpp"
#include "conekit/table.hpp"

using namespace conekit;

namespace {
struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = parse_and_dispatch(args, out, err);
    return {code, out.str(), err.str()};
}
} // namespace

TEST_CASE("futaki beta table contains the critical root") {
    const auto r = run({"futaki", "pair", "--fixture", "x2.toml", "--beta-table"});
    CHECK(r.code == 0);
    CHECK(r.out.find("21/25,0,critical") != std::string::npos);
    CHECK(r.out.rfind("beta,futaki,note", 0) == 0);
    const auto c = run({"futaki", "critical", "--fixture", "x1"});
    CHECK(c.out.find("6/7") != std::string::npos);
    const auto p = run({"futaki", "pair", "--fixture", std::string(CONEKIT_DATA_DIR) + "/fixtures/x2.json"});
    CHECK(p.code == 0);
    CHECK(p.out.find("-2/3,7/2,19/3,7,17/2,-2/3,25/6,21/25") != std::string::npos);
    CHECK(run({"futaki", "pair", "--fixture", "/nonexistent.json"}).code != 0);
}

TEST_CASE("exit codes") {
    const auto b = run({"green", "eval", "--beta", "1.5"});
    CHECK(b.code == 2);
    CHECK(b.err.find("(0, 1]") != std::string::npos);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"green", "eval", "--tol", "abc"}).code == 2);
    CHECK(run({"green", "eval", "--x", "1,0,0", "--y", "1,0,0"}).code == 2);
    CHECK(run({"green", "expand", "--x", "0.8,0,0"}).code == 2);
    CHECK(run({"green", "probe", "--probe", "schauder", "--alpha", "0.7"}).code == 2);
    CHECK(run({"bessel", "--kind", "k", "--x", "0"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify all passes") {
    const auto r = run({"verify", "all"});
    CHECK(r.code == 0);
    CHECK(r.out.find(",0,") == std::string::npos);
    CHECK(run({"verify", "toric_futaki"}).code == 0);
    CHECK(run({"verify", "nonsense"}).code == 2);
}

TEST_CASE("green and gh commands") {
    const auto g = run({"green", "eval", "--beta", "1", "--x", "0.5,0,0", "--y", "1,0,0", "--format", "json"});
    REQUIRE(g.code == 0);
    const auto j = nlohmann::json::parse(g.out);
    CHECK(j["rows"][0]["value"].get<double>() == doctest::Approx(1 / (4 * M_PI * 0.5)).epsilon(1e-8));
    const auto sweep = run({"green", "eval", "--r-grid", "0.1:0.5:5"});
    CHECK(sweep.code == 0);
    CHECK(std::count(sweep.out.begin(), sweep.out.end(), '\n') == 6);
    CHECK(run({"green", "modal", "--k", "1"}).code == 0);
    CHECK(run({"green", "expand", "--x", "0.2,1,0.1"}).code == 0);
    CHECK(run({"green", "probe", "--probe", "kernel", "--x", "0.3,0.5,0.2"}).code == 0);
    CHECK(run({"gh", "curvature", "--field", "two-pole"}).code == 0);
    CHECK(run({"gh", "growth", "--beta", "0.5"}).code == 0);
    CHECK(run({"gh", "holo", "--field", "flat", "--x", "0.3,0.3,0.2"}).code == 0);
    CHECK(run({"bessel", "--kind", "j", "--nu", "0.5", "--x-grid", "0:10:11"}).code == 0);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> a{"green", "eval", "--r-grid", "0.1:0.9:4", "--format", "json"};
    CHECK(run(a).out == run(a).out);
    const auto path = std::filesystem::temp_directory_path() / "conekit_cli_test.csv";
    auto b = std::vector<std::string>{"bessel", "--nu", "2", "--x", "1,2,3", "--output", path.string()};
    REQUIRE(run(b).code == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == run({"bessel", "--nu", "2", "--x", "1,2,3"}).out);
    std::filesystem::remove(path);
    CHECK(run({"bessel", "--x", "1", "--output", "/nonexistent/dir/file.csv"}).code == 1);
}

TEST_CASE("table emission") {
    Table t;
    t.add_column("q", ColumnType::rational);
    t.add_column("x", ColumnType::real);
    t.add_column("name", ColumnType::text);
    CHECK(render_table(t, TableFormat::csv) == "q,x,name\n");
    t.add_row({Rational(7, 2), 0.1, std::string("a,b")});
    const std::string csv = render_table(t, TableFormat::csv);
    CHECK(csv == "q,x,name\n7/2,0.10000000000000001,\"a,b\"\n");
    CHECK_THROWS(t.add_row({0.5, 0.1, std::string("x")}));
    CHECK_THROWS(t.add_row({Rational(1)}));
    const auto j = nlohmann::json::parse(render_table(t, TableFormat::json));
    CHECK(j["rows"][0]["q"] == "7/2");
    CHECK(j["types"][0] == "rational");
    // floats round-trip exactly
    for (double v : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-300, std::numeric_limits<double>::denorm_min()}) {
        const std::string s = format_real(v);
        double back = 0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        CHECK(back == v);
    }
    CHECK_THROWS(parse_format("xml"));
}
