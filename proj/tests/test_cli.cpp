#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "tuttex/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = tuttex::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data_file(const std::string& name) {
    return std::string(TUTTEX_DATA_DIR) + "/" + name;
}

std::string temp_graph_file(const std::string& contents) {
    static int counter = 0;
    std::string path = "cli_test_tmp_" + std::to_string(counter++) + ".g";
    std::ofstream(path) << contents;
    return path;
}

} // namespace

TEST_CASE("tutte subcommand prints the polynomial and agreement") {
    auto r = run_cli({"tutte", data_file("k4.g")});
    CHECK(r.code == 0);
    CHECK(r.out.find("2*x + 3*x^2 + x^3 + 2*y + 4*x*y + 3*y^2 + y^3") != std::string::npos);
    CHECK(r.out.find("methods agree: ok") != std::string::npos);
}

TEST_CASE("verify passes on the square") {
    auto r = run_cli({"verify", data_file("c4.g")});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify rejects graphs outside the hypotheses") {
    auto r = run_cli({"verify", data_file("p3.g")});
    CHECK(r.code == 2);
    CHECK(r.err.find("precondition") != std::string::npos);
}

TEST_CASE("json output is deterministic") {
    auto a = run_cli({"--json", "chromatic", data_file("k4.g")});
    auto b = run_cli({"--json", "chromatic", data_file("k4.g")});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"c\"") != std::string::npos);
}

TEST_CASE("parse errors report the line and exit 2") {
    auto path = temp_graph_file("v 2\ne 0 9\n");
    auto r = run_cli({"tutte", path});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({"unknown-command"}).code == 2);
    CHECK(run_cli({"tutte"}).code == 2); // missing file
    CHECK(run_cli({}).code == 2);
}

TEST_CASE("dual needs rotations") {
    auto r = run_cli({"dual", data_file("c3.g")});
    CHECK(r.code == 2);
    CHECK(r.err.find("rotation") != std::string::npos);
}

TEST_CASE("dual runs on embedded inputs") {
    for (const char* name : {"c4.g", "k4.g", "theta222.g", "cube.g", "d2.g"}) {
        auto r = run_cli({"dual", data_file(name)});
        CHECK(r.code == 0);
        CHECK(r.out.find("MISMATCH") == std::string::npos);
    }
}

TEST_CASE("structure, coeffs, jones, chromatic, flow smoke runs") {
    for (const char* cmd : {"structure", "coeffs", "jones", "chromatic", "flow"}) {
        auto r = run_cli({cmd, data_file("theta222.g")});
        CHECK(r.code == 0);
    }
    auto s = run_cli({"structure", data_file("k4.g")});
    CHECK(s.out.find("theta classes = 4, infinity classes = 3") != std::string::npos);
}

TEST_CASE("chromatic of a graph with a loop is zero") {
    auto path = temp_graph_file("v 2\ne 0 1\ne 1 1\n");
    auto r = run_cli({"chromatic", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("P(G) = 0") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("exhaustive fuzz covers the tiny corpus") {
    auto r = run_cli({"fuzz", "--max-n", "3", "--max-m", "4", "--exhaustive"});
    CHECK(r.code == 0);
    CHECK(r.out.find("checked 6 graphs: all ok") != std::string::npos);
}

TEST_CASE("random fuzz is deterministic") {
    std::vector<std::string> args = {"fuzz", "--max-n", "4", "--max-m", "6",
                                     "--count", "8", "--seed", "5"};
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("checked 8 graphs") != std::string::npos);
}
