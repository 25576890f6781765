#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "subneg/cli.hpp"

using namespace subneg;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("prove subcommand and exit codes") {
    CliRun r = run({"prove", "--logic", "copc", "~~~p -> ~p"});
    CHECK(r.code == 0);
    CHECK(r.out == "PROVABLE\n");

    r = run({"prove", "--logic", "n", "=> ~p"});
    CHECK(r.code == 1);
    CHECK(r.out == "UNPROVABLE\n");

    r = run({"prove", "--logic", "copc", "--naive", "--fuel", "25", "~~~p => ~~p"});
    CHECK(r.code == 2);
    CHECK(r.out == "EXHAUSTED\n");

    r = run({"prove", "--logic", "copc", "--stats", "--json", "p & q => q"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "PROVABLE");
    CHECK(j["stats"]["nodes_expanded"].get<int>() > 0);
}

TEST_CASE("usage and parse errors") {
    CHECK(run({"prove", "p -> p"}).code == 64);           // missing --logic
    CHECK(run({"prove", "--logic", "zz", "p"}).code == 64);
    CHECK(run({"prove", "--logic", "n", "p ->"}).code == 65);
    CHECK(run({"frobnicate"}).code == 64);
    CHECK(run({"simplify", "--logic", "n", "~~~~p"}).code == 64);
    CHECK(run({"interpolate", "--logic", "n", "p => p"}).code == 65);  // missing ';'
    CHECK(run({"prove", "--logic", "n", "--fuel", "5", "p"}).code == 64);  // fuel needs naive
}

TEST_CASE("proof files written by prove re-validate under check") {
    std::string path = "cli_test_proof.json";
    for (const char* mode : {"hist", "naive"}) {
        std::vector<std::string> args = {"prove", "--logic", "copc", "--proof", path,
                                         "(p -> q) -> (~q -> ~p)"};
        if (std::string(mode) == "naive") args.insert(args.begin() + 1, "--naive");
        CliRun r = run(args);
        REQUIRE(r.code == 0);
        CliRun c = run({"check", "--logic", "copc", path});
        CHECK(c.code == 0);
        CHECK(c.out == "OK\n");
        CliRun wrong = run({"check", "--logic", "nef", path});
        CHECK(wrong.code == 1);
    }
    std::remove(path.c_str());
}

TEST_CASE("check rejects garbage files") {
    std::string path = "cli_test_garbage.json";
    std::ofstream(path) << "{\"flavor\":\"plain\"}";
    CHECK(run({"check", "--logic", "n", path}).code == 65);
    std::remove(path.c_str());
    CHECK(run({"check", "--logic", "n", "no_such_file.json"}).code == 64);
}

TEST_CASE("interpolate subcommand") {
    CliRun r = run({"interpolate", "--logic", "copc", "p & q ; q -> r => r"});
    CHECK(r.code == 0);
    CHECK(r.out == "interpolant: q\nleft: PROVABLE\nright: PROVABLE\n");

    r = run({"interpolate", "--logic", "n", "p ; => q"});
    CHECK(r.code == 1);
    CHECK(r.out == "NOT_PROVABLE\n");
}

TEST_CASE("translate and simplify subcommands") {
    CliRun r = run({"translate", "~p"});
    CHECK(r.code == 0);
    CHECK(r.out == "p -> ~p\n");

    r = run({"simplify", "--logic", "copc", "~~~~p"});
    CHECK(r.code == 0);
    CHECK(r.out == "~~p\n");

    r = run({"simplify", "--logic", "mpc", "~~~~~p -> q"});
    CHECK(r.out == "~~~p -> q\n");
}

TEST_CASE("countermodel subcommand") {
    CliRun r = run({"countermodel", "--logic", "n", "--max-size", "4",
                    "=> (p & ~p) -> ~q"});
    CHECK(r.code == 0);
    CHECK(r.out.find("size:") != std::string::npos);
    CHECK(r.out.find("valuation:") != std::string::npos);

    r = run({"countermodel", "--logic", "mpc", "--max-size", "3", "=> p -> p"});
    CHECK(r.code == 1);
    CHECK(r.out == "NONE\n");

    r = run({"countermodel", "--logic", "n", "--max-size", "3", "--json",
             "=> (p -> q) -> (~q -> ~p)"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["size"].get<int>() >= 2);
}
