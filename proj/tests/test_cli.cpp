#include "chs/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = chs::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct BudgetGuard {
    explicit BudgetGuard(const char* value) { setenv("FORCING_BUDGET", value, 1); }
    ~BudgetGuard() { unsetenv("FORCING_BUDGET"); }
};

}  // namespace

TEST_CASE("poly") {
    auto r = run({"poly", "--spec", "3;1", "--method", "both"});
    CHECK(r.code == 0);
    CHECK(r.out == "4x\n");
    CHECK(run({"poly", "--spec", "1,1;1,1|1,1;1,1"}).out == "4x^2+x\n");
    CHECK(run({"poly", "--spec", "CHS(1,1;1,1|1,1;1,1)", "--method", "bruteforce"}).out == "4x^2+x\n");
    CHECK(run({"poly", "--spec", "2,2;1,1", "--format", "latex"}).out == "$F(G,x)=4x^{2}+2x$\n");
    const auto j = nlohmann::json::parse(run({"poly", "--spec", "2,2;1,1", "--format", "json"}).out);
    CHECK(j["text"] == "4x^2+2x");
    CHECK(j["coefficients"] == nlohmann::json({"0", "2", "4"}));
    CHECK(j["matchings"] == "6");
    CHECK(j["method"] == "recurrence");
}

TEST_CASE("minforce") {
    auto r = run({"minforce", "--spec", "3,3,3,4,5;1,1,2,2,3", "--matching", "0,3,3,4,4"});
    CHECK(r.code == 0);
    CHECK(r.out == "e_{5,4} r_{4,4} r_{2,3} e_{1,0}\n");
    const auto j = nlohmann::json::parse(
        run({"minforce", "--spec", "3,3,3,4,5;1,1,2,2,3", "--matching", "0,3,3,4,4", "--format", "json"}).out);
    CHECK(j["size"] == 4);
    CHECK(j["forcing_set"][0] == "e_{5,4}");
    CHECK(run({"minforce", "--spec", "1,1;1,1|1,1;1,1", "--matching", "0,0"}).code == chs::cli::usage);
    CHECK(run({"minforce", "--spec", "3;1", "--matching", "7"}).code == chs::cli::invalid_input);
}

TEST_CASE("describe and json round trip") {
    for (const std::string spec : {"3,3,3,4,5;1,1,2,2,3", "3,3,5,5;1,2,2,4|1,2,3;1,1,2"}) {
        const auto first = run({"describe", "--spec", spec, "--format", "json"});
        REQUIRE(first.code == 0);
        const auto second = run({"describe", "--spec", first.out, "--format", "json"});
        CHECK(second.code == 0);
        CHECK(second.out == first.out);
        CHECK(run({"describe", "--spec", first.out}).out == run({"describe", "--spec", spec}).out);
    }
    const auto text = run({"describe", "--spec", "3,3,5,5;1,2,2,4|1,2,3;1,1,2"}).out;
    CHECK(text.find("hexagons: 14") != std::string::npos);
    CHECK(text.find("matchings: 343") != std::string::npos);
    CHECK(text.find("type: turning") != std::string::npos);
}

TEST_CASE("enumerate and spectrum") {
    CHECK(run({"enumerate", "--spec", "2;1"}).out == "0\n1\n2\n");
    const auto j = nlohmann::json::parse(run({"enumerate", "--spec", "1,1;1,1|1,1;1,1", "--format", "json"}).out);
    CHECK(j["matchings"].size() == 5);
    CHECK(j["matchings"][0]["upper"] == nlohmann::json({0, 0}));
    CHECK(run({"spectrum", "--spec", "1,2;1,1|1,2;1,1"}).out == "{1,3}\n");
    CHECK(run({"spectrum", "--spec", "4;1", "--method", "both"}).out == "{1}\n");
    const auto s = nlohmann::json::parse(run({"spectrum", "--spec", "2,3;1,1", "--format", "json"}).out);
    CHECK(s["spectrum"] == nlohmann::json({1, 2}));
}

TEST_CASE("verify") {
    auto r = run({"verify", "--max-rows", "2", "--max-k", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("0 failed") != std::string::npos);
    auto t = run({"verify", "--max-rows", "2", "--max-k", "2", "--turning"});
    CHECK(t.code == 0);
    CHECK(t.out.find("PASS CHS(1,1;1,1|1,1;1,1) 4x^2+x") != std::string::npos);
    CHECK(run({"verify", "--max-rows", "2", "--max-k", "3"}).out == r.out);
}

TEST_CASE("budget") {
    {
        BudgetGuard guard("3");
        CHECK(run({"poly", "--spec", "2,2;1,1", "--method", "bruteforce"}).code == chs::cli::budget_exceeded);
        CHECK(run({"enumerate", "--spec", "2,2;1,1"}).code == chs::cli::budget_exceeded);
        CHECK(run({"poly", "--spec", "2,2;1,1"}).code == 0);
        const auto v = run({"verify", "--max-rows", "2", "--max-k", "2"});
        CHECK(v.code == 0);
        CHECK(v.out.find("SKIP") != std::string::npos);
    }
    {
        BudgetGuard guard("lots");
        CHECK(run({"poly", "--spec", "2,2;1,1", "--method", "bruteforce"}).code == chs::cli::usage);
    }
}

TEST_CASE("usage and input errors") {
    CHECK(run({}).code == chs::cli::usage);
    CHECK(run({"frobnicate"}).code == chs::cli::usage);
    CHECK(run({"poly"}).code == chs::cli::usage);
    CHECK(run({"poly", "--spec", "3;1", "--method", "guess"}).code == chs::cli::usage);
    CHECK(run({"poly", "--spec", "3;1", "--format", "yaml"}).code == chs::cli::usage);
    CHECK(run({"minforce", "--spec", "3;1"}).code == chs::cli::usage);
    auto bad = run({"describe", "--spec", "2,1;1,1"});
    CHECK(bad.code == chs::cli::invalid_input);
    CHECK(bad.err.find("row 2") != std::string::npos);
    CHECK(run({"describe", "--spec", "2,3;1,1|1,2;1,1"}).code == chs::cli::invalid_input);
    CHECK(run({"describe", "--spec", "{\"rows\": 5}"}).code == chs::cli::invalid_input);
    CHECK(run({"--help"}).code == 0);
}
