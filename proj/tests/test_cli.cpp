#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

using sytstrip::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "sytstrip");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count prints exact decimal counts") {
    CHECK(invoke({"count", "--shape", "strip:3x5", "--method", "dp"}).out == "290\n");
    CHECK(invoke({"count", "--shape", "strip:1x1", "--method", "dp"}).out == "1\n");
    CHECK(invoke({"count", "--shape", "shifted:3,2,1", "--method", "formula"}).out == "2\n");
    for (const char* method : {"dp", "backtrack", "matrix", "formula", "symbolic"}) {
        CAPTURE(method);
        const auto r = invoke({"count", "--shape", "strip:3x4", "--method", method});
        CHECK(r.code == 0);
        CHECK(r.out == "29\n");
    }
    CHECK(invoke({"count", "--shape", "strip:30x5", "--method", "formula"}).out ==
          invoke({"count", "--shape", "strip:30x5"}).out);
}

TEST_CASE("count JSON schema") {
    const auto r = invoke({"count", "--shape", "strip:6x4", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["shape"] == "strip:6x4");
    CHECK(j["method"] == "dp");
    CHECK(j["count"] == "5741");
    CHECK(j["elapsed_ms"].is_number());
    const auto big = nlohmann::json::parse(invoke({"count", "--shape", "strip:30x6", "--format", "json"}).out);
    CHECK(big["count"].is_string());
}

TEST_CASE("identical configurations give identical bytes") {
    const std::vector<std::string> args{"count", "--shape", "strip:5x5", "--format", "json", "--no-timing"};
    CHECK(invoke(args).out == invoke(args).out);
    const std::vector<std::string> mc{"verify", "--suite", "montecarlo", "--limit", "6", "--samples", "5000", "--seed", "9"};
    CHECK(invoke(mc).out == invoke(mc).out);
}

TEST_CASE("exit codes") {
    CHECK(invoke({"count", "--shape", "strip:0x3"}).code == 2);
    CHECK(invoke({"count", "--shape", "strip:3x3", "--method", "quantum"}).code == 2);
    CHECK(invoke({"count"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"count", "--shape", "shifted:3,2,1", "--method", "matrix"}).code == 2);
    CHECK(invoke({"count", "--shape", "strip:6x6", "--method", "formula"}).code == 2);
    const auto budget = invoke({"count", "--shape", "strip:6x6", "--method", "backtrack"});
    CHECK(budget.code == 3);
    CHECK(budget.out.empty());
    CHECK_FALSE(budget.err.empty());
    CHECK(invoke({"count", "--shape", "strip:4x4", "--method", "matrix"}).code == 3);
    CHECK(invoke({"count", "--shape", "strip:30x30", "--max-cells", "100"}).code == 3);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("table") {
    const auto csv = invoke({"table", "--max-rows", "3", "--max-width", "4", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("rows,width,count\n", 0) == 0);
    CHECK(csv.out.find("1,4,1\n2,1,1") != std::string::npos);
    CHECK(csv.out.find("2,4,5\n") != std::string::npos);
    CHECK(csv.out.find("3,4,29\n") != std::string::npos);

    const auto plain = invoke({"table", "--max-rows", "2", "--max-width", "5"});
    CHECK(plain.out.find("\n2 1 1 2 5 14\n") != std::string::npos);
    CHECK(plain.out.find("\n1 1 1 1 1 1\n") != std::string::npos);

    const auto marked = invoke({"table", "--max-rows", "4", "--max-width", "4", "--max-cells", "9", "--format", "csv"});
    CHECK(marked.out.find("4,4,budget_exceeded") != std::string::npos);
    CHECK(marked.out.find("3,3,4") != std::string::npos);

    const auto json = nlohmann::json::parse(invoke({"table", "--max-rows", "2", "--max-width", "2", "--format", "json"}).out);
    CHECK(json["cells"].size() == 4);
    CHECK(invoke({"table", "--max-rows", "0", "--max-width", "3"}).code == 2);
}

TEST_CASE("verify") {
    const auto pell = invoke({"verify", "--suite", "pell", "--limit", "10"});
    CHECK(pell.code == 0);
    CHECK(pell.out.find("PASS, 10 checks") != std::string::npos);
    CHECK(invoke({"verify", "--suite", "lemma1", "--limit", "4"}).code == 0);
    const auto hardin = invoke({"verify", "--suite", "hardin", "--k", "6", "--limit", "10", "--format", "json"});
    CHECK(hardin.code == 0);
    CHECK(nlohmann::json::parse(hardin.out)["verdict"] == true);
    CHECK(invoke({"verify", "--suite", "unknown"}).code == 2);
    CHECK(invoke({"verify", "--suite", "hardin", "--k", "9"}).code == 2);
    const auto csv = invoke({"verify", "--suite", "identities", "--limit", "3", "--format", "csv"});
    CHECK(csv.out.rfind("index,expected,actual,pass,note\n", 0) == 0);
}

TEST_CASE("sequence export") {
    CHECK(invoke({"sequence", "--family", "g3n", "--count", "5"}).out == "1 1\n2 1\n3 4\n4 29\n5 290\n");
    CHECK(invoke({"sequence", "--family", "gn4", "--count", "6"}).out == "1 1\n2 5\n3 29\n4 169\n5 985\n6 5741\n");
    CHECK(invoke({"sequence", "--family", "gn5", "--count", "5"}).out == "1 1\n2 14\n3 290\n4 6392\n5 141696\n");
    CHECK(invoke({"sequence", "--family", "g2n", "--count", "5"}).out == "1 1\n2 1\n3 2\n4 5\n5 14\n");
    CHECK(invoke({"sequence", "--family", "gn6", "--count", "3"}).out == "1 1\n2 42\n3 3532\n");
    CHECK(invoke({"sequence", "--family", "gn7", "--count", "100", "--max-cells", "300"}).code == 3);
    CHECK(invoke({"sequence", "--family", "gn9", "--count", "3"}).code == 2);
}

TEST_CASE("cell budget from the environment") {
    ::setenv(sytstrip::cli::kCellBudgetEnv, "10", 1);
    CHECK(invoke({"count", "--shape", "strip:4x4"}).code == 3);
    CHECK(invoke({"count", "--shape", "strip:4x4", "--max-cells", "16"}).code == 0);
    ::setenv(sytstrip::cli::kCellBudgetEnv, "garbage", 1);
    const auto r = invoke({"count", "--shape", "strip:4x4"});
    CHECK(r.code == 0);
    CHECK(r.err.find("ignoring") != std::string::npos);
    ::unsetenv(sytstrip::cli::kCellBudgetEnv);
}
