#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "cubicpair/cli.hpp"

using namespace cubicpair;
using nlohmann::json;

namespace {

struct RunOutcome {
    int code;
    std::string out;
    std::string err;
};

RunOutcome run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("optimize subcommand emits the exact optimum") {
    auto r = run({"optimize"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["delta"] == "566/34905");
    CHECK(j["optimal_exponent"] == "2327");
    CHECK(j["lambda_exponent"] == 2328);
    CHECK(j["certified"] == true);
}

TEST_CASE("prob --exact matches the closed forms") {
    auto r = run({"prob", "--exact", "--p", "7", "--precision", "8"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["exact"]["prob1"]["decimal"] == "0.99990129");
    // canonical lowest terms: gcd 3 divides out of (9^16 - 915010783104)/9^16
    CHECK(j["exact"]["prob3"]["rational"] == "617368392689579/617673396283947");
}

TEST_CASE("prob --interval reproduces the two-sided bound") {
    auto r = run({"prob", "--interval"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["interval"]["interval_4dp"][0] == "0.9694");
    CHECK(j["interval"]["interval_4dp"][1] == "0.9700");
}

TEST_CASE("mgood subcommand on a failing pair") {
    auto r = run({"--pair", R"({"n":2,"c":[1,1],"d":[2,2]})", "mgood"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["is_mgood"] == false);
    CHECK(j["prime_bound"] == 4);
    REQUIRE(!j["failures"].empty());
    CHECK(j["failures"][0]["condition"] == "II");
}

TEST_CASE("rho subcommand and methods agree") {
    std::string pair = R"({"n":5,"c":[1,0,2,4,6],"d":[0,1,2,2,2]})";
    auto dp = run({"--pair", pair, "rho", "--p", "7"});
    auto brute = run({"--pair", pair, "rho", "--p", "7", "--method", "brute"});
    REQUIRE(dp.code == 0);
    REQUIRE(brute.code == 0);
    CHECK(json::parse(dp.out)["value"] == 1);
    CHECK(json::parse(brute.out)["value"] == 1);

    // a feasibility violation is a domain error, exit 1
    auto big = run({"--pair", pair, "rho", "--p", "1009", "--k", "3", "--method", "brute"});
    CHECK(big.code == 1);
    CHECK(big.err.find("error") != std::string::npos);

    // the caps can be overridden per run
    std::string two = R"({"n":2,"c":[1,1],"d":[1,2]})";
    auto capped = run({"--pair", two, "rho", "--p", "521", "--method", "dp"});
    CHECK(capped.code == 1);
    auto lifted = run({"--pair", two, "rho", "--p", "521", "--method", "dp",
                       "--max-dp-q", "600"});
    REQUIRE(lifted.code == 0);
    CHECK(json::parse(lifted.out)["value"] == 1);
}

TEST_CASE("series subcommand emits rationals and CSV") {
    std::string pair = R"({"n":3,"c":[1,1,1],"d":[0,1,2]})";
    auto r = run({"--pair", pair, "series", "--p0", "6"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["p0"] == 6);
    CHECK(j["a_values"].contains("1"));
    CHECK(j["a_values"]["1"] == "1");

    auto csv = run({"--pair", pair, "series", "--p0", "6", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("q,A(q)", 0) == 0);
}

TEST_CASE("search subcommand") {
    std::string pair = R"({"n":2,"c":[1,-8],"d":[2,-16]})";
    auto r = run({"--pair", pair, "search", "--strategy", "equal-ratio", "--bound", "3"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["sup_norm"] == 2);
    CHECK(j["strategy"] == "equal-ratio-pair");
}

TEST_CASE("arrange subcommand on a 16-column pair") {
    std::ostringstream pair;
    pair << R"({"n":16,"c":[)";
    for (int i = 0; i < 16; ++i) pair << (i % 4) + 1 << (i + 1 < 16 ? "," : "");
    pair << R"(],"d":[)";
    for (int i = 0; i < 16; ++i) pair << ((i * 3 + 1) % 5) + 1 << (i + 1 < 16 ? "," : "");
    pair << "]}";
    auto r = run({"--pair", pair.str(), "arrange"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.contains("partition"));
    CHECK(j["partition"]["a_indices"].size() == 10);
    CHECK(j["eta"]["eta"].size() == 12);
}

TEST_CASE("arrange reports the heavy-ratio route when it applies") {
    auto r = run({"--pair",
                  R"({"n":16,"c":[1,1,1,1,1,1,1,2,3,4,5,6,7,8,9,1],)"
                  R"("d":[2,2,2,2,2,2,2,3,4,5,6,7,8,9,1,3]})",
                  "arrange"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.contains("heavy_ratio"));
    CHECK(j["heavy_ratio"]["ratio"] == "1/2");
    CHECK(j["heavy_ratio"]["indices"].size() == 7);
    CHECK(!j.contains("partition"));
}

TEST_CASE("search --strategy mim finds the cheapest cancellation") {
    auto r = run({"--pair", R"({"n":4,"c":[125,-27,0,0],"d":[0,0,8,216]})", "search",
                  "--strategy", "mim", "--support-size", "4", "--bound", "6"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["sup_norm"] == 3); // 8*(-3)^3 + 216*1^3 = 0 on the d-side columns
}

TEST_CASE("usage errors exit 2, domain errors exit 1") {
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--pair", "{broken", "mgood"}).code == 1);
    CHECK(run({"mgood"}).code == 1); // no pair provided
    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("paper-check") != std::string::npos);
}

TEST_CASE("verify-lift subcommand") {
    auto r = run({"--pair", R"({"n":3,"c":[1,2,1],"d":[1,1,2]})", "verify-lift", "--p",
                  "5", "--k", "1"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["p"] == 5);
    CHECK(j["all_exact"] == true);
}
