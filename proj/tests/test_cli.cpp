#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace kfib;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("range parsing") {
    CHECK(cli::parse_range("-4..6") == IndexRange{-4, 6});
    CHECK(cli::parse_range("-5..-1") == IndexRange{-5, -1});
    CHECK(cli::parse_range("3..3") == IndexRange{3, 3});
    CHECK_THROWS_AS(cli::parse_range("6..-4"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_range("6"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_range("a..b"), std::invalid_argument);
    CHECK(cli::parse_integer_list("3, -1,4") == std::vector<Integer>{3, -1, 4});
    CHECK_THROWS_AS(cli::parse_integer_list("1,,2"), std::invalid_argument);
}

TEST_CASE("eval") {
    auto r = run({"eval", "--k", "5", "--init", "3,1,4,1,5", "--range", "-4..6"});
    CHECK(r.code == 0);
    CHECK(r.out == "-2,7,-3,-4,3,1,4,1,5,14,25\n");

    CHECK(run({"eval", "--k", "2", "--init", "0,1", "--range", "0..5"}).out == "0,1,1,2,3,5\n");
    CHECK(run({"eval", "--k", "3", "--init", "1,0,0", "--range", "-1..-1"}).out == "-1\n");

    for (const char* method : {"window", "shortcut", "matpow"}) {
        CHECK(run({"eval", "--k", "5", "--init", "3,1,4,1,5", "--range", "-4..6", "--method", method}).out ==
              "-2,7,-3,-4,3,1,4,1,5,14,25\n");
    }
}

TEST_CASE("eval JSON renders every value as a decimal string") {
    auto r = run({"eval", "--k", "2", "--init", "0,1", "--range", "0..100", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["k"] == 2);
    CHECK(doc["window"] == nlohmann::json::array({"0", "1"}));
    REQUIRE(doc["terms"].size() == 101);
    CHECK(doc["terms"][0]["n"] == 0);
    CHECK(doc["terms"][100]["value"] == "354224848179261915075");
    for (const auto& t : doc["terms"]) CHECK(t["value"].is_string());
}

TEST_CASE("eval CSV") {
    auto r = run({"eval", "--k", "2", "--init", "0,1", "--range", "-2..1", "--format", "csv"});
    CHECK(r.out == "n,value\n-2,-1\n-1,1\n0,0\n1,1\n");
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"basis", "--k", "4", "--j", "2", "--range", "-30..30", "--method", "multinomial",
                                        "--format", "json"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("format default comes from the environment and the flag overrides it") {
    setenv("KFIB_FORMAT", "csv", 1);
    CHECK(run({"eval", "--k", "2", "--init", "0,1", "--range", "0..1"}).out == "n,value\n0,0\n1,1\n");
    CHECK(run({"eval", "--k", "2", "--init", "0,1", "--range", "0..1", "--format", "plain"}).out == "0,1\n");
    unsetenv("KFIB_FORMAT");
}

TEST_CASE("invalid configurations exit nonzero with a message") {
    auto reversed = run({"eval", "--k", "2", "--init", "0,1", "--range", "5..0"});
    CHECK(reversed.code != 0);
    CHECK(reversed.err.find("reversed") != std::string::npos);
    CHECK(run({"eval", "--k", "3", "--init", "0,1", "--range", "0..1"}).code != 0);
    CHECK(run({"eval", "--k", "1", "--init", "0", "--range", "0..1"}).code != 0);
    CHECK(run({"basis", "--k", "3", "--j", "3", "--range", "0..1"}).code != 0);
    CHECK(run({"basis", "--k", "3", "--j", "0", "--range", "0..1", "--method", "binet"}).code != 0);
    CHECK(run({"eval", "--k", "2", "--init", "0,1", "--range", "0..1", "--format", "xml"}).code != 0);
    CHECK(run({"frobnicate"}).code != 0);
    CHECK(run({}).code != 0);
}

TEST_CASE("basis methods agree") {
    for (int k = 2; k <= 5; ++k) {
        for (int j = 0; j < k; ++j) {
            const std::string ks = std::to_string(k);
            const std::string js = std::to_string(j);
            const auto rec = run({"basis", "--k", ks, "--j", js, "--range", "-20..25"});
            REQUIRE(rec.code == 0);
            CHECK(run({"basis", "--k", ks, "--j", js, "--range", "-20..25", "--method", "binomial"}).out == rec.out);
            CHECK(run({"basis", "--k", ks, "--j", js, "--range", "-20..25", "--method", "multinomial"}).out == rec.out);
        }
    }
}

TEST_CASE("binom and binom-table") {
    CHECK(run({"binom", "--n", "-2", "--i", "-4"}).out == "3\n");
    CHECK(run({"binom", "--n", "6", "--i", "2"}).out == "15\n");
    const auto csv = run({"binom-table", "--rows", "-1..0", "--cols", "-2..0", "--format", "csv"});
    CHECK(csv.out == "n,-2,-1,0\n-1,-1,1,0\n0,0,0,1\n");
    const auto json = run({"binom-table", "--format", "json"});
    const auto doc = nlohmann::json::parse(json.out);
    REQUIRE(doc.size() == 13);
    // row n = -2, column i = -6
    CHECK(doc[4][0] == "5");
    CHECK(run({"binom-table", "--rows", "1..0"}).code != 0);
}

TEST_CASE("multinom and support") {
    CHECK(run({"multinom", "--idx", "2,0,-4"}).out == "3\n");
    CHECK(run({"multinom", "--idx", "1,1,-3", "--form", "closed"}).out == "2\n");
    CHECK(run({"multinom", "--idx", "5"}).code != 0);

    const auto r = run({"support", "--k", "2", "--target", "2"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["count"] == 2);
    CHECK(doc["chains"][0]["s"] == nlohmann::json::array({2, 0}));
    CHECK(doc["chains"][1]["s"] == nlohmann::json::array({1, 1}));
    CHECK(doc["sum"] == "2");
    CHECK(nlohmann::json::parse(run({"support", "--k", "2", "--target", "-1"}).out)["count"] == 0);
}

TEST_CASE("identities") {
    const auto ok = run({"identities", "--k-range", "2..4", "--window", "-10..10"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    const auto bad = run({"identities", "--k-range", "2..3", "--inject-fault", "--format", "json"});
    CHECK(bad.code == 1);
    CHECK(nlohmann::json::parse(bad.out)["pass"] == false);
}

TEST_CASE("verify") {
    const auto ok = run({"verify", "--k-range", "2..3", "--n-range", "-5..5"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("all checks passed") != std::string::npos);

    const auto bad = run({"verify", "--k-range", "2..3", "--n-range", "-5..5", "--inject-fault", "--format", "json"});
    CHECK(bad.code == 1);
    const auto doc = nlohmann::json::parse(bad.out);
    CHECK(doc["pass"] == false);
    CHECK(doc["checks"][0]["name"] == "identity-catalog");
    CHECK(doc["checks"][0]["pass"] == false);
    CHECK(doc["checks"][0]["counterexample"].get<std::string>().find("op-i") != std::string::npos);
    for (std::size_t p = 1; p < doc["checks"].size(); ++p) CHECK(doc["checks"][p]["pass"] == true);
}

TEST_CASE("tiling") {
    CHECK(run({"tiling", "--k", "3", "--n", "4"}).out == "7\n");
    const auto checked = run({"tiling", "--k", "3", "--n", "4", "--check"});
    CHECK(checked.code == 0);
    CHECK(checked.out.find("match") != std::string::npos);
    CHECK(run({"tiling", "--k", "3", "--n", "-1"}).code != 0);
}

TEST_CASE("bench") {
    const auto r = run({"bench", "--k", "2", "--n", "30", "--reps", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("values agree: F_30 = 832040") != std::string::npos);
    const auto neg = run({"bench", "--k", "4", "--n", "-5000", "--reps", "1", "--methods", "window,matpow"});
    CHECK(neg.code == 0);
    CHECK(neg.out.find("values agree") != std::string::npos);
    CHECK(run({"bench", "--n", "10", "--methods", "binet"}).code != 0);
}
