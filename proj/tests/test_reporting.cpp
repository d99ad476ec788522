#include <ctrees/sequence_io.hpp>
#include <ctrees/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace ctrees;

TEST_CASE("bfile output round-trips") {
    SeriesBundle b = make_bundle(12, kAllowTwoCycles);
    std::vector<Int> values = sequence_values(b.ctree);
    std::string text = format_bfile(values);
    CHECK(parse_bfile(text) == values);
    CHECK(text.substr(0, 4) == "1 1\n");
}

TEST_CASE("bfile parser rejects index gaps") {
    CHECK_THROWS_AS(parse_bfile("1 1\n3 2\n"), std::invalid_argument);
}

TEST_CASE("plain format") {
    std::vector<Int> values{1, 2, 3};
    CHECK(format_plain(values) == "1, 2, 3\n");
}

TEST_CASE("json format carries string coefficients") {
    std::vector<Int> values{Int("7809848543"), Int("139586611475")};
    auto j = nlohmann::json::parse(format_json("c", "all-cycles", values));
    CHECK(j["name"] == "c");
    CHECK(j["offset"] == 1);
    CHECK(j["order"] == 2);
    CHECK(j["coefficients"][1] == "139586611475");
}

TEST_CASE("verify passes at small n") {
    VerifyReport report = verify(4, kAllowTwoCycles);
    CHECK(report.all_pass);
    for (const auto& row : report.rows) CHECK(row.pass);
    CHECK(render_report(report).find("FAIL") == std::string::npos);
}

TEST_CASE("verify flags a corrupted coefficient") {
    SeriesBundle bundle = make_bundle(5, kAllowTwoCycles);
    bundle.ctree[3] += 1;  // deliberate corruption
    VerifyReport report = verify_against_bundle(bundle, 4);
    CHECK_FALSE(report.all_pass);
    int failures = 0;
    for (const auto& row : report.rows)
        if (!row.pass) ++failures;
    CHECK(failures == 1);
    CHECK(render_report(report).find("FAIL") != std::string::npos);
}

TEST_CASE("verify rejects n beyond the oracle cap") {
    CHECK_THROWS_AS(verify(7, kAllowTwoCycles), std::invalid_argument);
}
