#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "ryser");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = ryser::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
    std::vector<nlohmann::json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
    return out;
}

}  // namespace

TEST(CliCheck, Rejected36) {
    const auto r = run({"check", "36"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["schema_version"], "1");
    EXPECT_EQ(doc["command"], "check");
    EXPECT_EQ(doc["input"]["n"], 36);
    EXPECT_EQ(doc["result"]["verdict"], "REJECTED");
    EXPECT_EQ(doc["result"]["rejection_primes"], nlohmann::json::array({2, 3}));
    EXPECT_EQ(doc["result"]["witnesses"][0]["m"], 9);
    EXPECT_EQ(doc["result"]["witnesses"][0]["order"], 6);
    EXPECT_EQ(doc["result"]["witnesses"][0]["parity"], "even");
    EXPECT_EQ(doc["timing_ms"], 0);
}

TEST(CliCheck, BoundaryAndNotApplicable) {
    const auto four = run({"check", "4"});
    EXPECT_EQ(four.code, 0);
    EXPECT_EQ(nlohmann::json::parse(four.out)["result"]["verdict"], "NOT_DECIDED");

    const auto twelve = run({"check", "12"});
    EXPECT_EQ(twelve.code, 3);
    EXPECT_EQ(nlohmann::json::parse(twelve.out)["result"]["verdict"], "NOT_APPLICABLE");
}

TEST(CliCheck, MalformedInput) {
    for (const char* bad : {"abc", "0", "-4", "36x", "9223372036854775808", "", "+36"}) {
        const auto r = run({"check", bad});
        EXPECT_EQ(r.code, 2) << bad;
        EXPECT_TRUE(r.out.empty()) << bad;
        EXPECT_FALSE(r.err.empty()) << bad;
    }
    EXPECT_EQ(run({"check"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliCheck, ReportedOrdersVerifyIndependently) {
    for (const char* n : {"36", "100", "196", "900", "21316", "4"}) {
        const auto doc = nlohmann::json::parse(run({"check", n}).out)["result"];
        bool any_even = false;
        for (const auto& w : doc["witnesses"]) {
            const auto p = w["p"].get<std::uint64_t>();
            const auto m = w["m"].get<std::uint64_t>();
            const auto k = w["order"].get<std::uint64_t>();
            EXPECT_EQ(oracle::naive_pow(p, k, m), 1 % m);
            if (k % 2 == 0) {
                any_even = true;
                EXPECT_NE(oracle::naive_pow(p, k / 2, m), 1u);
            }
        }
        EXPECT_EQ(doc["verdict"] == "REJECTED", any_even) << n;
    }
}

TEST(CliSieve, JsonLinesSummary) {
    const auto r = run({"sieve", "1", "145", "--format", "json-lines"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto lines = json_lines(r.out);
    ASSERT_EQ(lines.size(), 73u + 1);
    for (std::size_t i = 0; i < 73; ++i) {
        EXPECT_EQ(lines[i]["type"], "record");
        EXPECT_EQ(lines[i]["u"], 1 + 2 * i);
    }
    const auto& summary = lines.back();
    EXPECT_EQ(summary["type"], "summary");
    EXPECT_EQ(summary["survivors"], nlohmann::json::array({1, 73, 89}));
    EXPECT_EQ(summary["counts"]["NOT_DECIDED"], 3);
    EXPECT_EQ(summary["counts"]["REJECTED"], 70);
}

TEST(CliSieve, SingleAndInvalid) {
    const auto one = run({"sieve", "1", "1"});
    ASSERT_EQ(one.code, 0);
    const auto lines = json_lines(one.out);
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(lines[1]["survivors"], nlohmann::json::array({1}));

    EXPECT_EQ(run({"sieve", "2", "10"}).code, 2);
    EXPECT_EQ(run({"sieve", "1", "x"}).code, 2);
    EXPECT_EQ(run({"sieve", "1", "9", "--format", "xml"}).code, 2);
}

TEST(CliSieve, Csv) {
    const auto r = run({"sieve", "1", "9", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "u,n,verdict,rejection_primes,witnesses\n"
              "1,4,NOT_DECIDED,,2:1:1\n"
              "3,36,REJECTED,2;3,2:9:6;3:4:2\n"
              "5,100,REJECTED,2,2:25:20;5:4:1\n"
              "7,196,REJECTED,7,2:49:21;7:4:2\n"
              "9,324,REJECTED,2;3,2:81:54;3:4:2\n"
              "# summary: REJECTED=4,NOT_DECIDED=1,survivors=1\n");
}

TEST(CliSieve, CapFromEnvironment) {
    ::setenv("RYSER_SIEVE_CAP", "10", 1);
    EXPECT_EQ(run({"sieve", "1", "99"}).code, 4);
    EXPECT_EQ(run({"sieve", "1", "19"}).code, 0);
    ::setenv("RYSER_SIEVE_CAP", "lots", 1);
    EXPECT_EQ(run({"sieve", "1", "19"}).code, 2);
    ::unsetenv("RYSER_SIEVE_CAP");
}

TEST(CliSieve, ByteIdenticalAcrossWorkers) {
    const auto a = run({"sieve", "1", "2001", "--threads", "1"});
    const auto b = run({"sieve", "1", "2001", "--threads", "4"});
    const auto c = run({"sieve", "1", "2001", "--threads", "4"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(b.out, c.out);
}

TEST(CliVerifyRow, Examples) {
    const auto good = run({"verify-row", "+++-"});
    ASSERT_EQ(good.code, 0);
    const auto doc = nlohmann::json::parse(good.out);
    EXPECT_EQ(doc["result"]["hadamard"], true);
    EXPECT_EQ(doc["result"]["paf"], nlohmann::json::array({4, 0, 0, 0}));
    for (const auto& m : doc["result"]["spectrum"]["magnitudes"]) EXPECT_NEAR(m.get<double>(), 2.0, 1e-12);

    const auto flat = nlohmann::json::parse(run({"verify-row", "++++"}).out);
    EXPECT_EQ(flat["result"]["hadamard"], false);
    EXPECT_EQ(flat["result"]["paf"][1], 4);

    EXPECT_EQ(run({"verify-row", "+x+-"}).code, 2);
}

TEST(CliSearch, Examples) {
    const auto c4 = run({"search", "circulant", "4"});
    ASSERT_EQ(c4.code, 0);
    EXPECT_EQ(c4.out, "+++-\n++-+\n+-++\n+---\n-+++\n-+--\n--+-\n---+\ncount 8\n");

    const auto b13 = run({"search", "barker", "13"});
    ASSERT_EQ(b13.code, 0);
    EXPECT_NE(b13.out.find("+++++--++-+-+\n"), std::string::npos);
    EXPECT_NE(b13.out.find("count 4\n"), std::string::npos);

    EXPECT_EQ(run({"search", "circulant", "30"}).code, 2);
    EXPECT_EQ(run({"search", "barker", "25"}).code, 2);
    EXPECT_EQ(run({"search", "hexagonal", "4"}).code, 2);
}

TEST(CliSearch, ByteIdenticalAcrossWorkers) {
    EXPECT_EQ(run({"search", "circulant", "16", "--threads", "1"}).out,
              run({"search", "circulant", "16", "--threads", "3"}).out);
}
