#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nsg/error.hpp"
#include "nsg_cli/cli.hpp"

using namespace nsg;
using namespace nsg::cli;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "nsg");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(NSG_TEST_DATA_DIR) + "/" + name; }

} // namespace

TEST(Parsing, Generators) {
    EXPECT_EQ(parse_generators("3,5,7"), (std::vector<std::int64_t>{3, 5, 7}));
    EXPECT_EQ(parse_generators(" 3, 5 ,7"), (std::vector<std::int64_t>{3, 5, 7}));
    EXPECT_THROW(parse_generators("3,x"), Error);
    EXPECT_THROW(parse_generators("3,,5"), Error);
    EXPECT_THROW(parse_generators("3*5"), Error);
}

TEST(Parsing, Ranges) {
    const auto r = parse_s_range("-14..-1");
    EXPECT_EQ(r.lo, -14);
    EXPECT_EQ(r.hi, -1);
    const auto one = parse_s_range("10");
    EXPECT_EQ(one.lo, 10);
    EXPECT_EQ(one.hi, 10);
    EXPECT_THROW(parse_s_range("5..1"), Error);
    EXPECT_THROW(parse_s_range("a..b"), Error);
}

TEST(Parsing, Families) {
    const auto f = parse_families("theorem2,MED");
    EXPECT_EQ(f.size(), 2U);
    EXPECT_TRUE(f.count(Family::Theorem2));
    EXPECT_THROW(parse_families("nonsense"), Error);
}

TEST(Parsing, ParallelismFromEnvironment) {
    ::setenv("NSG_PARALLELISM", "3", 1);
    EXPECT_EQ(default_parallelism(), 3U);
    ::setenv("NSG_PARALLELISM", "zero", 1);
    EXPECT_THROW(default_parallelism(), Error);
    ::unsetenv("NSG_PARALLELISM");
    EXPECT_EQ(default_parallelism(), 1U);
}

TEST(Analyze, JsonNumerator) {
    const auto r = invoke({"analyze", "3,5,7", "--output", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find(R"("numerator":[[0,1],[10,-1],[12,-1],[14,-1],[17,1],[19,1]])"), std::string::npos) << r.out;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["frobenius"], 4);
    EXPECT_EQ(j["genus"], 3);
    EXPECT_EQ(j["syzygy"]["status"], "resolved");
}

TEST(Analyze, InputErrors) {
    const auto r = invoke({"analyze", "2,4"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("NonCoprime"), std::string::npos);
    EXPECT_EQ(invoke({"analyze", "3,5,8"}).code, 2);
    EXPECT_EQ(invoke({"analyze", "three"}).code, 2);
    EXPECT_EQ(invoke({"frobnicate", "3,5"}).code, 2);
}

TEST(Analyze, TelescopicWitness) {
    const auto r = invoke({"analyze", "8,9,10,12", "--output", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_TRUE(j["classification"]["complete_intersection"].get<bool>());
    EXPECT_TRUE(j["classification"]["telescopic"].get<bool>());
    EXPECT_EQ(j["classification"]["telescopic_ordering"], json({8, 12, 10, 9}));
}

TEST(Verify, DefaultSuiteOn357) {
    const auto r = invoke({"verify", "3,5,7", "--output", "json"});
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["identity_count"]["expected"], "9");
    EXPECT_EQ(j["identity_count"]["executed"], 9);
    std::set<std::string> families;
    for (const auto& c : j["checks"]) families.insert(c["family"].get<std::string>());
    EXPECT_TRUE(families.count("MED"));
    EXPECT_TRUE(families.count("M3"));
    EXPECT_TRUE(families.count("Theorem2"));
}

TEST(Verify, FamilyFilter) {
    const auto r = invoke({"verify", "3,5,7", "--families", "theorem2", "--output", "json"});
    ASSERT_EQ(r.code, 0);
    for (const auto& c : json::parse(r.out)["checks"]) EXPECT_EQ(c["family"], "Theorem2");
}

TEST(Verify, EmptyReport) {
    const auto j = invoke({"verify", "3,5,7", "--families", "bresinsky4", "--output", "json"});
    EXPECT_EQ(j.code, 0);
    EXPECT_EQ(j.out, "{\"checks\":[]}\n");
    const auto t = invoke({"verify", "3,5,7", "--families", "bresinsky4"});
    EXPECT_NE(t.out.find("no checks executed"), std::string::npos);
    EXPECT_EQ(emit_report({}, OutputFormat::Json), "{\"checks\":[]}\n");
    EXPECT_EQ(emit_report({}, OutputFormat::Text), "no checks executed\n");
}

TEST(Verify, SuppliedTable) {
    const auto r = invoke({"verify", "19,23,29,31,37", "--table", fixture("bresinsky.json"), "--output", "json"});
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["syzygy_table"], "supplied");
    std::size_t five = 0;
    for (const auto& c : j["checks"])
        if (c["family"] == "Symmetric5") ++five;
    EXPECT_EQ(five, 4U);
    EXPECT_EQ(invoke({"verify", "19,23,29,31,37", "--table", fixture("missing.json")}).code, 2);
    EXPECT_EQ(invoke({"verify", "3,5,7", "--table", fixture("bresinsky.json")}).code, 2);
}

TEST(Verify, DeterministicAcrossParallelism) {
    const auto a = invoke({"verify", "8,9,10,12", "--output", "json", "--parallelism", "1"});
    const auto b = invoke({"verify", "8,9,10,12", "--output", "json", "--parallelism", "8"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto c = invoke({"verify", "8,9,10,12", "--parallelism", "1"});
    const auto d = invoke({"verify", "8,9,10,12", "--parallelism", "5"});
    EXPECT_EQ(c.out, d.out);
    EXPECT_EQ(invoke({"verify", "3,5,7", "--parallelism", "0"}).code, 2);
}

TEST(Report, InjectedFailureResidual) {
    IdentityReport report = {make_check(Family::Theorem1, "power_sum", {}, BigRational(-210), BigRational(-207))};
    report.front().params.k = 2;
    const auto j = json::parse(emit_report(report, OutputFormat::Json));
    EXPECT_EQ(j["checks"][0]["status"], "fail");
    EXPECT_EQ(j["checks"][0]["residual"], "3");
    EXPECT_EQ(j["checks"][0]["params"]["k"], 2);
    const auto text = emit_report(report, OutputFormat::Text);
    EXPECT_NE(text.find("FAIL"), std::string::npos);
}

TEST(Partition, Rows) {
    const auto r = invoke({"partition", "3,5,7", "--s", "0..20", "--output", "json"});
    ASSERT_EQ(r.code, 0);
    const auto rows = json::parse(r.out)["rows"];
    ASSERT_EQ(rows.size(), 21U);
    for (const auto& row : rows) EXPECT_TRUE(row["match"].get<bool>());

    const auto one = json::parse(invoke({"partition", "3,5,7", "--s", "10", "--output", "json"}).out);
    EXPECT_EQ(one["rows"][0]["denumerant"], "2");

    const auto neg = invoke({"partition", "3,5,7", "--s", "-14..-1", "--waves-only", "--output", "json"});
    ASSERT_EQ(neg.code, 0) << neg.err;
    for (const auto& row : json::parse(neg.out)["rows"]) EXPECT_EQ(row["total"], "0");

    EXPECT_EQ(invoke({"partition", "3,5,7", "--s", "-3..2"}).code, 2);
    EXPECT_EQ(invoke({"partition", "3,5,7"}).code, 2);
}

TEST(Waves, Listing) {
    const auto r = invoke({"waves", "3,5,7", "--output", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["waves"][0]["coefficients"], json({"1/210", "1/14", "74/315"}));
    EXPECT_EQ(j["moduli"], json({3, 5, 7}));
}

TEST(Count, Values) {
    for (auto [gens, n] : std::vector<std::pair<std::string, std::string>>{{"3,5,7", "9"}, {"8,9,10,12", "23"}, {"2,3", "4"}}) {
        const auto r = invoke({"count", gens, "--output", "json"});
        ASSERT_EQ(r.code, 0);
        EXPECT_EQ(json::parse(r.out)["total"], n) << gens;
    }
}

TEST(Misuse, FamiliesOnlyForVerify) {
    RunConfig cfg;
    cfg.command = Command::Count;
    cfg.generators = {3, 5, 7};
    cfg.families = std::set<Family>{Family::Theorem1};
    EXPECT_THROW(execute(cfg), Error);
}
