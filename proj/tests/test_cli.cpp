#include <gtest/gtest.h>

#include <sstream>

#include "hsspos/cli.hpp"

using namespace hsspos;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected = 0) {
    args.insert(args.begin(), "--json");
    const auto r = run(args);
    EXPECT_EQ(r.code, expected) << r.err;
    return Json::parse(r.out);
}

} // namespace

TEST(Cli, PositivityE6) {
    const auto j = run_json({"positivity", "e6"});
    EXPECT_EQ(j["schema_version"], "1");
    EXPECT_EQ(j["command"], "positivity");
    EXPECT_EQ(j["results"]["v"], 16);
    EXPECT_EQ(j["results"]["ell"], 11);
    EXPECT_EQ(j["results"]["psi"].size(), 16u);
    EXPECT_EQ(j["results"]["orbit_values"]["11"], 16);
    EXPECT_EQ(j["seed"], 42);
}

TEST(Cli, PositivityText) {
    const auto r = run({"positivity", "lagr:3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("ell        3"), std::string::npos);
    EXPECT_NE(r.out.find("2e1"), std::string::npos);
}

TEST(Cli, RangeQuadric6) {
    const auto j = run_json({"range", "quadric:6", "-m", "5", "-n", "5"});
    EXPECT_EQ(j["results"]["iso_max"], 3);
    EXPECT_EQ(j["results"]["surj_at"], 4);
    EXPECT_EQ(j["results"]["closed_form"]["formula"], "n+m-p-1");
    EXPECT_EQ(j["checks"][0]["status"], "pass");
    const auto t = run({"range", "quadric:6", "-m", "5", "-n", "5"});
    EXPECT_NE(t.out.find("isomorphism for j <= 3"), std::string::npos);
}

TEST(Cli, RangeWithEll0) {
    const auto j = run_json({"range", "gr:3,3", "-m", "7", "-n", "8", "--ell0", "8"});
    EXPECT_EQ(j["results"]["ell"], 8);
    EXPECT_EQ(j["results"]["ell_space"], 5);
    EXPECT_EQ(j["inputs"]["ell0"], 8);
    EXPECT_EQ(run({"range", "gr:3,3", "-m", "7", "-n", "8", "--ell0", "4"}).code, 2);
    EXPECT_EQ(run({"range", "gr:3,3", "-m", "10", "-n", "8"}).code, 2);
}

TEST(Cli, Form) {
    const auto j = run_json({"form", "gr:2,2", "--vector", "e1-e3=1,e1-e4=1"});
    EXPECT_EQ(j["results"]["nullity"], 1);
    EXPECT_EQ(j["results"]["ell_line"], 3);
    EXPECT_EQ(j["results"]["grassmann_rank"], 1);
    EXPECT_EQ(j["results"]["matrix"].size(), 4u);
    const auto k = run_json({"form", "gr:2,2", "--vector", "e1-e3=1, e2-e4=1/2"});
    EXPECT_EQ(k["results"]["nullity"], 0);
    EXPECT_EQ(k["results"]["vector"]["e2-e4"], "1/2");
}

TEST(Cli, FormWithCoordinateRoots) {
    const auto s = resolve("e6");
    const std::string root = s.roots().root(s.psi()[3]).name();
    ASSERT_EQ(root.front(), '[');
    const auto j = run_json({"form", "e6", "--vector", root + "=2"});
    EXPECT_EQ(j["results"]["ell_line"], 11);
}

TEST(Cli, FormErrors) {
    EXPECT_EQ(run({"form", "gr:2,2", "--vector", "e1-e2=1"}).code, 2);        // not in Psi
    EXPECT_EQ(run({"form", "gr:2,2", "--vector", "e1-e3=1,e1-e3=2"}).code, 2); // repeated
    EXPECT_EQ(run({"form", "gr:2,2", "--vector", "e1-e3=0"}).code, 2);        // zero vector
    EXPECT_EQ(run({"form", "gr:2,2", "--vector", "e1-e3"}).code, 2);
    EXPECT_EQ(run({"form", "gr:2,2", "--vector", "e1-e3=x"}).code, 2);
    EXPECT_EQ(run({"form", "gr:2,2"}).code, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"positivity"}).code, 2);
    EXPECT_EQ(run({"positivity", "quadric:2"}).code, 2);
    EXPECT_EQ(run({"positivity", "gr:2"}).code, 2);
    EXPECT_EQ(run({"--samples", "0", "table"}).code, 2);
    EXPECT_EQ(run({"spaces"}).code, 2);
    const auto r = run({"positivity", "e8"});
    EXPECT_NE(r.err.find("e8"), std::string::npos);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SpacesAndTable) {
    const auto s = run_json({"spaces", "list"});
    EXPECT_EQ(s["results"].size(), 6u);
    const auto t = run_json({"table"});
    ASSERT_EQ(t["results"].size(), 6u);
    EXPECT_EQ(t["results"][4]["sample_ell"], 11);
    EXPECT_EQ(t["results"][5]["iso_range"], "j <= n+m-37");
    for (const auto& c : t["checks"]) EXPECT_EQ(c["status"], "pass");
}

TEST(Cli, VerifySmallestGrassmannian) {
    const auto r = run({"verify", "--space", "gr:2,2", "--seed", "42"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("0 failed"), std::string::npos);
}

TEST(Cli, VerifyFlagsAfterSubcommand) {
    const auto j = run_json({"verify", "--space", "lagr:2", "--space", "quadric:3", "--samples", "20", "--seed", "7"});
    EXPECT_EQ(j["seed"], 7);
    EXPECT_EQ(j["inputs"]["samples"], 20);
    EXPECT_EQ(j["results"]["spaces"].size(), 2u);
    EXPECT_EQ(j["results"]["all_passed"], true);
    EXPECT_EQ(j["results"]["spaces"][0]["oracle_ratio"], "24");
}

TEST(Cli, CorruptedTableFailsVerification) {
    const auto r = run({"verify", "--space", "gr:2,2", "--corrupt-table", "--samples", "20"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("A3/antisymmetry"), std::string::npos);
    const auto j = run_json({"verify", "--space", "quadric:5", "--corrupt-table", "--samples", "20"}, 1);
    EXPECT_EQ(j["results"]["all_passed"], false);
}

TEST(Cli, QuietVerifyPrintsOnlySummary) {
    const auto r = run({"--quiet", "verify", "--space", "gr:1,2", "--samples", "10"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("PASS"), std::string::npos);
    EXPECT_NE(r.out.find("checks"), std::string::npos);
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--json", "positivity", "e6"},
             {"--json", "form", "lagr:2", "--vector", "2e1=1/3,e1+e2=-2"},
             {"--json", "range", "spinor:5", "-m", "7", "-n", "9"},
             {"--json", "table"},
             {"--json", "verify", "--space", "gr:1,3", "--samples", "10"}}) {
        const auto r = run(args);
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(serialize(Json::parse(r.out)), r.out);
    }
}

TEST(Cli, VerifyIsDeterministic) {
    const std::vector<std::string> args{"--json", "verify", "--space", "quadric:5", "--space", "e6", "--samples", "30"};
    EXPECT_EQ(run(args).out, run(args).out);
}
