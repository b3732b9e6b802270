#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "signedsum/bounds.hpp"
#include "signedsum/search.hpp"
#include "signedsum/sumset.hpp"
#include "signedsum/verify.hpp"

using namespace signedsum;
using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json cli_json(std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "json"});
    auto r = invoke(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
}

}  // namespace

TEST(Cli, SumsetMatchesLibrary) {
    auto j = cli_json({"sumset", "-g", "Z17", "-A", "1,2,3,4,5", "-k", "restricted-signed", "-H", "2"});
    auto lib = restricted_signed_sumset(GroupSubset(GroupSpec::cyclic(17), {1, 2, 3, 4, 5}), 2);
    EXPECT_EQ(j["size"], 16);
    EXPECT_EQ(j["result"], lib.to_string());

    auto z = invoke({"sumset", "-g", "Z", "-A", "1,2", "-k", "signed", "-H", "2"});
    EXPECT_EQ(z.code, 0);
    EXPECT_NE(z.out.find("{-4,-3,-2,-1,1,2,3,4}\nsize: 8"), std::string::npos);

    auto zero = cli_json({"sumset", "-g", "Z5", "-A", "1", "-k", "plain", "-H", "0"});
    EXPECT_EQ(zero["result"], "{0}");
}

TEST(Cli, RhoMatchesLibrary) {
    auto j = cli_json({"rho", "-g", "Z7", "-m", "3", "-k", "signed", "-H", "2", "--filter", "sdeg=1"});
    RhoQuery q;
    q.group = GroupSpec::cyclic(7);
    q.m = 3;
    q.kind = SumsetKind::Signed;
    q.H = MultiplicitySet::single(2);
    q.filter = ClassFilter::sdeg_equals(1);
    auto lib = rho(q);
    EXPECT_EQ(j["value"], 7);
    EXPECT_EQ(j["witness"], lib.witness.to_string());
    EXPECT_EQ(j["sets_examined"], lib.sets_examined);

    auto serial = cli_json({"rho", "-g", "Z7", "-m", "3", "-k", "signed", "-H", "2", "--filter", "sdeg=1", "--serial"});
    EXPECT_EQ(serial, j);
}

TEST(Cli, OutputIndependentOfWorkers) {
    std::vector<std::string> base = {"rho", "-g", "Z11", "-m", "4", "-H", "3"};
    auto one = base, four = base;
    one.insert(one.end(), {"--workers", "1"});
    four.insert(four.end(), {"--workers", "4"});
    EXPECT_EQ(invoke(one).out, invoke(four).out);
    auto v1 = invoke({"--workers", "1", "verify", "--check", "T_RSS_FIELD"});
    auto v4 = invoke({"--workers", "4", "verify", "--check", "T_RSS_FIELD"});
    EXPECT_EQ(v1.out, v4.out);
}

TEST(Cli, VerifyAllJson) {
    auto r = invoke({"--format", "json", "verify", "--check", "all"});
    EXPECT_EQ(r.code, 0) << r.out;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["checks"], 32);
    EXPECT_EQ(j["failed"], 0);
    for (const auto& rep : j["reports"]) {
        EXPECT_TRUE(rep.contains("anchor"));
        EXPECT_TRUE(rep.contains("cells"));
        EXPECT_TRUE(rep["failures"].is_array());
        EXPECT_FALSE(rep.contains("elapsed_ms"));
    }
    EXPECT_EQ(j["config"]["seed"], kDefaultSeed);
}

TEST(Cli, VerifyTimingIsOptIn) {
    auto j = cli_json({"--timing", "verify", "--check", "EX_Z17"});
    EXPECT_TRUE(j.contains("elapsed_ms"));
}

TEST(Cli, VerifyCsvAndGrid) {
    auto r = invoke({"--format", "csv", "verify", "--check", "L_SIGNED_EQ_UNION", "--grid", "n=2..4;h=0..2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("id,mode,cells,failures,passed\nL_SIGNED_EQ_UNION,exhaustive,"), std::string::npos);
    EXPECT_EQ(r.out.rfind("# config:", 0), 0u);
}

TEST(Cli, CoeffAndBound) {
    auto c = cli_json({"coeff", "--h", "4", "--k", "2", "--oracle", "--p", "37"});
    EXPECT_EQ(c["value"], "7440");
    EXPECT_EQ(c["factorization"], "2^4 * 3 * 5 * 31");
    EXPECT_EQ(c["oracle_agrees"], true);
    EXPECT_EQ(c["nonzero_mod_p"], true);

    auto b = cli_json({"bound", "--name", "restricted-field", "--k", "9", "--h", "3", "--s", "1", "--p", "37"});
    auto lib = bound_restricted_field(9, ExtendedCount(37), 3, 1);
    EXPECT_EQ(b["value"], lib.value.value());
    EXPECT_EQ(b["branch"], lib.branch);
    EXPECT_EQ(b["hypotheses"].size(), lib.hypotheses.size());

    auto inf = cli_json({"bound", "--name", "integer-signed", "--m", "3", "--h", "2", "--s", "1"});
    EXPECT_EQ(inf["p"], "inf");
    EXPECT_EQ(inf["value"], 9);
}

TEST(Cli, Construct) {
    auto j = cli_json({"construct", "--recipe", "rho_s_witness", "-g", "Z11", "--m", "3", "--s", "2"});
    EXPECT_EQ(j["result"], "{1,3,10}");
    EXPECT_EQ(j["sdeg"], 2);
    auto s = cli_json({"construct", "--recipe", "symmetrize", "-g", "Z7", "-A", "1,6,2,3", "--h", "2"});
    EXPECT_FALSE(s["steps"].empty());
}

TEST(Cli, Sweep) {
    const std::string path = ::testing::TempDir() + "sweep.json";
    std::ofstream(path) << R"({"queries":[{"group":["Z5","Z7"],"m":"2..3","kind":"signed","H":"2",
                             "filter":["all","sdeg=1"]},
                             {"group":"Z3","m":2,"filter":"sdeg=0"}]})";
    auto r = invoke({"sweep", path});
    EXPECT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line.rfind("# config:", 0), 0u);
    std::getline(lines, line);
    EXPECT_EQ(line, "group,m,kind,H,filter,status,value,witness,sets_examined,pruned_by_automorphism");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    EXPECT_EQ(rows, 9);
    EXPECT_NE(r.out.find("Z5,2,signed,2,all,ok,3,\"1,4\","), std::string::npos);
    EXPECT_NE(r.out.find("Z3,2,signed,1,sdeg=0,empty-class,,,,\n"), std::string::npos);
    std::remove(path.c_str());
}

TEST(Cli, ListChecks) {
    auto j = cli_json({"list-checks"});
    EXPECT_EQ(j["checks"].size(), 32u);
}

TEST(Cli, Errors) {
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"sumset", "-g", "Z5"}).code, 2);
    EXPECT_EQ(invoke({"sumset", "-g", "Z5", "-A", "1", "--bogus"}).code, 2);
    auto parse = invoke({"sumset", "-g", "Zq", "-A", "1"});
    EXPECT_EQ(parse.code, 2);
    EXPECT_NE(parse.err.find("parse error at column 2"), std::string::npos);
    auto env = invoke({"rho", "-g", "Z64", "-m", "20"});
    EXPECT_EQ(env.code, 2);
    EXPECT_NE(env.err.find("19619725782651120"), std::string::npos);
    EXPECT_EQ(invoke({"verify", "--check", "NOPE"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, ByteIdenticalReruns) {
    std::vector<std::string> args = {"--format", "json", "verify", "--check", "T_RSS_FIELD"};
    EXPECT_EQ(invoke(args).out, invoke(args).out);
}
