#include <gtest/gtest.h>

#include <set>

#include "signedsum/constructions.hpp"
#include "signedsum/structure.hpp"
#include "signedsum/sumset.hpp"
#include "signedsum/verify.hpp"

using namespace signedsum;

namespace {

const std::set<std::string> kCatalog = {
    "C_INT_2FOLD",    "C_INT_DIRECT",    "C_INT_INV_EVEN_ODD", "C_RSS_CLASSES",  "EX_Z17",         "EX_Z41",
    "L_HSET_EQ_UNION", "L_INTERVAL_SHIFT", "L_RHO_PLAIN",       "L_RSS_INTERVAL", "L_SDEG_RAISE",   "L_SIGNED_EQ_UNION",
    "T_ANR",          "T_BP_2FOLD",      "T_BP_HFOLD",         "T_BP_INV",       "T_DEVOS",        "T_DUPAN",
    "T_FIELD_H2",     "T_FIELD_H3",      "T_FIELD_H4",         "T_GEN_TRANSLATE", "T_INV_AP",      "T_KEMP_INV",
    "T_NATH_DIRECT",  "T_PARITY_20",     "T_RHO_CLASS_A",      "T_RHO_S_BOUND",  "T_RSS_FIELD",    "T_RSS_FIELD_04",
    "T_RSS_GROUP",    "T_SYM_RESTRICT",
};

CheckReport run(const std::string& id, const std::string& grid = "", int workers = 1) {
    CheckSpec spec;
    spec.id = id;
    spec.grid = Grid::parse(grid);
    spec.workers = workers;
    return run_check(spec);
}

}  // namespace

TEST(Registry, MatchesCatalog) {
    auto checks = list_checks();
    std::set<std::string> ids;
    for (const auto& c : checks) {
        EXPECT_TRUE(ids.insert(c.id).second) << "duplicate " << c.id;
        EXPECT_FALSE(c.anchor.empty()) << c.id;
    }
    EXPECT_EQ(ids, kCatalog);
    EXPECT_GE(checks.size(), 24u);
    EXPECT_TRUE(std::is_sorted(checks.begin(), checks.end(),
                               [](const CheckInfo& a, const CheckInfo& b) { return a.id < b.id; }));
}

TEST(Grid, Parse) {
    auto g = Grid::parse("n=2..4;h=0,2..3; g=Z7,Z2xZ4,F3^2 ;H=1|0..2|1,3");
    EXPECT_EQ(g.ints("n"), (std::vector<std::int64_t>{2, 3, 4}));
    EXPECT_EQ(g.ints("h"), (std::vector<std::int64_t>{0, 2, 3}));
    EXPECT_EQ(g.groups("g").size(), 3u);
    EXPECT_EQ(g.groups("g")[2].to_string(), "F3^2");
    auto hs = g.hsets("H");
    ASSERT_EQ(hs.size(), 3u);
    EXPECT_EQ(hs[1].values(), (std::vector<int>{0, 1, 2}));
    EXPECT_TRUE(Grid::parse("n=5..2").ints("n").empty());
    EXPECT_EQ(Grid::parse("b=1;a=2").to_string(), "a=2;b=1");
    EXPECT_THROW(Grid::parse("n"), ParseError);
    EXPECT_THROW(Grid::parse("n=1..x").ints("n"), ParseError);
    EXPECT_THROW(Grid::parse("n=1").scalar("missing"), std::invalid_argument);
    auto merged = Grid::parse("a=1;b=2").merged(Grid::parse("b=3"));
    EXPECT_EQ(merged.to_string(), "a=1;b=3");
}

TEST(RunCheck, SignedEqUnion) {
    auto r = run("L_SIGNED_EQ_UNION");
    EXPECT_TRUE(r.passed());
    EXPECT_GT(r.cells, 0u);
    EXPECT_EQ(r.notes.at("negative_control"), "A={1,2} in Z, h=2: 2(A u -A) \\ 2±A = {0}");
}

TEST(RunCheck, Examples) {
    auto z17 = run("EX_Z17");
    EXPECT_TRUE(z17.passed());
    EXPECT_EQ(z17.notes.at("size"), "16");
    auto z41 = run("EX_Z41");
    EXPECT_TRUE(z41.passed());
    EXPECT_EQ(z41.notes.at("size"), "40");
}

TEST(RunCheck, EmptyGridPassesWithNoCells) {
    auto r = run("L_SIGNED_EQ_UNION", "n=3..2");
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.cells, 0u);
}

TEST(RunCheck, Errors) {
    EXPECT_THROW(run("NO_SUCH_CHECK"), std::invalid_argument);
    EXPECT_THROW(run("L_SIGNED_EQ_UNION", "n=2..x"), ParseError);
}

TEST(RunCheck, ReproducibleAcrossWorkers) {
    for (const char* id : {"T_RSS_FIELD", "T_RHO_S_BOUND", "C_INT_INV_EVEN_ODD"}) {
        const std::string grid = std::string(id) == "T_RHO_S_BOUND" ? "g=Z5,Z7" : "";
        auto a = run(id, grid, 1);
        auto b = run(id, grid, 4);
        EXPECT_EQ(a.cells, b.cells) << id;
        EXPECT_EQ(a.failures, b.failures) << id;
        EXPECT_EQ(a.notes, b.notes) << id;
        EXPECT_EQ(a.grid, b.grid) << id;
    }
}

TEST(RunCheck, SampledSeedIsRecorded) {
    CheckSpec spec;
    spec.id = "T_RSS_FIELD";
    spec.grid = Grid::parse("p=11");
    spec.count = 40;
    spec.seed = 7;
    auto r = run_check(spec);
    EXPECT_EQ(r.mode, CheckMode::Sampled);
    EXPECT_EQ(r.seed, 7u);
    EXPECT_EQ(r.count, 40u);
    EXPECT_EQ(r.cells, run_check(spec).cells);
    spec.seed.reset();
    EXPECT_EQ(run_check(spec).seed, kDefaultSeed);
}

TEST(RunCheck, EnvelopeIsEnforced) {
    EXPECT_THROW(run("T_DUPAN", "g=Z64;m=1..20"), std::runtime_error);
}

// The integer inverse corollary read literally with m = |A| is false as soon as
// A ∩ (−A) has two elements: A_abs is then shorter than A.
TEST(NegativeControl, LiteralAbsCorollary) {
    auto a = GroupSubset(GroupSpec::integers(), {-1, 1, 3});
    const std::int64_t m = 3, h = 3, s = static_cast<std::int64_t>(sdeg(a));
    ASSERT_EQ(s, 2);
    EXPECT_EQ(static_cast<std::int64_t>(signed_sumset(a, 3).size()), 2 * h * m - h * s - h + 1);
    auto abs = abs_set(a);
    EXPECT_EQ(abs.to_string(), "{1,3}");
    bool literal_holds = false;
    for (std::int64_t d = 1; d <= 3; ++d) literal_holds |= abs == odd_spaced_ap(d, m);
    EXPECT_FALSE(literal_holds);
    // With m' = |A_abs| the conclusion holds.
    EXPECT_EQ(abs, odd_spaced_ap(1, static_cast<std::int64_t>(abs.size())));
}
