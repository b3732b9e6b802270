#include <gtest/gtest.h>

#include "signedsum/group.hpp"

using namespace signedsum;

namespace {

GroupElement el(std::vector<std::int64_t> c) { return GroupElement{std::move(c)}; }

}  // namespace

TEST(GroupSpec, ParseAndPrint) {
    for (const char* s : {"Z", "Z7", "Z2xZ4", "Z2xZ2xZ2", "F5", "F3^2"})
        EXPECT_EQ(GroupSpec::parse(s).to_string(), s);
    EXPECT_EQ(GroupSpec::parse("Z12").order(), 12u);
    EXPECT_EQ(GroupSpec::parse("F2^3").order(), 8u);
    EXPECT_EQ(GroupSpec::parse("F3^2").char_p(), 3);
    EXPECT_TRUE(GroupSpec::parse("Z9").is_cyclic());
    EXPECT_FALSE(GroupSpec::parse("Z3xZ3").is_cyclic());
    EXPECT_THROW(GroupSpec::integers().order(), std::domain_error);
}

TEST(GroupSpec, ParseErrorsCarryPosition) {
    try {
        GroupSpec::parse("Z2xQ4");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 3u);
    }
    EXPECT_THROW(GroupSpec::parse("Z1"), std::invalid_argument);
    EXPECT_THROW(GroupSpec::parse("F6"), std::invalid_argument);
    EXPECT_THROW(GroupSpec::parse(""), ParseError);
}

TEST(GroupSpec, POfGroup) {
    EXPECT_EQ(p_of_group(GroupSpec::cyclic(12)), ExtendedCount(2));
    EXPECT_TRUE(p_of_group(GroupSpec::integers()).is_infinite());
    EXPECT_EQ(p_of_group(GroupSpec::product({7, 49})), ExtendedCount(7));
    EXPECT_EQ(p_of_group(GroupSpec::field(3, 2)), ExtendedCount(3));
}

TEST(GroupSpec, Arithmetic) {
    auto z5 = GroupSpec::cyclic(5);
    EXPECT_EQ(add(z5, el({3}), el({4})), el({2}));
    EXPECT_EQ(neg(z5, el({2})), el({3}));
    auto z = GroupSpec::integers();
    EXPECT_EQ(add(z, el({3}), el({-4})), el({-1}));
    EXPECT_EQ(scalar_mul(z, 3, el({2})), el({6}));
    EXPECT_EQ(scalar_mul(GroupSpec::cyclic(6), -2, el({5})), el({2}));
    auto z2z3 = GroupSpec::product({2, 3});
    EXPECT_EQ(add(z2z3, el({1, 2}), el({1, 2})), el({0, 1}));
}

TEST(GroupSpec, IntegerOverflowIsChecked) {
    auto z = GroupSpec::integers();
    const Code big = std::numeric_limits<std::int64_t>::max();
    EXPECT_THROW(z.add(big, 1), std::overflow_error);
    EXPECT_THROW(z.mul(2, big), std::overflow_error);
    EXPECT_THROW(z.neg(std::numeric_limits<std::int64_t>::min()), std::overflow_error);
}

TEST(GroupSpec, CodesRoundTrip) {
    auto g = GroupSpec::product({2, 4, 3});
    for (Code c = 0; c < static_cast<Code>(g.order()); ++c) {
        EXPECT_EQ(g.encode(g.decode(c)), c);
        EXPECT_EQ(g.parse_element(g.format(c)), c);
        EXPECT_EQ(g.add(c, g.neg(c)), 0);
    }
}

TEST(GroupSpec, EnumerateElements) {
    auto z3 = enumerate_elements(GroupSpec::cyclic(3));
    EXPECT_EQ(z3, (std::vector<GroupElement>{el({0}), el({1}), el({2})}));
    auto v4 = enumerate_elements(GroupSpec::product({2, 2}));
    EXPECT_EQ(v4, (std::vector<GroupElement>{el({0, 0}), el({0, 1}), el({1, 0}), el({1, 1})}));
    EXPECT_THROW(enumerate_elements(GroupSpec::integers()), std::domain_error);
}

TEST(GroupSpec, SubgroupGenerated) {
    auto z6 = GroupSpec::cyclic(6);
    EXPECT_EQ(subgroup_generated(z6, GroupSubset(z6, {2})).to_string(), "{0,2,4}");
    EXPECT_EQ(subgroup_generated(z6, GroupSubset(z6)).to_string(), "{0}");
    auto v4 = GroupSpec::product({2, 2});
    auto all = subgroup_generated(v4, GroupSubset::parse(v4, "(1,0),(0,1)"));
    EXPECT_EQ(all.size(), 4u);
    EXPECT_THROW(subgroup_generated(GroupSpec::integers(), GroupSubset(GroupSpec::integers(), {1})),
                 std::domain_error);
}

TEST(GroupSpec, ElementOrder) {
    auto g = GroupSpec::product({2, 6});
    EXPECT_EQ(element_order(g, g.encode(el({1, 0}))), 2u);
    EXPECT_EQ(element_order(g, g.encode(el({1, 1}))), 6u);
    EXPECT_EQ(element_order(g, g.encode(el({0, 2}))), 3u);
    EXPECT_EQ(element_order(g, 0), 1u);
}

TEST(GroupSubset, ParseRendersCanonically) {
    auto z = GroupSpec::integers();
    auto a = GroupSubset::parse(z, "{3, -1, 2, 3}");
    EXPECT_EQ(a.to_string(), "{-1,2,3}");
    EXPECT_EQ(a.literal(), "-1,2,3");
    EXPECT_EQ(GroupSubset::parse(z, a.literal()), a);
    auto z7 = GroupSpec::cyclic(7);
    EXPECT_EQ(GroupSubset::parse(z7, "8,-1").to_string(), "{1,6}");
    auto v = GroupSpec::product({2, 3});
    EXPECT_EQ(GroupSubset::parse(v, "(1,2),(0,1)").to_string(), "{(0,1),(1,2)}");
    EXPECT_THROW(GroupSubset::parse(z, "1,,2"), ParseError);
    EXPECT_THROW(GroupSubset::parse(v, "(1,2,3)"), std::invalid_argument);
}

TEST(ExtendedCount, Ordering) {
    auto inf = ExtendedCount::infinity();
    EXPECT_TRUE(ExtendedCount(5) < inf);
    EXPECT_EQ(min(inf, std::int64_t{7}), ExtendedCount(7));
    EXPECT_EQ(min(ExtendedCount(3), std::int64_t{7}), ExtendedCount(3));
    EXPECT_TRUE(ExtendedCount(0) > std::int64_t{-1});
    EXPECT_EQ(inf.to_string(), "inf");
}

TEST(Primes, Basics) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(41));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(49));
    EXPECT_EQ(smallest_prime_factor(91), 7);
}
