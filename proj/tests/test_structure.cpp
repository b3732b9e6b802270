#include <gtest/gtest.h>

#include "oracles.hpp"
#include "signedsum/structure.hpp"

using namespace signedsum;

namespace {

GroupSubset Zset(std::vector<Code> c) { return GroupSubset(GroupSpec::integers(), std::move(c)); }
GroupSubset Zn(std::int64_t n, std::vector<Code> c) { return GroupSubset(GroupSpec::cyclic(n), std::move(c)); }

}  // namespace

TEST(Structure, Sdeg) {
    EXPECT_EQ(sdeg(Zset({1, 2, 3})), 0u);
    EXPECT_EQ(sdeg(Zset({-1, 0, 1})), 3u);
    EXPECT_EQ(sdeg(Zn(5, {1, 4})), 2u);
    EXPECT_EQ(sdeg(Zn(6, {3})), 1u);
}

TEST(Structure, Classify) {
    EXPECT_EQ(classify(Zn(5, {1, 4})), SymmetryClass::Sym);
    EXPECT_EQ(classify(Zset({1, 2})), SymmetryClass::Asym);
    EXPECT_EQ(classify(Zset({-1, 1, 2})), SymmetryClass::Nsym);
    EXPECT_EQ(classify(Zset({-1, 1, 2, 3})), SymmetryClass::Other);
    // A one-element set other than {0} satisfies both Asym and Nsym.
    auto single = Zset({4});
    EXPECT_TRUE(is_asymmetric(single));
    EXPECT_TRUE(is_near_symmetric(single));
    EXPECT_EQ(classify(single), SymmetryClass::Asym);
    EXPECT_EQ(classify(Zset({0})), SymmetryClass::Sym);
    EXPECT_EQ(to_string(SymmetryClass::Nsym), "nsym");
}

TEST(Structure, ClassAIsUnionOfClasses) {
    auto g = GroupSpec::cyclic(8);
    for (std::size_t m = 1; m <= 4; ++m)
        for (const auto& a : oracle::subsets(g, m)) {
            EXPECT_EQ(in_class_a(a), is_symmetric(a) || is_asymmetric(a) || is_near_symmetric(a));
            EXPECT_EQ(is_symmetric(a), oracle::sdeg(a) == a.size());
            EXPECT_EQ(is_asymmetric(a), oracle::sdeg(a) == 0);
        }
}

TEST(Structure, DetectAP) {
    auto w = detect_ap(Zset({3, 5, 7}));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->first, 3);
    EXPECT_EQ(w->diff, 2);
    EXPECT_EQ(w->length, 3u);
    EXPECT_FALSE(detect_ap(Zset({0, 1, 3})));
    auto z5 = detect_ap(Zn(5, {0, 2, 4}));
    ASSERT_TRUE(z5);
    EXPECT_EQ(ap_set(GroupSpec::cyclic(5), *z5), Zn(5, {0, 2, 4}));
    EXPECT_THROW(detect_ap(Zset({1})), std::invalid_argument);
}

TEST(Structure, DetectAPAgreesWithScan) {
    auto g = GroupSpec::cyclic(9);
    for (std::size_t m = 2; m <= 5; ++m)
        for (const auto& a : oracle::subsets(g, m)) {
            bool any = false;
            for (Code d = 1; d < 9 && !any; ++d)
                for (Code first : a.codes()) {
                    std::vector<Code> terms;
                    for (std::size_t i = 0; i < m; ++i) terms.push_back(g.add(first, g.mul(static_cast<std::int64_t>(i), d)));
                    if (GroupSubset(g, terms) == a) any = true;
                }
            auto w = detect_ap(a);
            EXPECT_EQ(static_cast<bool>(w), any) << a.to_string();
            if (w) EXPECT_EQ(ap_set(g, *w), a);
        }
}

TEST(Structure, AbsSet) {
    EXPECT_EQ(abs_set(Zset({-3, -1, 2})).to_string(), "{1,2,3}");
    EXPECT_EQ(abs_set(Zset({0})).to_string(), "{0}");
    EXPECT_EQ(abs_set(Zset({-2, 2})).to_string(), "{2}");
    EXPECT_THROW(abs_set(Zn(5, {1})), std::domain_error);
}

TEST(Structure, Negation) {
    EXPECT_EQ(union_with_negation(Zset({1, 2})).to_string(), "{-2,-1,1,2}");
    EXPECT_TRUE(intersect_with_negation(Zset({1, 2})).empty());
    EXPECT_EQ(union_with_negation(Zn(5, {1, 4})).to_string(), "{1,4}");
    EXPECT_EQ(intersect_with_negation(Zn(5, {1, 4})).to_string(), "{1,4}");
    EXPECT_EQ(union_with_negation(Zset({0})).to_string(), "{0}");
    EXPECT_EQ(intersect_with_negation(Zset({0})).to_string(), "{0}");
    EXPECT_EQ(negate(Zn(7, {1, 2})).to_string(), "{5,6}");
}

TEST(Structure, DilateTranslate) {
    EXPECT_EQ(dilate(Zn(7, {1, 2}), 3).to_string(), "{3,6}");
    EXPECT_EQ(translate(Zn(7, {5, 6}), 3).to_string(), "{1,2}");
    EXPECT_EQ(dilate(Zset({1, 2}), -2).to_string(), "{-4,-2}");
    EXPECT_TRUE(is_subset(Zset({1}), Zset({1, 2})));
    EXPECT_FALSE(is_subset(Zset({3}), Zset({1, 2})));
}
