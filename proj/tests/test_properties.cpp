#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "signedsum/search.hpp"
#include "signedsum/structure.hpp"
#include "signedsum/sumset.hpp"

using namespace signedsum;

namespace {

const char* kGroups[] = {"Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z2xZ4", "Z3xZ3", "F2^3"};

template <class F>
void for_all_subsets(const GroupSpec& g, std::size_t max_m, F&& fn) {
    for (std::size_t m = 1; m <= std::min<std::size_t>(g.order(), max_m); ++m)
        for (const auto& a : oracle::subsets(g, m)) fn(a);
}

}  // namespace

class Invariants : public ::testing::TestWithParam<const char*> {};

TEST_P(Invariants, SignedSumsetIsSymmetric) {
    auto g = GroupSpec::parse(GetParam());
    for_all_subsets(g, 5, [&](const GroupSubset& a) {
        for (int h = 0; h <= 4; ++h) {
            auto s = signed_sumset(a, h);
            ASSERT_EQ(negate(s), s) << a.to_string() << " h=" << h;
            auto r = restricted_signed_sumset(a, h);
            ASSERT_EQ(negate(r), r) << a.to_string() << " h=" << h;
        }
    });
}

TEST_P(Invariants, Nesting) {
    auto g = GroupSpec::parse(GetParam());
    for_all_subsets(g, 5, [&](const GroupSubset& a) {
        for (int h = 0; h <= 4; ++h) {
            auto plain = hfold_sumset(a, h), sig = signed_sumset(a, h);
            auto res = restricted_sumset(a, h), rsig = restricted_signed_sumset(a, h);
            ASSERT_TRUE(is_subset(plain, sig)) << a.to_string() << " h=" << h;
            ASSERT_TRUE(is_subset(res, rsig)) << a.to_string() << " h=" << h;
            ASSERT_TRUE(is_subset(rsig, sig)) << a.to_string() << " h=" << h;
        }
    });
}

TEST_P(Invariants, DpMatchesNaive) {
    auto g = GroupSpec::parse(GetParam());
    for_all_subsets(g, 4, [&](const GroupSubset& a) {
        for (int h = 0; h <= 3; ++h) {
            ASSERT_EQ(signed_sumset(a, h), oracle::sumset(a, h, SumsetKind::Signed)) << a.to_string() << " h=" << h;
            ASSERT_EQ(restricted_signed_sumset(a, h), oracle::sumset(a, h, SumsetKind::RestrictedSigned))
                << a.to_string() << " h=" << h;
        }
    });
}

INSTANTIATE_TEST_SUITE_P(SmallGroups, Invariants, ::testing::ValuesIn(kGroups));

// x -> ux for u a unit commutes with every sumset kind.
TEST(Invariants, UnitEquivariance) {
    for (std::int64_t n : {5, 7, 8, 9, 10, 12}) {
        auto g = GroupSpec::cyclic(n);
        for (std::int64_t u = 1; u < n; ++u) {
            if (std::gcd(u, n) != 1) continue;
            for_all_subsets(g, 4, [&](const GroupSubset& a) {
                for (int h = 1; h <= 3; ++h)
                    for (auto kind :
                         {SumsetKind::Plain, SumsetKind::Restricted, SumsetKind::Signed, SumsetKind::RestrictedSigned})
                        ASSERT_EQ(sumset(dilate(a, u), h, kind), dilate(sumset(a, h, kind), u))
                            << "n=" << n << " u=" << u << " " << a.to_string();
            });
        }
    }
}

TEST(Invariants, TranslationOfPlainSumset) {
    auto g = GroupSpec::cyclic(9);
    for_all_subsets(g, 4, [&](const GroupSubset& a) {
        for (int h = 1; h <= 3; ++h)
            for (Code t : {1, 4})
                ASSERT_EQ(hfold_sumset(translate(a, t), h), translate(hfold_sumset(a, h), g.mul(h, t)));
    });
}

TEST(Invariants, FastPathsAgree) {
    auto g = GroupSpec::cyclic(10);
    for_all_subsets(g, 5, [&](const GroupSubset& a) {
        for (int h = 0; h <= 4; ++h) {
            ASSERT_EQ(interval_signed_sumset_fast(a, h),
                      union_fold(a, MultiplicitySet::interval(0, h), SumsetKind::Signed));
            if (sdeg(a) > 0) ASSERT_EQ(signed_sumset_fast(a, h), signed_sumset(a, h));
        }
    });
}

TEST(Determinism, RhoParallelAcrossWorkers) {
    const char* groups[] = {"Z9", "Z11", "Z12", "Z2xZ6", "Z3xZ3"};
    for (const char* gs : groups)
        for (std::size_t m : {2, 3, 4})
            for (auto kind : {SumsetKind::Signed, SumsetKind::RestrictedSigned})
                for (const char* H : {"2", "0..2"})
                    for (const char* f : {"all", "sdeg=1", "asym"}) {
                        RhoQuery q;
                        q.group = GroupSpec::parse(gs);
                        q.m = m;
                        q.kind = kind;
                        q.H = MultiplicitySet::parse(H);
                        q.filter = ClassFilter::parse(f);
                        auto base = try_rho(q, 1);
                        for (int w : {2, 4}) {
                            auto r = try_rho(q, w);
                            ASSERT_EQ(static_cast<bool>(r), static_cast<bool>(base));
                            if (!r) continue;
                            EXPECT_EQ(r->value, base->value) << gs << " m=" << m << " " << f;
                            EXPECT_EQ(r->witness, base->witness) << gs << " m=" << m << " " << f;
                            EXPECT_EQ(r->sets_examined, base->sets_examined);
                        }
                    }
}
