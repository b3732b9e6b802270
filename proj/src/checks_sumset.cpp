#include "check_support.hpp"
#include "signedsum/bounds.hpp"
#include "signedsum/constructions.hpp"
#include "signedsum/structure.hpp"

namespace signedsum::detail {

namespace {

GroupSubset with_zero(const GroupSubset& a) { return set_union(a, GroupSubset(a.group(), {0})); }

void signed_eq_union(CheckContext& ctx) {
    const auto hs = ctx.grid().ints("h");
    for (auto n : ctx.grid().ints("n")) {
        auto g = GroupSpec::cyclic(n);
        require_subset_envelope(g, g.order());
        auto sets = subsets_by_size(g, 1, g.order());
        ctx.parallel_for(sets.size(), [&](std::size_t i) {
            const auto& a = sets[i];
            if (sdeg(a) == 0) return;
            auto u = union_with_negation(a);
            for (auto h : hs) {
                ctx.cell();
                auto lhs = signed_sumset(a, static_cast<int>(h));
                auto rhs = hfold_sumset(u, static_cast<int>(h));
                if (lhs != rhs)
                    ctx.fail(params({{"g", g.to_string()}, {"h", num(h)}}), a.to_string(), rhs.to_string(),
                             lhs.to_string());
            }
        });
    }

    // Without the hypothesis the identity breaks: A = {1,2} over Z, h = 2.
    auto a = GroupSubset(GroupSpec::integers(), {1, 2});
    auto lhs = signed_sumset(a, 2);
    auto rhs = hfold_sumset(union_with_negation(a), 2);
    auto extra = set_difference(rhs, lhs);
    ctx.note("negative_control", "A={1,2} in Z, h=2: 2(A u -A) \\ 2±A = " + extra.to_string());
    if (!is_subset(lhs, rhs) || extra != GroupSubset(GroupSpec::integers(), {0}))
        ctx.fail("g=Z h=2 control", a.to_string(), "difference {0}", "difference " + extra.to_string());
}

void hset_eq_union(CheckContext& ctx) {
    const auto Hs = ctx.grid().hsets("H");
    for (auto n : ctx.grid().ints("n")) {
        auto g = GroupSpec::cyclic(n);
        require_subset_envelope(g, g.order());
        auto sets = subsets_by_size(g, 1, g.order());
        ctx.parallel_for(sets.size(), [&](std::size_t i) {
            const auto& a = sets[i];
            if (sdeg(a) == 0) return;
            auto u = union_with_negation(a);
            for (const auto& H : Hs) {
                ctx.cell();
                auto lhs = union_fold(a, H, SumsetKind::Signed);
                auto rhs = union_fold(u, H, SumsetKind::Plain);
                if (lhs != rhs)
                    ctx.fail(params({{"g", g.to_string()}, {"H", H.to_string()}}), a.to_string(), rhs.to_string(),
                             lhs.to_string());
            }
        });
    }
}

void interval_shift(CheckContext& ctx) {
    const auto hs = ctx.grid().ints("h");
    for (auto n : ctx.grid().ints("n")) {
        auto g = GroupSpec::cyclic(n);
        require_subset_envelope(g, g.order());
        auto sets = subsets_by_size(g, 2, g.order());
        ctx.parallel_for(sets.size(), [&](std::size_t i) {
            const auto& a = sets[i];
            auto a0 = with_zero(a);
            auto u0 = with_zero(union_with_negation(a));
            for (auto h : hs) {
                ctx.cell();
                const int hh = static_cast<int>(h);
                auto lhs = union_fold(a, MultiplicitySet::interval(0, hh), SumsetKind::Signed);
                auto mid = signed_sumset(a0, hh);
                auto rhs = hfold_sumset(u0, hh);
                auto p = params({{"g", g.to_string()}, {"h", num(h)}});
                if (lhs != mid) ctx.fail(p + " part=shift", a.to_string(), mid.to_string(), lhs.to_string());
                if (lhs != rhs) ctx.fail(p + " part=plain", a.to_string(), rhs.to_string(), lhs.to_string());
            }
        });
    }
}

void sdeg_raise_one(CheckContext& ctx, const GroupSubset& a, int h, const std::string& label) {
    const auto m = a.size();
    const auto s = sdeg(a);
    if (s == 0 || s + 2 > m) return;
    ctx.cell();
    auto p = params({{"g", label}, {"h", num(h)}});
    try {
        auto res = symmetrize(a, h);
        const auto& b = res.result;
        auto sb = sdeg(b);
        if (b.size() != m) ctx.fail(p, a.to_string(), "|B| = " + num(m), "|B| = " + num(b.size()));
        if (sb + 1 < m) ctx.fail(p, a.to_string(), "sdeg(B) in {m-1, m}", "sdeg(B) = " + num(sb));
        if (res.steps.size() > (m - s) / 2)
            ctx.fail(p, a.to_string(), "at most " + num((m - s) / 2) + " steps", num(res.steps.size()) + " steps");
        auto prev = s;
        for (const auto& step : res.steps) {
            auto cur = sdeg(step.after);
            if (cur != prev + 2)
                ctx.fail(p, step.after.to_string(), "sdeg " + num(prev + 2), "sdeg " + num(cur));
            prev = cur;
        }
        auto before = signed_sumset(a, h);
        auto after = signed_sumset(b, h);
        if (!is_subset(after, before)) ctx.fail(p, a.to_string(), "h±B ⊆ h±A", "B = " + b.to_string());
    } catch (const std::logic_error& e) {
        ctx.fail(p, a.to_string(), "symmetrize succeeds", e.what());
    }
}

void sdeg_raise(CheckContext& ctx) {
    const auto hs = ctx.grid().ints("h");
    const auto sizes = ctx.grid().ints("size");
    if (sizes.empty() || hs.empty()) return;
    const auto kmin = static_cast<std::size_t>(std::max<std::int64_t>(1, sizes.front()));
    const auto kmax = static_cast<std::size_t>(std::max<std::int64_t>(0, sizes.back()));
    for (auto n : ctx.grid().ints("n")) {
        auto g = GroupSpec::cyclic(n);
        require_subset_envelope(g, kmax);
        auto sets = subsets_by_size(g, kmin, kmax);
        ctx.parallel_for(sets.size(), [&](std::size_t i) {
            for (auto h : hs) sdeg_raise_one(ctx, sets[i], static_cast<int>(h), g.to_string());
        });
    }
    auto span = ctx.grid().scalar("zspan");
    auto zsets = integer_subsets(-span, span, kmin, kmax);
    ctx.parallel_for(zsets.size(), [&](std::size_t i) {
        for (auto h : hs) sdeg_raise_one(ctx, zsets[i], static_cast<int>(h), "Z");
    });
}

void example_z17(CheckContext& ctx) {
    auto g = GroupSpec::cyclic(17);
    auto a = GroupSubset(g, {1, 2, 3, 4, 5});
    auto s = restricted_signed_sumset(a, 2);
    auto bound = bound_restricted_field(5, ExtendedCount(17), 2, static_cast<std::int64_t>(sdeg(a)));
    ctx.cell();
    ctx.note("size", num(s.size()));
    ctx.note("bound", bound.value.to_string());
    if (s.size() != 16) ctx.fail("g=Z17 h=2", a.to_string(), "16", num(s.size()));
    if (bound.value > static_cast<std::int64_t>(s.size()))
        ctx.fail("g=Z17 h=2 bound", a.to_string(), "bound <= " + num(s.size()), bound.value.to_string());
}

void example_z41(CheckContext& ctx) {
    auto g = GroupSpec::cyclic(41);
    auto a = GroupSubset(g, {0, 1, 3, 5, 7, 9, 11, 13, 15});
    auto s = restricted_signed_sumset(a, 3);
    std::vector<Code> nonzero;
    for (Code c = 1; c < 41; ++c) nonzero.push_back(c);
    auto want = GroupSubset(g, nonzero);
    auto bound = bound_restricted_field(9, ExtendedCount(41), 3, static_cast<std::int64_t>(sdeg(a)));
    ctx.cell();
    ctx.note("size", num(s.size()));
    ctx.note("bound", bound.value.to_string());
    if (s != want) ctx.fail("g=Z41 h=3", a.to_string(), "Z41 \\ {0}", s.to_string());
    if (bound.value > static_cast<std::int64_t>(s.size()))
        ctx.fail("g=Z41 h=3 bound", a.to_string(), "bound <= " + num(s.size()), bound.value.to_string());
}

}  // namespace

void register_sumset_checks(std::vector<CheckDef>& out) {
    out.push_back({{"L_SIGNED_EQ_UNION", "h±A = h(A ∪ (−A)) whenever A ∩ (−A) ≠ ∅", "n=2..10;h=0..4"},
                   signed_eq_union});
    out.push_back({{"L_HSET_EQ_UNION", "H±A = H(A ∪ (−A)) whenever A ∩ (−A) ≠ ∅",
                    "n=2..9;H=0|1|2|3|0..2|1..3|0,2|1,3|0..3"},
                   hset_eq_union});
    out.push_back({{"L_INTERVAL_SHIFT", "[0,h]±A = h±(A ∪ {0}) = h(A ∪ (−A) ∪ {0}) for |A| >= 2", "n=2..10;h=0..3"},
                   interval_shift});
    out.push_back({{"L_SDEG_RAISE",
                    "A ∩ (−A) ≠ ∅, sdeg(A) <= |A|−2: some B with |B| = |A|, sdeg(B) ∈ {|A|−1, |A|}, h±B ⊆ h±A",
                    "n=3..10;h=1..3;size=2..6;zspan=4"},
                   sdeg_raise});
    out.push_back({{"EX_Z17", "A = {1,2,3,4,5} in Z17: |2±^A| = 16", ""}, example_z17});
    out.push_back({{"EX_Z41", "A = {0,1,3,5,...,15} in Z41: 3±^A = Z41 \\ {0}", ""}, example_z41});
}

}  // namespace signedsum::detail
