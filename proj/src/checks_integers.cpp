#include "check_support.hpp"
#include "signedsum/bounds.hpp"
#include "signedsum/constructions.hpp"
#include "signedsum/structure.hpp"

namespace signedsum::detail {

namespace {

struct SizeRange {
    std::size_t lo = 1, hi = 0;
};

SizeRange size_range(const Grid& grid, const std::string& key) {
    auto v = grid.ints(key);
    if (v.empty()) return {};
    return {static_cast<std::size_t>(std::max<std::int64_t>(1, v.front())),
            static_cast<std::size_t>(std::max<std::int64_t>(0, v.back()))};
}

void nathanson_direct(CheckContext& ctx) {
    const auto hs = ctx.grid().ints("h");
    const auto ks = size_range(ctx.grid(), "k");
    auto sets = integer_subsets(0, ctx.grid().scalar("max"), ks.lo, ks.hi);
    ctx.parallel_for(sets.size(), [&](std::size_t i) {
        const auto& a = sets[i];
        const auto k = static_cast<std::int64_t>(a.size());
        for (auto h : hs) {
            ctx.cell();
            auto size = static_cast<std::int64_t>(hfold_sumset(a, static_cast<int>(h)).size());
            auto bound = h * k - h + 1;
            auto p = params({{"k", num(k)}, {"h", num(h)}});
            if (size < bound) ctx.fail(p, a.to_string(), ">= " + num(bound), num(size));
            bool ap = k >= 2 && detect_ap(a).has_value();
            if ((size == bound) != ap)
                ctx.fail(p + " part=equality", a.to_string(), ap ? "equality (AP)" : "strict (not AP)", num(size));
        }
    });
}

void bp_direct(CheckContext& ctx, const std::vector<std::int64_t>& hs) {
    const auto ks = size_range(ctx.grid(), "k");
    auto sets = integer_subsets(1, ctx.grid().scalar("max"), ks.lo, ks.hi);
    ctx.parallel_for(sets.size(), [&](std::size_t i) {
        const auto& a = sets[i];
        const auto k = static_cast<std::int64_t>(a.size());
        for (auto h : hs) {
            auto b = bound_positive_integers(k, h);
            if (!b.applicable) continue;
            ctx.cell();
            auto size = static_cast<std::int64_t>(signed_sumset(a, static_cast<int>(h)).size());
            if (b.value > size)
                ctx.fail(params({{"k", num(k)}, {"h", num(h)}}), a.to_string(), ">= " + b.value.to_string(),
                         num(size));
        }
    });
}

void bp_2fold(CheckContext& ctx) { bp_direct(ctx, {2}); }
void bp_hfold(CheckContext& ctx) { bp_direct(ctx, ctx.grid().ints("h")); }

void bp_inverse(CheckContext& ctx) {
    const auto hs = ctx.grid().ints("h");
    const auto ks = size_range(ctx.grid(), "k");
    auto sets = integer_subsets(1, ctx.grid().scalar("max"), ks.lo, ks.hi);
    std::atomic<std::uint64_t> extremal{0};
    ctx.parallel_for(sets.size(), [&](std::size_t i) {
        const auto& a = sets[i];
        const auto k = static_cast<std::int64_t>(a.size());
        for (auto h : hs) {
            auto b = bound_positive_integers(k, h);
            if (!b.applicable) continue;
            ctx.cell();
            auto size = static_cast<std::int64_t>(signed_sumset(a, static_cast<int>(h)).size());
            if (!(b.value == size)) continue;
            ++extremal;
            auto want = odd_spaced_ap(a.codes()[0], k);
            if (a != want)
                ctx.fail(params({{"k", num(k)}, {"h", num(h)}}), a.to_string(), want.to_string(), "not d*{1,3,...}");
        }
    });
    ctx.note("extremal_sets", num(extremal.load()));
}

// Expected shape of A_abs for an extremal set: d*[0, m'-1] when 0 is in A,
// d*{1, 3, ..., 2m'-1} otherwise, with m' = |A_abs|.
std::optional<GroupSubset> abs_shape(const GroupSubset& a) {
    auto ab = abs_set(a);
    const auto m = static_cast<std::int64_t>(ab.size());
    if (a.contains(0)) {
        if (m == 1) return std::nullopt;
        auto want = interval_set(ab.codes()[1], m);
        return want == ab ? std::nullopt : std::optional(want);
    }
    auto want = odd_spaced_ap(ab.codes()[0], m);
    return want == ab ? std::nullopt : std::optional(want);
}

void int_signed(CheckContext& ctx, const std::vector<std::int64_t>& hs, bool inverse) {
    const auto ms = size_range(ctx.grid(), "m");
    const auto span = ctx.grid().scalar("span");
    auto sets = integer_subsets(-span, span, ms.lo, ms.hi);
    std::atomic<std::uint64_t> extremal{0};
    ctx.parallel_for(sets.size(), [&](std::size_t i) {
        const auto& a = sets[i];
        const auto m = static_cast<std::int64_t>(a.size());
        const auto s = static_cast<std::int64_t>(sdeg(a));
        for (auto h : hs) {
            auto b = bound_integer_signed(m, h, s);
            if (!b.applicable) continue;
            ctx.cell();
            auto size = static_cast<std::int64_t>(signed_sumset(a, static_cast<int>(h)).size());
            auto p = params({{"m", num(m)}, {"h", num(h)}, {"s", num(s)}});
            if (b.value > size) ctx.fail(p, a.to_string(), ">= " + b.value.to_string(), num(size));
            if (inverse && b.value == size) {
                ++extremal;
                if (auto want = abs_shape(a))
                    ctx.fail(p + " part=inverse", a.to_string(), "A_abs = " + want->to_string(),
                             "A_abs = " + abs_set(a).to_string());
            }
        }
    });
    if (inverse) ctx.note("extremal_sets", num(extremal.load()));
}

void int_direct(CheckContext& ctx) { int_signed(ctx, ctx.grid().ints("h"), false); }
void int_inverse(CheckContext& ctx) { int_signed(ctx, ctx.grid().ints("h"), true); }
void int_2fold(CheckContext& ctx) { int_signed(ctx, {2}, true); }

}  // namespace

void register_integer_checks(std::vector<CheckDef>& out) {
    out.push_back({{"T_NATH_DIRECT", "A ⊂ Z, |A| = k: |hA| >= hk − h + 1, with equality iff A is a k-term AP",
                    "k=2..4;h=2..4;max=9"},
                   nathanson_direct});
    out.push_back({{"T_BP_2FOLD", "A ⊂ Z_{>0}, |A| = k >= 3: |2±A| >= 4k − 2", "k=3..5;max=12"}, bp_2fold});
    out.push_back({{"T_BP_HFOLD", "A ⊂ Z_{>0}, |A| = k >= 3, h >= 3: |h±A| >= 2hk − h + 1", "k=3..5;h=3..4;max=12"},
                   bp_hfold});
    out.push_back({{"T_BP_INV", "A ⊂ Z_{>0} attaining the positive-integer bound is d ∗ {1, 3, ..., 2k − 1}",
                    "k=3..5;h=2..4;max=12"},
                   bp_inverse});
    out.push_back({{"C_INT_DIRECT", "A ⊂ Z, |A| = m >= 3, h >= 3: |h±A| >= 2hm − hs − h + 1, s = |A ∩ (−A)|",
                    "m=3..5;h=3..4;span=6"},
                   int_direct});
    out.push_back({{"C_INT_INV_EVEN_ODD",
                    "A ⊂ Z attaining 2hm − hs − h + 1: A_abs = d ∗ [0, m' − 1] if 0 ∈ A, else d ∗ {1, 3, ..., 2m' − 1}",
                    "m=3..5;h=3..4;span=6"},
                   int_inverse});
    out.push_back({{"C_INT_2FOLD", "A ⊂ Z, |A| = m >= 3: |2±A| >= 4m − 2 (s = 0), 4m − 2s − 1 (s > 0); extremal shape",
                    "m=3..5;span=6"},
                   int_2fold});
}

}  // namespace signedsum::detail
