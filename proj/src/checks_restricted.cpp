#include "check_support.hpp"
#include "signedsum/bounds.hpp"
#include "signedsum/structure.hpp"

namespace signedsum::detail {

namespace {

constexpr const char* kGroups = "Z2,Z3,Z4,Z5,Z6,Z7,Z8,Z9,Z10,Z2xZ2,Z2xZ4,Z3xZ3,Z2xZ3,Z2xZ2xZ2";

// Calls fn(g, subsets) for every grid group, subsets sized by the "m" key.
template <class F>
void over_groups(CheckContext& ctx, std::int64_t min_size, F&& fn) {
    const auto ms = ctx.grid().ints("m");
    if (ms.empty()) return;
    const auto lo = static_cast<std::size_t>(std::max(min_size, ms.front()));
    const auto hi = static_cast<std::size_t>(ms.back());
    for (const auto& g : ctx.grid().groups("g")) {
        require_subset_envelope(g, hi);
        fn(g, subsets_by_size(g, lo, hi));
    }
}

void rss_interval(CheckContext& ctx) {
    over_groups(ctx, 1, [&](const GroupSpec& g, const std::vector<GroupSubset>& sets) {
        const GroupSubset zero(g, {0});
        ctx.parallel_for(sets.size(), [&](std::size_t i) {
            const auto& a = sets[i];
            const bool asym = sdeg(a) == 0;
            auto u0 = set_union(union_with_negation(a), zero);
            for (int h = 1; h <= static_cast<int>(a.size()); ++h) {
                ctx.cell();
                auto H = MultiplicitySet::interval(0, h);
                auto lhs = union_fold(a, H, SumsetKind::RestrictedSigned);
                auto rhs = union_fold(u0, H, SumsetKind::Restricted);
                auto ps = params({{"g", g.to_string()}, {"h", num(h)}});
                if (!is_subset(rhs, lhs))
                    ctx.fail(ps + " part=containment", a.to_string(), rhs.to_string() + " ⊆ [0,h]±^A", lhs.to_string());
                if (asym && lhs != rhs) ctx.fail(ps + " part=equality", a.to_string(), rhs.to_string(), lhs.to_string());
            }
        });
    });
}

void rss_bound(CheckContext& ctx) {
    over_groups(ctx, 2, [&](const GroupSpec& g, const std::vector<GroupSubset>& sets) {
        const auto p = p_of_group(g);
        ctx.parallel_for(sets.size(), [&](std::size_t i) {
            const auto& a = sets[i];
            const auto m = static_cast<std::int64_t>(a.size());
            const auto s = static_cast<std::int64_t>(sdeg(a));
            const bool z = a.contains(0);
            for (std::int64_t h = 2; h <= m; ++h) {
                ctx.cell();
                auto b = bound_restricted_interval(p, m, h, s, z);
                auto v = static_cast<std::int64_t>(fast_size(a, MultiplicitySet::interval(0, static_cast<int>(h)),
                                                             SumsetKind::RestrictedSigned));
                if (b.value > v)
                    ctx.fail(params({{"g", g.to_string()}, {"m", num(m)}, {"h", num(h)}, {"s", num(s)}}),
                             a.to_string(), ">= " + b.value.to_string(), num(v));
            }
        });
    });
}

void rss_classes(CheckContext& ctx) {
    over_groups(ctx, 2, [&](const GroupSpec& g, const std::vector<GroupSubset>& sets) {
        const auto p = p_of_group(g);
        ctx.parallel_for(sets.size(), [&](std::size_t i) {
            const auto& a = sets[i];
            const auto m = static_cast<std::int64_t>(a.size());
            std::vector<std::string> classes;
            if (is_asymmetric(a)) classes.push_back("asym");
            if (is_symmetric(a)) classes.push_back("sym");
            if (is_near_symmetric(a)) classes.push_back("nsym");
            for (std::int64_t h = 2; h <= m; ++h) {
                std::optional<std::int64_t> v;
                for (const auto& cls : classes) {
                    ctx.cell();
                    if (!v)
                        v = static_cast<std::int64_t>(fast_size(a, MultiplicitySet::interval(0, static_cast<int>(h)),
                                                                SumsetKind::RestrictedSigned));
                    auto b = bound_restricted_class(p, m, h, cls);
                    if (b.value > *v)
                        ctx.fail(params({{"g", g.to_string()}, {"m", num(m)}, {"h", num(h)}, {"class", cls}}),
                                 a.to_string(), ">= " + b.value.to_string(), num(*v));
                }
            }
        });
    });
}

void dupan(CheckContext& ctx) {
    over_groups(ctx, 1, [&](const GroupSpec& g, const std::vector<GroupSubset>& sets) {
        const auto p = p_of_group(g);
        ctx.parallel_for(sets.size(), [&](std::size_t i) {
            const auto& a = sets[i];
            const auto m = static_cast<std::int64_t>(a.size());
            for (std::int64_t h = 1; h <= m; ++h) {
                ctx.cell();
                auto b = bound_restricted_plain(p, m, h);
                auto v = static_cast<std::int64_t>(
                    fast_size(a, MultiplicitySet::single(static_cast<int>(h)), SumsetKind::Restricted));
                if (b.value > v)
                    ctx.fail(params({{"g", g.to_string()}, {"m", num(m)}, {"h", num(h)}}), a.to_string(),
                             ">= " + b.value.to_string(), num(v));
            }
        });
    });
}

}  // namespace

void register_restricted_checks(std::vector<CheckDef>& out) {
    const std::string groups = kGroups;
    out.push_back({{"L_RSS_INTERVAL", "[0,h]±^A ⊇ [0,h]^(A ∪ (−A) ∪ {0}), with equality when A ∩ (−A) = ∅",
                    "g=" + groups + ";m=1..5"},
                   rss_interval});
    out.push_back({{"T_RSS_GROUP", "|[0,h]±^A| >= min(p(G), 2hm − h² − h|A ∩ (−A)| + 1), plus h when 0 ∉ A",
                    "g=" + groups + ",Z11,Z12,Z2xZ6;m=2..6"},
                   rss_bound});
    out.push_back({{"T_RSS_FIELD_04", "in F_p^r: |[0,h]±^A| >= min(p, 2hm − h² − h|A ∩ (−A)| + 1), plus h when 0 ∉ A",
                    "g=F5,F7,F11,F13,F2^2,F2^3,F3^2;m=2..5"},
                   rss_bound});
    out.push_back({{"C_RSS_CLASSES",
                    "|[0,h]±^A| >= min(p(G), 2hm − h² + h + 1) (asym), min(p(G), hm − h² + 1) (sym), min(p(G), "
                    "hm − h² + h + 1) (nsym)",
                    "g=" + groups + ",Z11;m=2..6"},
                   rss_classes});
    out.push_back({{"T_DUPAN", "|h^A| >= min(p(G), h|A| − h² + 1)", "g=" + groups + ",Z11,Z12,Z2xZ6;m=1..6"}, dupan});
}

}  // namespace signedsum::detail
