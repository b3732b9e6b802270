#include <random>

#include "check_support.hpp"
#include "signedsum/bounds.hpp"
#include "signedsum/structure.hpp"

namespace signedsum::detail {

namespace {

GroupSpec prime_field(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("field checks need prime p, got " + std::to_string(p));
    return GroupSpec::field(p);
}

// Every Asym k-subset of F_p, k in ks: |h±A| against bound_signed_field.
void signed_field(CheckContext& ctx, int h, const std::vector<std::int64_t>& ks, std::int64_t p) {
    const auto g = prime_field(p);
    const ExtendedCount pc(static_cast<std::uint64_t>(p));
    const auto H = MultiplicitySet::single(h);
    for (auto k : ks) {
        if (k < 1 || 2 * k > p - 1) continue;
        auto b = bound_signed_field(k, pc, h);
        if (!b.applicable) continue;
        require_subset_envelope(g, static_cast<std::size_t>(k));
        auto sets = enumerate_subsets(g, static_cast<std::size_t>(k), ClassFilter::of(ClassFilter::Kind::Asym));
        ctx.parallel_for(sets.size(), [&](std::size_t i) {
            ctx.cell();
            auto v = static_cast<std::int64_t>(fast_size(sets[i], H, SumsetKind::Signed));
            if (b.value > v)
                ctx.fail(params({{"p", num(p)}, {"k", num(k)}, {"h", num(h)}, {"branch", b.branch}}),
                         sets[i].to_string(), ">= " + b.value.to_string(), num(v));
        });
    }
}

void field_h2(CheckContext& ctx) {
    for (auto p : ctx.grid().ints("p")) {
        std::vector<std::int64_t> ks;
        for (std::int64_t k = 1; 2 * k <= p - 1; ++k) ks.push_back(k);
        signed_field(ctx, 2, ks, p);
    }
}

void field_h3(CheckContext& ctx) {
    for (auto p : ctx.grid().ints("p")) signed_field(ctx, 3, ctx.grid().ints("k"), p);
}

void field_h4(CheckContext& ctx) {
    for (auto p : ctx.grid().ints("p")) signed_field(ctx, 4, ctx.grid().ints("k"), p);
}

void rss_field(CheckContext& ctx) {
    struct Sample {
        GroupSubset a;
        int h;
    };
    std::uint64_t inapplicable = 0;
    for (auto p : ctx.grid().ints("p")) {
        const auto g = prime_field(p);
        std::mt19937_64 rng(ctx.seed() ^ static_cast<std::uint64_t>(p));
        std::vector<Sample> samples;
        std::vector<Code> pool(static_cast<std::size_t>(p));
        for (std::size_t i = 0; i < ctx.count(); ++i) {
            auto k = std::uniform_int_distribution<std::int64_t>(2, p)(rng);
            for (Code c = 0; c < p; ++c) pool[static_cast<std::size_t>(c)] = c;
            for (std::int64_t j = 0; j < k; ++j) {
                auto r = std::uniform_int_distribution<std::int64_t>(j, p - 1)(rng);
                std::swap(pool[static_cast<std::size_t>(j)], pool[static_cast<std::size_t>(r)]);
            }
            auto h = std::uniform_int_distribution<int>(2, static_cast<int>(std::min<std::int64_t>(4, k)))(rng);
            samples.push_back({GroupSubset(g, std::vector<Code>(pool.begin(), pool.begin() + k)), h});
        }
        const ExtendedCount pc(static_cast<std::uint64_t>(p));
        std::atomic<std::uint64_t> skipped{0};
        ctx.parallel_for(samples.size(), [&](std::size_t i) {
            const auto& [a, h] = samples[i];
            const auto k = static_cast<std::int64_t>(a.size());
            const auto s = static_cast<std::int64_t>(sdeg(a));
            auto b = bound_restricted_field(k, pc, h, s);
            if (!b.applicable) {
                ++skipped;
                return;
            }
            ctx.cell();
            auto v = static_cast<std::int64_t>(
                fast_size(a, MultiplicitySet::single(h), SumsetKind::RestrictedSigned));
            if (b.value > v)
                ctx.fail(params({{"p", num(p)}, {"k", num(k)}, {"h", num(h)}, {"s", num(s)}, {"branch", b.branch}}),
                         a.to_string(), ">= " + b.value.to_string(), num(v));
        });
        inapplicable += skipped;
    }
    ctx.note("inapplicable", num(inapplicable));
}

void anr(CheckContext& ctx) {
    const auto ms = ctx.grid().ints("m");
    if (ms.empty()) return;
    for (auto p : ctx.grid().ints("p")) {
        const auto g = prime_field(p);
        const ExtendedCount pc(static_cast<std::uint64_t>(p));
        const auto mmax = static_cast<std::size_t>(ms.back());
        require_subset_envelope(g, mmax);
        auto sets = subsets_by_size(g, static_cast<std::size_t>(std::max<std::int64_t>(1, ms.front())), mmax);
        ctx.parallel_for(sets.size(), [&](std::size_t i) {
            const auto& a = sets[i];
            const auto m = static_cast<std::int64_t>(a.size());
            for (std::int64_t h = 1; h <= m; ++h) {
                ctx.cell();
                auto b = bound_restricted_plain(pc, m, h);
                auto v = static_cast<std::int64_t>(
                    fast_size(a, MultiplicitySet::single(static_cast<int>(h)), SumsetKind::Restricted));
                if (b.value > v)
                    ctx.fail(params({{"p", num(p)}, {"m", num(m)}, {"h", num(h)}}), a.to_string(),
                             ">= " + b.value.to_string(), num(v));
            }
        });
    }
}

}  // namespace

void register_field_checks(std::vector<CheckDef>& out) {
    out.push_back({{"T_FIELD_H2", "A ∩ (−A) = ∅, |A| = k in F_p: |2±A| >= 4k − 2 if p >= 4k − 1, else p − 1",
                    "p=5,7,11,13"},
                   field_h2});
    out.push_back({{"T_FIELD_H3", "A ∩ (−A) = ∅, |A| = k >= 2, p > 6k − 6, p ≠ 8k − 7: |3±A| >= 6k − 5",
                    "p=7,11,13,17,19;k=2..4"},
                   field_h3});
    out.push_back({{"T_FIELD_H4",
                    "A ∩ (−A) = ∅, |A| = k >= 2: |4±A| >= 8k − 9 for p > 8k − 10 away from p = 32k² − 64k + 31 "
                    "unless p ≡ ±3 (mod 8); 8k − 9 − 4l below that",
                    "p=3,5,7,11,13,19,29;k=2..5"},
                   field_h4});
    out.push_back({{"T_RSS_FIELD",
                    "|h±^A| >= min(p, hk − h² + 1), θ + 1, or max(hk − h² + 1, θ − ℓh + 1) by case, θ = 2hk − "
                    "h(3h − 1)/2 − h|A ∩ (−A)|",
                    "p=11,13,17,19", CheckMode::Sampled, 500},
                   rss_field});
    out.push_back({{"T_ANR", "A ⊆ F_p, |A| = m: |h^A| >= min(p, hm − h² + 1)", "p=5,7,11,13;m=1..6"}, anr});
}

}  // namespace signedsum::detail
