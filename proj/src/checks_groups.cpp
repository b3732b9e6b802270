#include <algorithm>

#include "check_support.hpp"
#include "mask_kernel.hpp"
#include "signedsum/bounds.hpp"
#include "signedsum/constructions.hpp"
#include "signedsum/structure.hpp"

namespace signedsum::detail {

namespace {

constexpr const char* kSmallGroups = "Z2,Z3,Z4,Z5,Z6,Z7,Z8,Z9,Z10,Z2xZ2,Z2xZ4,Z3xZ3,Z2xZ3,Z2xZ2xZ2";

std::int64_t finite_p(const GroupSpec& g) { return static_cast<std::int64_t>(p_of_group(g).value()); }

RhoQuery query(const GroupSpec& g, std::int64_t m, MultiplicitySet H, SumsetKind kind,
               ClassFilter filter = ClassFilter::all()) {
    RhoQuery q;
    q.group = g;
    q.m = static_cast<std::size_t>(m);
    q.H = std::move(H);
    q.kind = kind;
    q.filter = filter;
    return q;
}

std::string opt_str(const std::optional<RhoResult>& r) { return r ? num(r->value) : "empty class"; }

void devos(CheckContext& ctx) {
    const auto sizes = ctx.grid().ints("size");
    if (sizes.empty()) return;
    for (const auto& g : ctx.grid().groups("g")) {
        require_subset_envelope(g, static_cast<std::size_t>(sizes.back()));
        const auto p = p_of_group(g);
        auto sets = subsets_by_size(g, static_cast<std::size_t>(sizes.front()), static_cast<std::size_t>(sizes.back()));
        ctx.parallel_for(sets.size(), [&](std::size_t i) {
            const auto& a = sets[i];
            for (const auto& b : sets) {
                ctx.cell();
                auto size = static_cast<std::int64_t>(sum_of(a, b).size());
                auto bound = bound_devos(p, static_cast<std::int64_t>(a.size()), static_cast<std::int64_t>(b.size()));
                if (bound.value > size)
                    ctx.fail(params({{"g", g.to_string()}}), a.to_string() + " + " + b.to_string(),
                             ">= " + bound.value.to_string(), num(size));
            }
        });
    }
}

void rho_plain(CheckContext& ctx) {
    for (const auto& g : ctx.grid().groups("g")) {
        const auto p = p_of_group(g);
        for (auto m : ctx.grid().ints("m")) {
            if (m < 1 || static_cast<std::uint64_t>(m) > g.order()) continue;
            for (auto h : ctx.grid().ints("h")) {
                ctx.cell();
                auto r = ctx.rho(query(g, m, MultiplicitySet::single(static_cast<int>(h)), SumsetKind::Plain));
                auto b = bound_plagne(p, m, h);
                auto v = static_cast<std::int64_t>(r.value);
                auto ps = params({{"g", g.to_string()}, {"m", num(m)}, {"h", num(h)}});
                if (b.value > v) ctx.fail(ps, r.witness.to_string(), ">= " + b.value.to_string(), num(v));
                bool eq = p >= m;
                if ((b.value == v) != eq)
                    ctx.fail(ps + " part=equality", r.witness.to_string(),
                             eq ? "= " + b.value.to_string() : "> " + b.value.to_string(), num(v));
                auto again = hfold_sumset(r.witness, static_cast<int>(h)).size();
                if (again != r.value) ctx.fail(ps + " part=witness", r.witness.to_string(), num(r.value), num(again));
            }
        }
    }
}

void kemperman_inverse(CheckContext& ctx) {
    const auto sizes = ctx.grid().ints("size");
    const auto hs = ctx.grid().ints("h");
    if (sizes.empty()) return;
    for (auto p : ctx.grid().ints("p")) {
        if (!is_prime(p) || p > 61) throw std::invalid_argument("T_KEMP_INV needs primes p <= 61");
        const auto g = GroupSpec::cyclic(p);
        const MaskKernel k(g);
        auto sets = subsets_by_size(g, static_cast<std::size_t>(std::max<std::int64_t>(2, sizes.front())),
                                    static_cast<std::size_t>(sizes.back()));
        std::vector<Mask> masks;
        std::vector<std::uint64_t> diffs;  // bit d set iff the set is an AP with difference d
        for (const auto& a : sets) {
            Mask m = k.from_subset(a);
            masks.push_back(m);
            std::uint64_t ds = 0;
            for (Code d = 1; d < p; ++d) {
                Mask shifted = k.translate(m, d);
                if (std::popcount(m & ~shifted) == 1) ds |= std::uint64_t{1} << d;
            }
            diffs.push_back(ds);
        }
        for (auto h : hs) {
            if (h < 2) continue;
            const auto n = sets.size();
            const std::int64_t limit = h == 2 ? p - 1 : p;
            ctx.parallel_for(n, [&](std::size_t first) {
                std::vector<std::size_t> idx(static_cast<std::size_t>(h), 0);
                idx[0] = first;
                while (true) {
                    Mask s = masks[idx[0]];
                    std::uint64_t common = diffs[idx[0]];
                    std::int64_t total = static_cast<std::int64_t>(sets[idx[0]].size());
                    for (std::size_t j = 1; j < idx.size(); ++j) {
                        Mask t = 0;
                        for (Mask r = masks[idx[j]]; r; r &= r - 1) t |= k.translate(s, std::countr_zero(r));
                        s = t;
                        common &= diffs[idx[j]];
                        total += static_cast<std::int64_t>(sets[idx[j]].size());
                    }
                    const std::int64_t size = std::popcount(s);
                    if (size < limit) {
                        ctx.cell();
                        bool eq = size == total - h + 1;
                        if (eq != (common != 0)) {
                            std::string w;
                            for (auto j : idx) w += (w.empty() ? "" : " + ") + sets[j].to_string();
                            ctx.fail(params({{"p", num(p)}, {"h", num(h)}}), w,
                                     common ? "equality (common difference)" : "strict (no common difference)",
                                     num(size));
                        }
                    }
                    std::size_t j = idx.size();
                    while (j > 1 && idx[j - 1] + 1 == n) idx[--j] = 0;
                    if (j == 1) break;
                    ++idx[j - 1];
                }
            });
        }
    }
}

void rho_class_a(CheckContext& ctx) {
    const auto Hs = ctx.grid().hsets("H");
    for (const auto& g : ctx.grid().groups("g")) {
        for (auto m : ctx.grid().ints("m")) {
            if (m < 1 || static_cast<std::uint64_t>(m) > g.order()) continue;
            for (const auto& H : Hs) {
                ctx.cell();
                auto all = ctx.rho(query(g, m, H, SumsetKind::Signed));
                auto cls = ctx.try_rho(query(g, m, H, SumsetKind::Signed, ClassFilter::of(ClassFilter::Kind::ClassA)));
                if (!cls || cls->value != all.value)
                    ctx.fail(params({{"g", g.to_string()}, {"m", num(m)}, {"H", H.to_string()}}),
                             all.witness.to_string(), num(all.value), opt_str(cls));
            }
        }
    }
}

void rho_s_bound(CheckContext& ctx) {
    std::uint64_t constructions = 0;
    for (const auto& g : ctx.grid().groups("g")) {
        const auto p = p_of_group(g);
        const auto pv = finite_p(g);
        const auto n = static_cast<std::int64_t>(g.order());
        for (auto h : ctx.grid().ints("h")) {
            for (std::int64_t m = 1; m <= n; ++m) {
                for (std::int64_t s = 1; s <= m; ++s) {
                    auto b = bound_rho_s(p, m, h, s);
                    auto ps = params({{"g", g.to_string()}, {"m", num(m)}, {"h", num(h)}, {"s", num(s)}});
                    const bool eq = 2 * m - s <= pv;
                    auto r = ctx.try_rho(query(g, m, MultiplicitySet::single(static_cast<int>(h)), SumsetKind::Signed,
                                               ClassFilter::sdeg_equals(static_cast<std::size_t>(s))));
                    if (r) {
                        ctx.cell();
                        auto v = static_cast<std::int64_t>(r->value);
                        if (b.value > v) ctx.fail(ps, r->witness.to_string(), ">= " + b.value.to_string(), num(v));
                        if ((b.value == v) != eq)
                            ctx.fail(ps + " part=equality", r->witness.to_string(),
                                     eq ? "= " + b.value.to_string() : "> " + b.value.to_string(), num(v));
                    }
                    if (!eq) continue;
                    ctx.cell();
                    ++constructions;
                    auto w = rho_s_witness(g, m, s);
                    auto size = static_cast<std::int64_t>(signed_sumset(w, static_cast<int>(h)).size());
                    if (w.size() != static_cast<std::size_t>(m) || sdeg(w) != static_cast<std::size_t>(s) ||
                        !(b.value == size))
                        ctx.fail(ps + " part=construction", w.to_string(), b.value.to_string(),
                                 num(size) + " (|A|=" + num(w.size()) + ", sdeg=" + num(sdeg(w)) + ")");
                }
            }
        }
    }
    ctx.note("constructions", num(constructions));
}

void gen_translate(CheckContext& ctx) {
    const auto Hs = ctx.grid().hsets("H");
    const auto ms = ctx.grid().ints("m");
    if (ms.empty()) return;
    for (const auto& g : ctx.grid().groups("g")) {
        const auto mmax = static_cast<std::size_t>(ms.back());
        require_subset_envelope(g, mmax);
        auto sets = subsets_by_size(g, static_cast<std::size_t>(std::max<std::int64_t>(1, ms.front())), mmax);
        const GroupSubset zero(g, {0});
        ctx.parallel_for(sets.size(), [&](std::size_t i) {
            const auto& a = sets[i];
            for (Code x : a.codes()) {
                auto gen = subgroup_generated(g, GroupSubset(g, {x}));
                auto shifted = translate(a, g.neg(x));
                auto rest = set_difference(a, GroupSubset(g, {x}));
                bool first = set_intersection(gen, subgroup_generated(g, shifted)) == zero;
                bool second = set_intersection(gen, subgroup_generated(g, rest)) == zero;
                auto substituted = set_union(rest, zero);
                for (const auto& H : Hs) {
                    auto base = fast_size(a, H, SumsetKind::Signed);
                    auto ps = params({{"g", g.to_string()}, {"g0", g.format(x)}, {"H", H.to_string()}});
                    if (first) {
                        ctx.cell();
                        auto other = fast_size(shifted, H, SumsetKind::Signed);
                        if (base < other)
                            ctx.fail(ps + " part=translate", a.to_string(), ">= " + num(other), num(base));
                    }
                    if (second) {
                        ctx.cell();
                        auto other = fast_size(substituted, H, SumsetKind::Signed);
                        if (base < other)
                            ctx.fail(ps + " part=zero-substitute", a.to_string(), ">= " + num(other), num(base));
                    }
                }
            }
        });
    }
}

void inverse_ap(CheckContext& ctx) {
    const auto hs = ctx.grid().ints("h");
    const auto ms = ctx.grid().ints("m");
    if (ms.empty()) return;
    std::atomic<std::uint64_t> extremal{0};
    for (const auto& g : ctx.grid().groups("g")) {
        const auto p = finite_p(g);
        const auto mmax = static_cast<std::size_t>(ms.back());
        require_subset_envelope(g, mmax);
        auto sets = subsets_by_size(g, static_cast<std::size_t>(std::max<std::int64_t>(2, ms.front())), mmax);
        ctx.parallel_for(sets.size(), [&](std::size_t i) {
            const auto& a = sets[i];
            const auto s = static_cast<std::int64_t>(sdeg(a));
            if (s == 0) return;
            const auto m = static_cast<std::int64_t>(a.size());
            for (auto h : hs) {
                ctx.cell();
                auto v = static_cast<std::int64_t>(fast_size(a, MultiplicitySet::single(static_cast<int>(h)),
                                                             SumsetKind::Signed));
                bool hyp = h == 2 ? (v == 4 * m - 2 * s - 1 && v < p - 1)
                                  : (h >= 3 && v == 2 * h * m - h * s - h + 1 && v < p);
                if (!hyp) continue;
                ++extremal;
                auto u = union_with_negation(a);
                if (!detect_ap(u))
                    ctx.fail(params({{"g", g.to_string()}, {"h", num(h)}}), a.to_string(), "A ∪ (−A) is an AP",
                             u.to_string() + " is not");
            }
        });
    }
    ctx.note("extremal_sets", num(extremal.load()));
}

void parity(CheckContext& ctx) {
    for (const auto& g : ctx.grid().groups("g")) {
        if (p_of_group(g) < 3) throw std::invalid_argument("T_PARITY_20 needs p(G) >= 3, got " + g.to_string());
        const auto n = static_cast<std::int64_t>(g.order());
        for (auto h : ctx.grid().ints("h")) {
            for (auto m : ctx.grid().ints("m")) {
                if (m < 1 || m > n) continue;
                for (std::int64_t s = 1; s <= m; ++s) {
                    auto filter = ClassFilter::sdeg_equals(static_cast<std::size_t>(s));
                    auto lhs = ctx.try_rho(query(g, m, MultiplicitySet::interval(0, static_cast<int>(h)),
                                                 SumsetKind::Signed, filter));
                    std::optional<RhoResult> rhs;
                    if (s % 2 == 1) {
                        rhs = ctx.try_rho(query(g, m, MultiplicitySet::single(static_cast<int>(h)), SumsetKind::Signed,
                                                filter));
                    } else {
                        if (m + 1 > n) continue;
                        rhs = ctx.try_rho(query(g, m + 1, MultiplicitySet::single(static_cast<int>(h)),
                                                SumsetKind::Signed,
                                                ClassFilter::sdeg_equals(static_cast<std::size_t>(s + 1))));
                    }
                    if (!lhs && !rhs) continue;
                    ctx.cell();
                    if (!lhs || !rhs || lhs->value != rhs->value)
                        ctx.fail(params({{"g", g.to_string()}, {"m", num(m)}, {"h", num(h)}, {"s", num(s)}}),
                                 lhs ? lhs->witness.to_string() : "-", opt_str(rhs), opt_str(lhs));
                }
            }
        }
    }
}

void sym_restrict(CheckContext& ctx) {
    for (const auto& g : ctx.grid().groups("g")) {
        const auto n = static_cast<std::int64_t>(g.order());
        const bool odd = n % 2 == 1;
        const GroupSubset zero(g, {0});
        for (auto h : ctx.grid().ints("h")) {
            const int hh = static_cast<int>(h);
            const auto interval = MultiplicitySet::interval(0, hh);
            const auto single = MultiplicitySet::single(hh);
            auto min_plain_sym_zero = [&](std::int64_t size) -> std::optional<std::size_t> {
                std::optional<std::size_t> best;
                for_each_subset(g, static_cast<std::size_t>(size), ClassFilter::of(ClassFilter::Kind::Sym),
                                [&](const GroupSubset& a) {
                                    if (!a.contains(0)) return;
                                    auto v = fast_size(a, single, SumsetKind::Plain);
                                    if (!best || v < *best) best = v;
                                });
                return best;
            };
            for (auto m : ctx.grid().ints("m")) {
                if (m < 2 || m > n) continue;
                auto syms = enumerate_subsets(g, static_cast<std::size_t>(m), ClassFilter::of(ClassFilter::Kind::Sym));
                if (syms.empty()) continue;
                ctx.cell();
                auto all = ctx.rho(query(g, m, interval, SumsetKind::Signed));
                std::size_t p1 = SIZE_MAX, p2 = SIZE_MAX;
                for (const auto& a : syms) {
                    p1 = std::min(p1, fast_size(a, interval, SumsetKind::Signed));
                    p2 = std::min(p2, fast_size(set_union(a, zero), single, SumsetKind::Plain));
                }
                auto ps = params({{"g", g.to_string()}, {"m", num(m)}, {"h", num(h)}});
                const auto w = all.witness.to_string();
                if (p1 != all.value) ctx.fail(ps + " part=1", w, num(all.value), num(p1));
                if (p2 != all.value) ctx.fail(ps + " part=2", w, num(all.value), num(p2));
                if (m % 2 == 1) {
                    auto p3 = min_plain_sym_zero(m);
                    if (p3 && *p3 != all.value) ctx.fail(ps + " part=3", w, num(all.value), num(*p3));
                }
                if (odd) {
                    auto mm = 2 * (m / 2) + 1;
                    if (mm <= n) {
                        auto p4 = min_plain_sym_zero(mm);
                        if (!p4 || *p4 != all.value)
                            ctx.fail(ps + " part=4", w, num(all.value), p4 ? num(*p4) : "empty class");
                    }
                }
            }
        }
    }
}

}  // namespace

void register_group_checks(std::vector<CheckDef>& out) {
    const std::string small = kSmallGroups;
    out.push_back({{"T_DEVOS", "|A + B| >= min(p(G), |A| + |B| − 1)",
                    "g=Z2,Z3,Z4,Z5,Z6,Z7,Z8,Z9,Z2xZ2,Z2xZ4,Z3xZ3;size=1..3"},
                   devos});
    out.push_back({{"L_RHO_PLAIN", "ρ(G, m, h) >= min(p(G), hm − h + 1), with equality iff m <= p(G)",
                    "g=" + small + ",Z11,Z12;m=1..6;h=1..3"},
                   rho_plain});
    out.push_back({{"T_KEMP_INV",
                    "|A_1 + ... + A_h| = Σ|A_i| − h + 1 below p − 1 (h = 2) or p (h >= 3) iff the A_i are APs with a "
                    "common difference",
                    "p=5,7;h=2..3;size=2..3"},
                   kemperman_inverse});
    out.push_back({{"T_RHO_CLASS_A", "ρ±(G, m, H) = min{|H±A| : A ∈ Sym ∪ Asym ∪ Nsym}",
                    "g=" + small + ";m=1..5;H=1|2|3|0..2|1..2"},
                   rho_class_a});
    out.push_back({{"T_RHO_S_BOUND",
                    "ρ±^(s)(G, m, h) >= min(p(G), 2hm − hs − h + 1), equality iff 2m − s <= p(G); the explicit "
                    "constructions attain it",
                    "g=Z3,Z5,Z7,Z11;h=2..3"},
                   rho_s_bound});
    out.push_back({{"T_GEN_TRANSLATE",
                    "<g> ∩ <A − g> = {0} implies |H±A| >= |H±(A − g)|; <g> ∩ <A \\ {g}> = {0} implies |H±A| >= "
                    "|H±((A \\ {g}) ∪ {0})|",
                    "g=" + small + ",Z2xZ6;m=1..5;H=1|2|3|0..2|1..2"},
                   gen_translate});
    out.push_back({{"T_INV_AP",
                    "A ∩ (−A) ≠ ∅ and |2±A| = 4m − 2s − 1 < p(G) − 1, or h >= 3 and |h±A| = 2hm − hs − h + 1 < "
                    "p(G): A ∪ (−A) is an AP",
                    "g=" + small + ",Z2xZ6,Z11,Z13;m=2..5;h=2..4"},
                   inverse_ap});
    out.push_back({{"T_PARITY_20",
                    "p(G) >= 3: ρ±^(s)(G, m, [0,h]) = ρ±^(s)(G, m, h) for odd s, ρ±^(s+1)(G, m+1, h) for even s",
                    "g=Z3,Z5,Z7,Z9,Z3xZ3,Z11;h=1..3;m=1..6"},
                   parity});
    out.push_back({{"T_SYM_RESTRICT",
                    "ρ±(G, m, [0,h]) = min over Sym(G, m) of |[0,h]±A| = |h(A ∪ {0})|; = min{|hA| : A ∈ Sym(G, m), 0 "
                    "∈ A} for odd m; = min{|hA| : A ∈ Sym(G, 2⌊m/2⌋+1), 0 ∈ A} for odd |G|",
                    "g=" + small + ";h=1..3;m=2..10"},
                   sym_restrict});
}

}  // namespace signedsum::detail
