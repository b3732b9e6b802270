// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "signedsum/bounds.hpp"
#include "signedsum/constructions.hpp"
#include "signedsum/search.hpp"
#include "signedsum/structure.hpp"
#include "signedsum/sumset.hpp"
#include "signedsum/verify.hpp"

using namespace signedsum;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        if (ok) detail = what;
        ok = false;
    }
};

CheckReport check(const std::string& id, const std::string& grid, int workers = 1) {
    CheckSpec spec;
    spec.id = id;
    spec.grid = Grid::parse(grid);
    spec.workers = workers;
    return run_check(spec);
}

void require_green(Outcome& o, const CheckReport& r) {
    std::ostringstream s;
    s << r.id << ": " << r.failure_count << " failures over " << r.cells << " cells";
    if (!r.failures.empty()) s << "; first " << r.failures.front().params << " got " << r.failures.front().actual;
    o.require(r.passed() && r.cells > 0, s.str());
    if (o.ok) o.detail = s.str();
}

Outcome z17_example() {
    Outcome o;
    std::ostringstream out, err;
    int code = cli::run_cli({"--format", "json", "sumset", "-g", "Z17", "-A", "1,2,3,4,5", "-k", "restricted-signed",
                             "-H", "2"},
                            out, err);
    o.require(code == 0, "cli exit " + std::to_string(code) + ": " + err.str());
    o.require(out.str().find("\"size\": 16") != std::string::npos, "size is not 16");
    o.detail = "|2±^A| = 16";
    return o;
}

Outcome z41_example() {
    Outcome o;
    auto g = GroupSpec::cyclic(41);
    auto s = restricted_signed_sumset(GroupSubset(g, {0, 1, 3, 5, 7, 9, 11, 13, 15}), 3);
    std::vector<Code> nonzero(40);
    std::iota(nonzero.begin(), nonzero.end(), 1);
    o.require(s == GroupSubset(g, nonzero), "3±^A = " + s.to_string());
    o.detail = "3±^A = Z41 \\ {0}, size " + std::to_string(s.size());
    return o;
}

Outcome signed_eq_union() {
    Outcome o;
    require_green(o, check("L_SIGNED_EQ_UNION", "n=2..10;h=0..4"));
    auto a = GroupSubset(GroupSpec::integers(), {1, 2});
    auto diff = set_difference(hfold_sumset(union_with_negation(a), 2), signed_sumset(a, 2));
    o.require(diff.to_string() == "{0}", "negative control differs by " + diff.to_string());
    return o;
}

Outcome rho_s_grid() {
    Outcome o;
    require_green(o, check("T_RHO_S_BOUND", "g=Z3,Z5,Z7,Z11;h=2..3", 4));
    return o;
}

Outcome construction_tightness() {
    Outcome o;
    std::size_t cells = 0;
    for (std::int64_t p : {3, 5, 7, 11}) {
        auto g = GroupSpec::cyclic(p);
        for (int h : {2, 3})
            for (std::int64_t m = 1; m <= p; ++m)
                for (std::int64_t s = 1; s <= m; ++s) {
                    if (2 * m - s > p) continue;
                    ++cells;
                    auto w = rho_s_witness(g, m, s);
                    auto b = bound_rho_s(ExtendedCount(static_cast<std::uint64_t>(p)), m, h, s);
                    auto size = static_cast<std::int64_t>(signed_sumset(w, h).size());
                    o.require(w.size() == static_cast<std::size_t>(m) && sdeg(w) == static_cast<std::size_t>(s) &&
                                  b.value == size,
                              "p=" + std::to_string(p) + " m=" + std::to_string(m) + " s=" + std::to_string(s) +
                                  " h=" + std::to_string(h) + ": " + w.to_string());
                }
    }
    if (o.ok) o.detail = std::to_string(cells) + " cells attain the bound";
    return o;
}

Outcome coefficient_oracle() {
    Outcome o;
    std::size_t compared = 0;
    const int cap = 60;
    for (int h : {2, 3, 4})
        for (std::int64_t k = 2; k <= 6; ++k)
            for (std::int64_t l = 0; l <= 2; ++l) {
                const std::int64_t e = 2 * k - 1 - l;
                if (h * e > cap) continue;
                if (h == 3 && e < 1) continue;
                if (h == 4 && 2 * k - 3 - l < 0) continue;
                ExactInteger closed = h == 2 ? coeff_h2(k, l) : h == 3 ? coeff_h3(k, l) : coeff_h4(k, l);
                auto sym = symbolic_coefficient_oracle(h, k, l, cap);
                ++compared;
                o.require(closed == sym, "h=" + std::to_string(h) + " k=" + std::to_string(k) + " l=" +
                                             std::to_string(l) + ": " + closed.get_str() + " vs " + sym.get_str());
            }
    o.require(coeff_h4(2, 0) == 7440, "coeff_h4(2,0) != 7440");
    o.require(coeff_h3(2) == 540, "coeff_h3(2) != 540");
    if (o.ok) o.detail = std::to_string(compared) + " (h,k,l) triples equal";
    return o;
}

Outcome field_h2() {
    Outcome o;
    require_green(o, check("T_FIELD_H2", "p=5,7,11,13"));
    return o;
}

Outcome field_h3_z13() {
    Outcome o;
    require_green(o, check("T_FIELD_H3", "p=13;k=3"));
    auto g = GroupSpec::cyclic(13);
    std::size_t sets = 0;
    for (const auto& a : enumerate_subsets(g, 3, ClassFilter::of(ClassFilter::Kind::Asym))) {
        ++sets;
        o.require(signed_sumset(a, 3).size() == 13, "3±" + a.to_string() + " is not Z13");
    }
    if (o.ok) o.detail += "; " + std::to_string(sets) + " Asym 3-subsets cover Z13";
    return o;
}

Outcome rss_field_sampled() {
    Outcome o;
    auto r = check("T_RSS_FIELD", "p=11,13,17,19");
    require_green(o, r);
    o.require(r.count == 500, "count " + std::to_string(r.count));
    return o;
}

Outcome interval_lemmas() {
    Outcome o;
    auto shift = check("L_INTERVAL_SHIFT", "n=2..10;h=0..3");
    require_green(o, shift);
    auto rss = check("L_RSS_INTERVAL", "g=Z2,Z3,Z4,Z5,Z6,Z7,Z8,Z9,Z10;m=1..10");
    require_green(o, rss);
    if (o.ok) o.detail = shift.id + " " + std::to_string(shift.cells) + " cells, " + rss.id + " " +
                         std::to_string(rss.cells) + " cells, 0 failures";
    return o;
}

Outcome invariant_suite() {
    Outcome o;
    std::size_t sets = 0;
    const auto kinds = {SumsetKind::Plain, SumsetKind::Restricted, SumsetKind::Signed, SumsetKind::RestrictedSigned};
    for (std::int64_t n = 2; n <= 10; ++n) {
        auto g = GroupSpec::cyclic(n);
        for (std::size_t m = 1; m <= std::min<std::int64_t>(n, 5); ++m)
            for (const auto& a : oracle::subsets(g, m)) {
                ++sets;
                for (int h = 0; h <= 3; ++h) {
                    auto sig = signed_sumset(a, h), rsig = restricted_signed_sumset(a, h);
                    const std::string at = a.to_string() + " in Z" + std::to_string(n) + " h=" + std::to_string(h);
                    o.require(negate(sig) == sig, "symmetry " + at);
                    o.require(is_subset(hfold_sumset(a, h), sig), "hA ⊆ h±A " + at);
                    o.require(is_subset(restricted_sumset(a, h), rsig) && is_subset(rsig, sig), "restricted nesting " + at);
                    o.require(sig == oracle::sumset(a, h, SumsetKind::Signed), "DP vs naive " + at);
                    for (std::int64_t u = 2; u < n; ++u) {
                        if (std::gcd(u, n) != 1) continue;
                        for (auto kind : kinds)
                            o.require(sumset(dilate(a, u), h, kind) == dilate(sumset(a, h, kind), u),
                                      "equivariance u=" + std::to_string(u) + " " + at);
                    }
                }
            }
    }
    std::size_t queries = 0;
    for (const char* gs : {"Z9", "Z11", "Z12", "Z2xZ6"})
        for (std::size_t m : {3, 4})
            for (const char* f : {"all", "sdeg=1", "asym"}) {
                RhoQuery q;
                q.group = GroupSpec::parse(gs);
                q.m = m;
                q.kind = SumsetKind::Signed;
                q.H = MultiplicitySet::parse("2");
                q.filter = ClassFilter::parse(f);
                auto base = try_rho(q, 1);
                for (int w : {2, 4}) {
                    auto r = try_rho(q, w);
                    o.require(static_cast<bool>(r) == static_cast<bool>(base) &&
                                  (!r || (r->value == base->value && r->witness == base->witness)),
                              std::string("determinism ") + gs + " m=" + std::to_string(m) + " " + f);
                }
                ++queries;
            }
    if (o.ok)
        o.detail = std::to_string(sets) + " sets, " + std::to_string(queries) + " rho queries at 1/2/4 workers";
    return o;
}

Outcome positive_integer_sets() {
    Outcome o;
    auto direct = check("T_BP_HFOLD", "k=3..5;h=3;max=20");
    require_green(o, direct);
    auto inverse = check("T_BP_INV", "k=3..5;h=3;max=20");
    require_green(o, inverse);
    if (o.ok)
        o.detail = direct.id + " " + std::to_string(direct.cells) + " cells, " + inverse.id + " " +
                   std::to_string(inverse.cells) + " cells, " + inverse.notes["extremal_sets"] + " extremal sets";
    return o;
}

struct Criterion {
    int number;
    const char* title;
    double limit_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Z17 example via the sumset command", 1, z17_example},
        {2, "Z41 example", 1, z41_example},
        {3, "L_SIGNED_EQ_UNION exhaustive + negative control", 300, signed_eq_union},
        {4, "rho_s bound grid, p in {3,5,7,11}, h in {2,3}", 600, rho_s_grid},
        {5, "rho_s_witness tightness", 600, construction_tightness},
        {6, "coefficient closed forms vs symbolic oracle", 60, coefficient_oracle},
        {7, "T_FIELD_H2 exhaustive", 120, field_h2},
        {8, "T_FIELD_H3 at p=13, k=3", 60, field_h3_z13},
        {9, "T_RSS_FIELD sampled", 300, rss_field_sampled},
        {10, "interval lemmas exhaustive", 600, interval_lemmas},
        {11, "invariant suite", 600, invariant_suite},
        {12, "positive-integer direct and inverse, max 20", 600, positive_integer_sets},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limit_s) {
            o.ok = false;
            o.detail += " (runtime over " + std::to_string(static_cast<int>(c.limit_s)) + " s)";
        }
        failed += o.ok ? 0 : 1;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << std::setw(2) << c.number << "  " << c.title << "  ["
                  << std::fixed << std::setprecision(2) << secs << " s]  " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failed ? 1 : 0;
}
