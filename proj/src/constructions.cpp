#include "signedsum/constructions.hpp"

#include "signedsum/structure.hpp"
#include "signedsum/sumset.hpp"

namespace signedsum {

namespace {

void require_positive(std::int64_t v, const char* name) {
    if (v < 1) throw std::invalid_argument(std::string(name) + " must be >= 1");
}

std::int64_t param(const ConstructionRecipe& r, const std::string& key) {
    auto it = r.params.find(key);
    if (it == r.params.end()) throw std::invalid_argument("recipe " + r.name + " needs parameter " + key);
    return it->second;
}

}  // namespace

GroupSubset odd_spaced_ap(std::int64_t d, std::int64_t m) {
    require_positive(d, "d");
    require_positive(m, "m");
    auto z = GroupSpec::integers();
    std::vector<Code> out;
    for (std::int64_t i = 0; i < m; ++i) out.push_back(z.mul(d, 2 * i + 1));
    return GroupSubset(z, std::move(out));
}

GroupSubset interval_set(std::int64_t d, std::int64_t m) {
    require_positive(d, "d");
    require_positive(m, "m");
    auto z = GroupSpec::integers();
    std::vector<Code> out;
    for (std::int64_t i = 0; i < m; ++i) out.push_back(z.mul(d, i));
    return GroupSubset(z, std::move(out));
}

Code order_p_generator(const GroupSpec& g) {
    if (!g.is_finite()) throw std::domain_error("Z has no element of finite order p(G)");
    auto p = p_of_group(g).value();
    for (Code c = 1; c < static_cast<Code>(g.order()); ++c)
        if (element_order(g, c) == p) return c;
    throw std::logic_error("no element of order p(G)");
}

GroupSubset rho_s_witness(const GroupSpec& g, std::int64_t m, std::int64_t s) {
    if (s < 1 || s > m) throw std::invalid_argument("rho_s_witness needs 1 <= s <= m");
    auto p = p_of_group(g);
    if (p < 2 * m - s)
        throw std::invalid_argument("rho_s_witness needs 2m - s <= p(G), got 2m - s = " +
                                    std::to_string(2 * m - s) + ", p(G) = " + p.to_string());
    const Code g0 = g.is_finite() ? order_p_generator(g) : 1;
    std::vector<std::int64_t> tmpl;
    if (s % 2 == 1) {
        std::int64_t t = (s - 1) / 2;
        for (std::int64_t x = -t; x <= m - t - 1; ++x) tmpl.push_back(x);
    } else if (p == 2) {
        // m = s = 2: the odd template {−1, 1} collapses mod 2
        tmpl = {0, 1};
    } else {
        std::int64_t t = s / 2;
        for (std::int64_t x = -(2 * t - 1); x <= -1; x += 2) tmpl.push_back(x);
        for (std::int64_t x = 1; x <= 2 * (m - t) - 1; x += 2) tmpl.push_back(x);
    }
    std::vector<Code> out;
    for (auto x : tmpl) out.push_back(g.mul(x, g0));
    GroupSubset a(g, std::move(out));
    if (a.size() != static_cast<std::size_t>(m) || sdeg(a) != static_cast<std::size_t>(s))
        throw std::logic_error("rho_s_witness produced " + a.to_string() + " with wrong size or sdeg");
    return a;
}

GroupSubset subgroup_interval(const GroupSpec& g, std::int64_t m) {
    require_positive(m, "m");
    if (!g.is_finite()) throw std::domain_error("subgroup_interval needs a finite group");
    if (p_of_group(g) < m) throw std::invalid_argument("subgroup_interval needs m <= p(G)");
    Code g0 = order_p_generator(g);
    std::vector<Code> out;
    for (std::int64_t i = 0; i < m; ++i) out.push_back(g.mul(i, g0));
    return GroupSubset(g, std::move(out));
}

SymmetrizeResult symmetrize(const GroupSubset& a, int h) {
    if (h < 1) throw std::invalid_argument("symmetrize needs h >= 1");
    if (a.size() < 2) throw std::invalid_argument("symmetrize needs |A| >= 2");
    auto s0 = sdeg(a);
    if (s0 == 0) throw std::invalid_argument("symmetrize needs A ∩ (−A) nonempty");
    if (s0 + 2 > a.size()) throw std::invalid_argument("symmetrize needs sdeg(A) <= |A| - 2");

    const auto& g = a.group();
    SymmetrizeResult res{a, {}};
    auto prev_sum = signed_sumset(a, h);
    for (;;) {
        const auto& cur = res.result;
        std::vector<Code> lonely;
        for (Code x : cur.codes())
            if (!cur.contains(g.neg(x))) lonely.push_back(x);
        if (lonely.size() < 2) break;
        // smallest pair (a, b), a != b, in lexicographic order
        Code ra = lonely[0], rb = lonely[1];
        std::vector<Code> next;
        for (Code x : cur.codes())
            if (x != ra) next.push_back(x);
        next.push_back(g.neg(rb));
        GroupSubset nb(g, std::move(next));
        auto next_sum = signed_sumset(nb, h);
        if (!is_subset(next_sum, prev_sum))
            throw std::logic_error("symmetrize step " + nb.to_string() + " enlarged the signed sumset");
        res.steps.push_back({ra, g.neg(rb), nb});
        res.result = nb;
        prev_sum = std::move(next_sum);
    }
    return res;
}

std::vector<std::string> recipe_names() {
    return {"odd_spaced_ap", "interval_set", "rho_s_witness", "subgroup_interval"};
}

GroupSubset build(const ConstructionRecipe& r) {
    if (r.name == "odd_spaced_ap") return odd_spaced_ap(param(r, "d"), param(r, "m"));
    if (r.name == "interval_set") return interval_set(param(r, "d"), param(r, "m"));
    if (r.name == "rho_s_witness") return rho_s_witness(r.target_group, param(r, "m"), param(r, "s"));
    if (r.name == "subgroup_interval") return subgroup_interval(r.target_group, param(r, "m"));
    throw std::invalid_argument("unknown recipe '" + r.name + "'");
}

}  // namespace signedsum
