#include "signedsum/bounds.hpp"

#include <numeric>

namespace signedsum {

namespace {

ExtendedCount count(std::int64_t x) { return ExtendedCount(static_cast<std::uint64_t>(std::max<std::int64_t>(x, 0))); }

ExtendedCount min_p(ExtendedCount p, std::int64_t x) { return min(p, count(x)); }

std::int64_t mod8(ExtendedCount p) { return static_cast<std::int64_t>(p.value() % 8); }

std::string str(std::int64_t x) { return std::to_string(x); }

BoundResult inapplicable(std::string branch, std::vector<Hypothesis> hyps) {
    BoundResult r;
    r.applicable = false;
    r.branch = std::move(branch);
    r.hypotheses = std::move(hyps);
    return r;
}

std::int64_t need(const std::map<std::string, std::int64_t>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("missing parameter --" + key);
    return it->second;
}

}  // namespace

// ---------------------------------------------------------------------------
// Exact arithmetic

ExactInteger factorial(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    ExactInteger r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

ExactInteger binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("binomial with negative n");
    if (k < 0 || k > n) return 0;
    ExactInteger r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

ExactInteger multinomial(std::int64_t n, const std::vector<std::int64_t>& parts) {
    std::int64_t sum = 0;
    for (auto x : parts) {
        if (x < 0) throw std::invalid_argument("multinomial parts must be >= 0");
        sum += x;
    }
    if (sum != n) throw std::invalid_argument("multinomial parts sum to " + str(sum) + ", expected " + str(n));
    ExactInteger r = factorial(n);
    for (auto x : parts) r /= factorial(x);
    return r;
}

ExactInteger coeff_h2(std::int64_t k, std::int64_t l) {
    std::int64_t e = 2 * k - 1 - l;
    if (k < 1 || l < 0 || e < 0) throw std::invalid_argument("coeff_h2 needs k >= 1, 0 <= l <= 2k - 1");
    return binomial(2 * e, e);
}

ExactInteger coeff_h3(std::int64_t k, std::int64_t l) {
    std::int64_t e = 2 * k - 1 - l;
    if (k < 1 || l < 0 || e < 1) throw std::invalid_argument("coeff_h3 needs 2k - 1 - l >= 1");
    ExactInteger num = 2 * ExactInteger(4 * e - 3) * factorial(3 * e - 3);
    ExactInteger den = factorial(e) * factorial(e - 1) * factorial(e - 1);
    return num / den;
}

ExactInteger coeff_h4(std::int64_t k, std::int64_t l) {
    if (k < 2 || l < 0 || 2 * k - 3 - l < 0) throw std::invalid_argument("coeff_h4 needs k >= 2, l >= 0, 2k - 3 - l >= 0");
    ExactInteger kk = k, ll = l;
    ExactInteger poly = 32 * kk * kk - 64 * kk - 32 * kk * ll + 32 * ll + 8 * ll * ll + 31;
    ExactInteger num = 8 * factorial(8 * k - 10 - 4 * l) * poly;
    ExactInteger den = factorial(2 * k - 1 - l) * factorial(2 * k - 2 - l) * factorial(2 * k - 2 - l) *
                       factorial(2 * k - 3 - l);
    return num / den;
}

// ---------------------------------------------------------------------------
// Number theory

std::vector<PrimePower> factor_trial(const ExactInteger& n, std::uint64_t limit) {
    if (n <= 0) throw std::invalid_argument("factor_trial needs a positive integer");
    std::vector<PrimePower> out;
    ExactInteger rest = n;
    for (std::uint64_t d = 2; d <= limit && ExactInteger(d) * d <= rest; d += (d == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            rest /= d;
            ++e;
        }
        if (e) out.push_back({ExactInteger(d), e});
    }
    if (rest > 1) out.push_back({rest, 1});
    return out;
}

std::string factorization_string(const std::vector<PrimePower>& f) {
    if (f.empty()) return "1";
    std::string out;
    for (const auto& [b, e] : f) {
        if (!out.empty()) out += " * ";
        out += b.get_str();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string to_string(Residuosity r) {
    switch (r) {
        case Residuosity::Residue: return "residue";
        case Residuosity::NonResidue: return "non-residue";
        case Residuosity::Zero: return "zero";
    }
    return {};
}

Residuosity is_quadratic_residue(std::int64_t a, std::int64_t p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("is_quadratic_residue needs an odd prime");
    std::int64_t x = ((a % p) + p) % p;
    if (x == 0) return Residuosity::Zero;
    unsigned __int128 base = static_cast<unsigned __int128>(x), acc = 1;
    auto mod = static_cast<unsigned __int128>(p);
    for (std::int64_t e = (p - 1) / 2; e > 0; e >>= 1) {
        if (e & 1) acc = acc * base % mod;
        base = base * base % mod;
    }
    return acc == 1 ? Residuosity::Residue : Residuosity::NonResidue;
}

std::int64_t theta(std::int64_t k, std::int64_t h, std::int64_t s) {
    return 2 * h * k - h * (3 * h - 1) / 2 - h * s;
}

std::int64_t ell(std::int64_t theta_val, ExtendedCount p, std::int64_t h) {
    if (h < 1) throw std::invalid_argument("ell needs h >= 1");
    if (p.is_infinite() || !(p < theta_val + 1))
        throw std::domain_error("ell needs a finite p < theta + 1 (p = " + p.to_string() +
                                ", theta = " + str(theta_val) + ")");
    auto gap = theta_val + 1 - static_cast<std::int64_t>(p.value());
    return (gap + h - 1) / h;
}

std::int64_t liu_sun_K(std::int64_t k, std::int64_t m, std::int64_t h) {
    return (k - 1) * h - (m + 1) * h * (h - 1) / 2;
}

// ---------------------------------------------------------------------------
// Bounds

BoundResult bound_signed_field(std::int64_t k, ExtendedCount p, int h) {
    if (k < 1) throw std::invalid_argument("bound_signed_field needs k >= 1");
    BoundResult r;
    switch (h) {
        case 2: {
            bool big = p >= 4 * k - 1;
            r.hypotheses = {{"p >= 4k-1", big}};
            if (big) {
                r.value = count(4 * k - 2);
                r.branch = "4k-2";
            } else {
                r.value = count(static_cast<std::int64_t>(p.value()) - 1);
                r.branch = "p-1";
            }
            return r;
        }
        case 3: {
            bool k_ok = k >= 2, above = p > 6 * k - 6, avoid = !(p == 8 * k - 7);
            r.hypotheses = {{"k >= 2", k_ok}, {"p > 6k-6", above}, {"p != 8k-7", avoid}};
            if (!(k_ok && above && avoid)) return inapplicable("6k-5", r.hypotheses);
            r.value = count(6 * k - 5);
            r.branch = "6k-5";
            return r;
        }
        case 4: {
            const std::int64_t big = 32 * k * k - 64 * k + 31;
            const bool k_ok = k >= 2;
            const bool c1 = p > big;
            const bool c2 = p > 8 * k - 10 && p < big;
            const bool pm3 = !p.is_infinite() && (mod8(p) == 3 || mod8(p) == 5);
            const bool c3 = p > 8 * k - 10 && pm3;
            r.hypotheses = {{"k >= 2", k_ok},
                            {"32k^2-64k+31 < p", c1},
                            {"8k-10 < p < 32k^2-64k+31", c2},
                            {"8k-10 < p and p = +-3 mod 8", c3}};
            if (!k_ok) return inapplicable("8k-9", r.hypotheses);
            if (c1 || c2 || c3) {
                r.value = count(8 * k - 9);
                r.branch = "8k-9";
                return r;
            }
            r.hypotheses.push_back({"p = +-3 mod 8", pm3});
            if (!pm3) return inapplicable("8k-9-4l", r.hypotheses);
            // least l >= 1 with 8k-10-4l < p < 8k-10-4(l-1)
            const auto pv = static_cast<std::int64_t>(p.value());
            std::int64_t l = 1;
            while (!(8 * k - 10 - 4 * l < pv && pv < 8 * k - 10 - 4 * (l - 1))) {
                if (8 * k - 10 - 4 * (l - 1) < pv) return inapplicable("8k-9-4l", r.hypotheses);
                ++l;
            }
            bool fits = 2 * k - 3 - l >= 0;
            r.hypotheses.push_back({"l = " + str(l) + ", 2k-3-l >= 0", fits});
            if (!fits) return inapplicable("8k-9-4l", r.hypotheses);
            r.value = count(8 * k - 9 - 4 * l);
            r.branch = "8k-9-4l (l=" + str(l) + ")";
            return r;
        }
        default:
            throw std::invalid_argument("bound_signed_field supports h in {2,3,4}");
    }
}

BoundResult bound_restricted_field(std::int64_t k, ExtendedCount p, std::int64_t h, std::int64_t s) {
    if (h < 2 || h > k) throw std::invalid_argument("bound_restricted_field needs 2 <= h <= k");
    if (p < h - 1) throw std::invalid_argument("bound_restricted_field needs h - 1 <= p");
    if (s < 0 || s > k) throw std::invalid_argument("bound_restricted_field needs 0 <= s <= k");
    const std::int64_t t = theta(k, h, s);
    const std::int64_t a = h * k - h * h + 1;
    BoundResult r;
    const bool case1 = min_p(p, t + 1) <= a;
    const bool case2 = !case1 && a < t + 1 && p >= t + 1;
    r.hypotheses = {{"min(p, theta+1) <= hk-h^2+1", case1},
                    {"hk-h^2+1 < theta+1 <= p", case2},
                    {"hk-h^2+1 < p < theta+1", !case1 && !case2}};
    if (case1) {
        r.value = min_p(p, a);
        r.branch = "min(p,hk-h^2+1)";
    } else if (case2) {
        r.value = count(t + 1);
        r.branch = "theta+1";
    } else {
        auto l = ell(t, p, h);
        r.value = count(std::max(a, t - l * h + 1));
        r.branch = "max(hk-h^2+1,theta-lh+1) (l=" + str(l) + ")";
    }
    return r;
}

BoundResult bound_plagne(ExtendedCount p, std::int64_t m, std::int64_t h) {
    BoundResult r;
    r.value = min_p(p, h * m - h + 1);
    bool eq = p >= m;
    r.hypotheses = {{"m <= p", eq}};
    r.branch = eq ? "equality" : "strict";
    return r;
}

BoundResult bound_devos(ExtendedCount p, std::int64_t a, std::int64_t b) {
    BoundResult r;
    r.value = min_p(p, a + b - 1);
    r.branch = "min(p,|A|+|B|-1)";
    return r;
}

BoundResult bound_nathanson(std::int64_t k, std::int64_t h) {
    BoundResult r;
    r.value = count(h * k - h + 1);
    r.branch = "hk-h+1";
    r.hypotheses = {{"h >= 2", h >= 2}};
    r.applicable = h >= 2;
    return r;
}

BoundResult bound_rho_s(ExtendedCount p, std::int64_t m, std::int64_t h, std::int64_t s) {
    BoundResult r;
    bool ok = s >= 1 && s <= m && h >= 1;
    bool eq = p >= 2 * m - s;
    r.hypotheses = {{"1 <= s <= m", ok}, {"2m - s <= p", eq}};
    r.applicable = ok;
    r.value = min_p(p, 2 * h * m - h * s - h + 1);
    r.branch = eq ? "equality" : "strict";
    return r;
}

BoundResult bound_restricted_plain(ExtendedCount p, std::int64_t m, std::int64_t h) {
    BoundResult r;
    r.hypotheses = {{"1 <= h <= m", h >= 1 && h <= m}};
    r.applicable = h >= 1 && h <= m;
    r.value = min_p(p, h * m - h * h + 1);
    r.branch = "min(p,hm-h^2+1)";
    return r;
}

BoundResult bound_restricted_interval(ExtendedCount p, std::int64_t m, std::int64_t h, std::int64_t s,
                                      bool zero_in_a) {
    BoundResult r;
    r.hypotheses = {{"2 <= h <= m", h >= 2 && h <= m}, {"0 in A", zero_in_a}};
    r.applicable = h >= 2 && h <= m;
    std::int64_t base = 2 * h * m - h * h - h * s + 1;
    r.value = min_p(p, zero_in_a ? base : base + h);
    r.branch = zero_in_a ? "0 in A" : "0 not in A";
    return r;
}

BoundResult bound_restricted_class(ExtendedCount p, std::int64_t m, std::int64_t h, const std::string& cls) {
    BoundResult r;
    r.hypotheses = {{"2 <= h <= m", h >= 2 && h <= m}};
    r.applicable = h >= 2 && h <= m;
    r.branch = cls;
    if (cls == "asym") r.value = min_p(p, 2 * h * m - h * h + h + 1);
    else if (cls == "sym") r.value = min_p(p, h * m - h * h + 1);
    else if (cls == "nsym") r.value = min_p(p, h * m - h * h + h + 1);
    else throw std::invalid_argument("class must be asym, sym or nsym");
    return r;
}

BoundResult bound_positive_integers(std::int64_t k, std::int64_t h) {
    BoundResult r;
    r.hypotheses = {{"k >= 3", k >= 3}, {"h >= 2", h >= 2}};
    r.applicable = k >= 3 && h >= 2;
    if (h == 2) {
        r.value = count(4 * k - 2);
        r.branch = "4k-2";
    } else {
        r.value = count(2 * h * k - h + 1);
        r.branch = "2hk-h+1";
    }
    return r;
}

BoundResult bound_integer_signed(std::int64_t m, std::int64_t h, std::int64_t s) {
    BoundResult r;
    r.hypotheses = {{"m >= 3", m >= 3}, {"h >= 2", h >= 2}};
    r.applicable = m >= 3 && h >= 2;
    if (h == 2) {
        r.value = count(s == 0 ? 4 * m - 2 : 4 * m - 2 * s - 1);
        r.branch = s == 0 ? "4m-2" : "4m-2s-1";
    } else {
        r.value = count(2 * h * m - h * s - h + 1);
        r.branch = "2hm-hs-h+1";
    }
    return r;
}

std::vector<std::string> bound_names() {
    return {"signed-field", "restricted-field",    "plagne",           "devos",
            "nathanson",    "rho-s",               "restricted-plain", "restricted-interval",
            "restricted-class", "positive-integers", "integer-signed"};
}

BoundResult evaluate_bound(const std::string& name, const std::map<std::string, std::int64_t>& params,
                           ExtendedCount p, const std::string& cls) {
    auto get = [&](const char* key) { return need(params, key); };
    if (name == "signed-field") return bound_signed_field(get("k"), p, static_cast<int>(get("h")));
    if (name == "restricted-field") return bound_restricted_field(get("k"), p, get("h"), get("s"));
    if (name == "plagne") return bound_plagne(p, get("m"), get("h"));
    if (name == "devos") return bound_devos(p, get("a"), get("b"));
    if (name == "nathanson") return bound_nathanson(get("k"), get("h"));
    if (name == "rho-s") return bound_rho_s(p, get("m"), get("h"), get("s"));
    if (name == "restricted-plain") return bound_restricted_plain(p, get("m"), get("h"));
    if (name == "restricted-interval") {
        auto z = params.find("zero");
        return bound_restricted_interval(p, get("m"), get("h"), get("s"), z != params.end() && z->second != 0);
    }
    if (name == "restricted-class") return bound_restricted_class(p, get("m"), get("h"), cls);
    if (name == "positive-integers") return bound_positive_integers(get("k"), get("h"));
    if (name == "integer-signed") return bound_integer_signed(get("m"), get("h"), get("s"));
    throw std::invalid_argument("unknown bound '" + name + "'");
}

}  // namespace signedsum
