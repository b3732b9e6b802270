#pragma once

// Test-only reference implementations. Nothing here calls the library's
// sumset engines or search code: sumsets come from enumerating every
// coefficient vector lambda, and rho from a plain recursive subset scan.

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <vector>

#include "signedsum/group.hpp"
#include "signedsum/sumset.hpp"

namespace oracle {

using signedsum::Code;
using signedsum::GroupSpec;
using signedsum::GroupSubset;
using signedsum::SumsetKind;

// Every lambda in Z^k with sum |lambda_i| = h (signed kinds) or sum lambda_i = h,
// lambda_i >= 0 (plain kinds); restricted kinds cap |lambda_i| at 1.
inline void for_each_lambda(std::size_t k, int h, SumsetKind kind,
                            const std::function<void(const std::vector<int>&)>& fn) {
    const bool signs = kind == SumsetKind::Signed || kind == SumsetKind::RestrictedSigned;
    const int cap = signedsum::is_restricted(kind) ? 1 : h;
    std::vector<int> lam(k, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == k) {
            if (left == 0) fn(lam);
            return;
        }
        for (int a = 0; a <= std::min(cap, left); ++a) {
            lam[i] = a;
            rec(i + 1, left - a);
            if (signs && a > 0) {
                lam[i] = -a;
                rec(i + 1, left - a);
            }
        }
        lam[i] = 0;
    };
    rec(0, h);
}

inline GroupSubset sumset(const GroupSubset& a, int h, SumsetKind kind) {
    const auto& g = a.group();
    std::set<Code> out;
    const auto codes = a.codes();
    for_each_lambda(codes.size(), h, kind, [&](const std::vector<int>& lam) {
        Code x = g.zero();
        for (std::size_t i = 0; i < lam.size(); ++i) x = g.add(x, g.mul(lam[i], codes[i]));
        out.insert(x);
    });
    return GroupSubset(g, {out.begin(), out.end()});
}

inline GroupSubset union_fold(const GroupSubset& a, const std::vector<int>& H, SumsetKind kind) {
    std::set<Code> out;
    for (int h : H) {
        auto s = oracle::sumset(a, h, kind);
        out.insert(s.codes().begin(), s.codes().end());
    }
    return GroupSubset(a.group(), {out.begin(), out.end()});
}

// All m-subsets of a finite group, lexicographic in code order.
inline std::vector<GroupSubset> subsets(const GroupSpec& g, std::size_t m) {
    const auto n = static_cast<Code>(g.order());
    std::vector<GroupSubset> out;
    std::vector<Code> cur;
    std::function<void(Code)> rec = [&](Code start) {
        if (cur.size() == m) {
            out.emplace_back(g, cur);
            return;
        }
        for (Code c = start; c < n; ++c) {
            cur.push_back(c);
            rec(c + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

inline std::size_t sdeg(const GroupSubset& a) {
    std::size_t s = 0;
    for (Code c : a.codes()) s += a.contains(a.group().neg(c)) ? 1 : 0;
    return s;
}

struct RhoValue {
    std::size_t value = std::numeric_limits<std::size_t>::max();
    GroupSubset witness{GroupSpec::integers()};
    bool found = false;
};

// Minimum |H-fold sumset| over m-subsets passing `keep`, first witness in lex order.
inline RhoValue rho(const GroupSpec& g, std::size_t m, const std::vector<int>& H, SumsetKind kind,
                    const std::function<bool(const GroupSubset&)>& keep = nullptr) {
    RhoValue best;
    for (const auto& a : subsets(g, m)) {
        if (keep && !keep(a)) continue;
        auto v = oracle::union_fold(a, H, kind).size();
        if (!best.found || v < best.value) {
            best.value = v;
            best.witness = a;
            best.found = true;
        }
    }
    return best;
}

}  // namespace oracle
