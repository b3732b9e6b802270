#include "signedsum/structure.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace signedsum {

namespace {

// Number of x in A with −x outside A.
std::size_t unpaired(const GroupSubset& a) {
    const auto& g = a.group();
    std::size_t n = 0;
    for (Code x : a.codes())
        if (!a.contains(g.neg(x))) ++n;
    return n;
}

}  // namespace

std::string to_string(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::Sym: return "sym";
        case SymmetryClass::Asym: return "asym";
        case SymmetryClass::Nsym: return "nsym";
        case SymmetryClass::Other: return "other";
    }
    return {};
}

std::size_t sdeg(const GroupSubset& a) { return a.size() - unpaired(a); }

bool is_symmetric(const GroupSubset& a) { return unpaired(a) == 0; }

bool is_asymmetric(const GroupSubset& a) { return sdeg(a) == 0; }

// A∖{a} symmetric and A not: a is then the only element whose negative is missing.
bool is_near_symmetric(const GroupSubset& a) { return unpaired(a) == 1; }

bool in_class_a(const GroupSubset& a) {
    auto u = unpaired(a);
    return u <= 1 || u == a.size();
}

SymmetryClass classify(const GroupSubset& a) {
    if (a.empty()) throw std::invalid_argument("classify: empty set");
    auto u = unpaired(a);
    if (u == 0) return SymmetryClass::Sym;
    if (u == a.size()) return SymmetryClass::Asym;
    if (u == 1) return SymmetryClass::Nsym;
    return SymmetryClass::Other;
}

GroupSubset ap_set(const GroupSpec& g, const APWitness& w) {
    std::vector<Code> out;
    Code x = w.first;
    for (std::size_t i = 0; i < w.length; ++i) {
        out.push_back(x);
        x = g.add(x, w.diff);
    }
    GroupSubset s(g, std::move(out));
    if (s.size() != w.length) throw std::invalid_argument("progression terms are not distinct");
    return s;
}

std::optional<APWitness> detect_ap(const GroupSubset& a) {
    if (a.size() < 2) throw std::invalid_argument("detect_ap needs at least two elements");
    const auto& g = a.group();
    const auto k = a.size();
    auto codes = a.codes();
    if (!g.is_finite()) {
        Code d = codes[1] - codes[0];
        for (std::size_t i = 1; i + 1 < k; ++i)
            if (codes[i + 1] - codes[i] != d) return std::nullopt;
        return APWitness{codes[0], d, k};
    }
    const auto n = static_cast<Code>(g.order());
    for (Code d = 1; d < n; ++d) {
        // A progression with difference d has exactly one element whose
        // predecessor is missing, unless it fills a whole coset of <d>.
        std::size_t starts = 0;
        Code start = codes[0];
        for (Code x : codes)
            if (!a.contains(g.sub(x, d))) {
                if (starts++ == 0) start = x;
            }
        if (starts == 0) {
            if (element_order(g, d) == k) return APWitness{codes[0], d, k};
            continue;
        }
        if (starts != 1) continue;
        Code x = start;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            ok = a.contains(x);
            x = g.add(x, d);
        }
        if (ok && element_order(g, d) >= k) return APWitness{start, d, k};
    }
    return std::nullopt;
}

GroupSubset negate(const GroupSubset& a) { return dilate(a, -1); }

GroupSubset dilate(const GroupSubset& a, std::int64_t u) {
    const auto& g = a.group();
    std::vector<Code> out;
    out.reserve(a.size());
    for (Code x : a.codes()) out.push_back(g.mul(u, x));
    return GroupSubset(g, std::move(out));
}

GroupSubset translate(const GroupSubset& a, Code t) {
    const auto& g = a.group();
    std::vector<Code> out;
    out.reserve(a.size());
    for (Code x : a.codes()) out.push_back(g.add(x, t));
    return GroupSubset(g, std::move(out));
}

GroupSubset union_with_negation(const GroupSubset& a) {
    const auto& g = a.group();
    std::vector<Code> out(a.codes().begin(), a.codes().end());
    for (Code x : a.codes()) out.push_back(g.neg(x));
    GroupSubset u(g, std::move(out));
    assert(u.size() == 2 * a.size() - sdeg(a));
    return u;
}

GroupSubset intersect_with_negation(const GroupSubset& a) {
    const auto& g = a.group();
    std::vector<Code> out;
    for (Code x : a.codes())
        if (a.contains(g.neg(x))) out.push_back(x);
    return GroupSubset(g, std::move(out));
}

bool is_subset(const GroupSubset& a, const GroupSubset& b) {
    return std::includes(b.codes().begin(), b.codes().end(), a.codes().begin(), a.codes().end());
}

GroupSubset abs_set(const GroupSubset& a) {
    if (a.group().is_finite()) throw std::domain_error("abs_set is defined for subsets of Z only");
    std::vector<Code> out;
    for (Code x : a.codes()) out.push_back(x < 0 ? a.group().neg(x) : x);
    return GroupSubset(a.group(), std::move(out));
}

}  // namespace signedsum
