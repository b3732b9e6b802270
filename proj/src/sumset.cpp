#include "signedsum/sumset.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>

namespace signedsum {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

// Deduplicating sink for codes; dense marks for small finite groups.
class Collector {
public:
    explicit Collector(const GroupSpec& g) : dense_(g.is_finite() && g.order() <= kDenseLimit) {
        if (dense_) mark_.assign(g.order(), 0);
    }

    void insert(Code c) {
        if (dense_) {
            if (mark_[static_cast<std::size_t>(c)]) return;
            mark_[static_cast<std::size_t>(c)] = 1;
        }
        items_.push_back(c);
    }

    std::vector<Code> take() {
        std::sort(items_.begin(), items_.end());
        if (dense_) {
            for (auto c : items_) mark_[static_cast<std::size_t>(c)] = 0;
        } else {
            items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
        }
        std::vector<Code> out;
        out.swap(items_);
        return out;
    }

private:
    bool dense_;
    std::vector<std::uint8_t> mark_;
    std::vector<Code> items_;
};

void require_nonempty(const GroupSubset& a, int h) {
    if (a.empty()) throw std::invalid_argument("sumset of the empty set is undefined");
    if (h < 0) throw std::invalid_argument("multiplicity h must be >= 0");
}

std::vector<Code> merge_sorted(const std::vector<Code>& x, const std::vector<Code>& y) {
    std::vector<Code> out;
    out.reserve(x.size() + y.size());
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

// Shared DP for the two restricted kinds: layer c holds sums of c distinct elements.
GroupSubset restricted_dp(const GroupSubset& a, int h, bool with_signs) {
    require_nonempty(a, h);
    const auto& g = a.group();
    if (static_cast<std::size_t>(h) > a.size()) return GroupSubset(g);
    std::vector<std::vector<Code>> layer(static_cast<std::size_t>(h) + 1);
    layer[0] = {g.zero()};
    Collector col(g);
    std::size_t seen = 0;
    for (Code x : a.codes()) {
        ++seen;
        Code nx = g.neg(x);
        int top = static_cast<int>(std::min<std::size_t>(seen, static_cast<std::size_t>(h)));
        for (int c = top; c >= 1; --c) {
            const auto& prev = layer[static_cast<std::size_t>(c) - 1];
            if (prev.empty()) continue;
            for (Code s : layer[static_cast<std::size_t>(c)]) col.insert(s);
            for (Code s : prev) {
                col.insert(g.add(s, x));
                if (with_signs) col.insert(g.add(s, nx));
            }
            layer[static_cast<std::size_t>(c)] = col.take();
        }
    }
    return GroupSubset(g, std::move(layer[static_cast<std::size_t>(h)]));
}

}  // namespace

// ---------------------------------------------------------------------------

SumsetKind parse_kind(std::string_view text) {
    if (text == "plain") return SumsetKind::Plain;
    if (text == "restricted") return SumsetKind::Restricted;
    if (text == "signed") return SumsetKind::Signed;
    if (text == "restricted-signed") return SumsetKind::RestrictedSigned;
    throw ParseError("unknown sumset kind '" + std::string(text) +
                         "' (expected plain, restricted, signed or restricted-signed)",
                     0);
}

std::string to_string(SumsetKind k) {
    switch (k) {
        case SumsetKind::Plain: return "plain";
        case SumsetKind::Restricted: return "restricted";
        case SumsetKind::Signed: return "signed";
        case SumsetKind::RestrictedSigned: return "restricted-signed";
    }
    return {};
}

MultiplicitySet::MultiplicitySet(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("multiplicity set H must be nonempty");
    for (int h : values_)
        if (h < 0) throw std::invalid_argument("multiplicities must be >= 0");
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

MultiplicitySet MultiplicitySet::interval(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("empty multiplicity interval");
    std::vector<int> v;
    for (int h = lo; h <= hi; ++h) v.push_back(h);
    return MultiplicitySet(std::move(v));
}

MultiplicitySet MultiplicitySet::parse(std::string_view text) {
    auto num = [&](std::string_view s, std::size_t off) {
        int v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || p != s.data() + s.size())
            throw ParseError("invalid multiplicity '" + std::string(s) + "'", off);
        if (v < 0) throw ParseError("multiplicities must be >= 0", off);
        return v;
    };
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(num(item, start));
        } else {
            int lo = num(item.substr(0, dots), start);
            int hi = num(item.substr(dots + 2), start + dots + 2);
            if (lo > hi) throw ParseError("empty range", start);
            for (int h = lo; h <= hi; ++h) out.push_back(h);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return MultiplicitySet(std::move(out));
}

bool MultiplicitySet::is_zero_interval() const {
    return values_.front() == 0 && values_.back() == static_cast<int>(values_.size()) - 1;
}

std::string MultiplicitySet::to_string() const {
    if (values_.size() > 2 && values_.back() - values_.front() == static_cast<int>(values_.size()) - 1)
        return std::to_string(values_.front()) + ".." + std::to_string(values_.back());
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------

GroupSubset hfold_sumset(const GroupSubset& a, int h) {
    require_nonempty(a, h);
    const auto& g = a.group();
    std::vector<Code> cur{g.zero()};
    Collector col(g);
    for (int step = 0; step < h; ++step) {
        for (Code s : cur)
            for (Code x : a.codes()) col.insert(g.add(s, x));
        cur = col.take();
    }
    return GroupSubset(g, std::move(cur));
}

GroupSubset restricted_sumset(const GroupSubset& a, int h) { return restricted_dp(a, h, false); }

GroupSubset restricted_signed_sumset(const GroupSubset& a, int h) { return restricted_dp(a, h, true); }

GroupSubset signed_sumset(const GroupSubset& a, int h) {
    require_nonempty(a, h);
    const auto& g = a.group();
    const auto H = static_cast<std::size_t>(h);
    // layer[w]: sums over the processed prefix with total absolute weight w.
    std::vector<std::vector<Code>> layer(H + 1);
    layer[0] = {g.zero()};
    Collector col(g);
    std::vector<Code> plus(H + 1), minus(H + 1);
    for (Code x : a.codes()) {
        for (std::size_t j = 0; j <= H; ++j) {
            plus[j] = g.mul(static_cast<std::int64_t>(j), x);
            minus[j] = g.neg(plus[j]);
        }
        std::vector<std::vector<Code>> next(H + 1);
        for (std::size_t w = 0; w <= H; ++w) {
            // coefficient with |lambda| = j moves weight w - j to w
            for (std::size_t j = 0; j <= w; ++j) {
                for (Code s : layer[w - j]) {
                    col.insert(g.add(s, plus[j]));
                    if (j) col.insert(g.add(s, minus[j]));
                }
            }
            next[w] = col.take();
        }
        layer.swap(next);
    }
    return GroupSubset(g, std::move(layer[H]));
}

GroupSubset sumset(const GroupSubset& a, int h, SumsetKind kind) {
    switch (kind) {
        case SumsetKind::Plain: return hfold_sumset(a, h);
        case SumsetKind::Restricted: return restricted_sumset(a, h);
        case SumsetKind::Signed: return signed_sumset(a, h);
        case SumsetKind::RestrictedSigned: return restricted_signed_sumset(a, h);
    }
    throw std::logic_error("unreachable");
}

GroupSubset union_fold(const GroupSubset& a, const MultiplicitySet& H, SumsetKind kind) {
    std::vector<Code> acc;
    for (int h : H.values()) {
        auto part = sumset(a, h, kind);
        acc = merge_sorted(acc, std::vector<Code>(part.codes().begin(), part.codes().end()));
    }
    return GroupSubset(a.group(), std::move(acc));
}

GroupSubset signed_sumset_fast(const GroupSubset& a, int h) {
    require_nonempty(a, h);
    const auto& g = a.group();
    bool meets = false;
    for (Code x : a.codes()) meets = meets || a.contains(g.neg(x));
    if (!meets) throw std::domain_error("signed_sumset_fast requires A ∩ (−A) to be nonempty");
    std::vector<Code> u(a.codes().begin(), a.codes().end());
    for (Code x : a.codes()) u.push_back(g.neg(x));
    return hfold_sumset(GroupSubset(g, std::move(u)), h);
}

GroupSubset interval_signed_sumset_fast(const GroupSubset& a, int h) {
    require_nonempty(a, h);
    const auto& g = a.group();
    std::vector<Code> u(a.codes().begin(), a.codes().end());
    for (Code x : a.codes()) u.push_back(g.neg(x));
    u.push_back(g.zero());
    return hfold_sumset(GroupSubset(g, std::move(u)), h);
}

GroupSubset sum_of(const GroupSubset& a, const GroupSubset& b) {
    if (!(a.group() == b.group())) throw std::invalid_argument("sum_of: subsets of different groups");
    const auto& g = a.group();
    Collector col(g);
    for (Code x : a.codes())
        for (Code y : b.codes()) col.insert(g.add(x, y));
    return GroupSubset(g, col.take());
}

GroupSubset set_union(const GroupSubset& a, const GroupSubset& b) {
    std::vector<Code> out;
    std::set_union(a.codes().begin(), a.codes().end(), b.codes().begin(), b.codes().end(), std::back_inserter(out));
    return GroupSubset(a.group(), std::move(out));
}

GroupSubset set_intersection(const GroupSubset& a, const GroupSubset& b) {
    std::vector<Code> out;
    std::set_intersection(a.codes().begin(), a.codes().end(), b.codes().begin(), b.codes().end(),
                          std::back_inserter(out));
    return GroupSubset(a.group(), std::move(out));
}

GroupSubset set_difference(const GroupSubset& a, const GroupSubset& b) {
    std::vector<Code> out;
    std::set_difference(a.codes().begin(), a.codes().end(), b.codes().begin(), b.codes().end(),
                        std::back_inserter(out));
    return GroupSubset(a.group(), std::move(out));
}

}  // namespace signedsum
