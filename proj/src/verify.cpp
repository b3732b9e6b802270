#include "signedsum/verify.hpp"

#include <algorithm>
#include <chrono>
#include <memory>

#include "check_support.hpp"
#include "mask_kernel.hpp"

namespace signedsum {

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
        ++offset;
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Splits on `sep`, reporting each piece with its offset in `text`.
std::vector<std::pair<std::string_view, std::size_t>> split(std::string_view text, char sep) {
    std::vector<std::pair<std::string_view, std::size_t>> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == sep) {
            out.emplace_back(text.substr(start, i - start), start);
            start = i + 1;
        }
    }
    return out;
}

std::int64_t parse_int(std::string_view s, std::size_t pos) {
    std::size_t off = 0;
    s = trim(s, off);
    pos += off;
    if (s.empty()) throw ParseError("expected an integer", pos);
    std::size_t i = 0;
    bool negative = false;
    if (s[0] == '-' || s[0] == '+') {
        negative = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw ParseError("expected digits", pos + i);
    std::int64_t v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw ParseError("unexpected character '" + std::string(1, s[i]) + "'", pos + i);
        if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, s[i] - '0', &v))
            throw ParseError("integer out of range", pos);
    }
    return negative ? -v : v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Grid

Grid Grid::parse(std::string_view text) {
    Grid g;
    for (auto [piece, pos] : split(text, ';')) {
        std::size_t off = 0;
        auto item = trim(piece, off);
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected key=value", pos + off);
        std::size_t koff = 0;
        auto key = trim(item.substr(0, eq), koff);
        if (key.empty()) throw ParseError("empty key", pos + off);
        for (std::size_t i = 0; i < key.size(); ++i) {
            char c = key[i];
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                throw ParseError("invalid character in key", pos + off + koff + i);
        }
        std::size_t voff = 0;
        auto value = trim(item.substr(eq + 1), voff);
        g.values_[std::string(key)] = std::string(value);
    }
    return g;
}

const std::string& Grid::raw(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw std::invalid_argument("grid has no key '" + key + "'");
    return it->second;
}

Grid Grid::merged(const Grid& overrides) const {
    Grid out = *this;
    for (const auto& [k, v] : overrides.values_) out.values_[k] = v;
    return out;
}

std::vector<std::int64_t> Grid::ints(const std::string& key) const {
    const auto& text = raw(key);
    std::vector<std::int64_t> out;
    if (text.empty()) return out;
    for (auto [piece, pos] : split(text, ',')) {
        auto dots = piece.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(parse_int(piece, pos));
            continue;
        }
        auto lo = parse_int(piece.substr(0, dots), pos);
        auto hi = parse_int(piece.substr(dots + 2), pos + dots + 2);
        for (auto v = lo; v <= hi; ++v) out.push_back(v);
    }
    return out;
}

std::int64_t Grid::scalar(const std::string& key) const {
    auto v = ints(key);
    if (v.size() != 1) throw std::invalid_argument("grid key '" + key + "' must be a single integer");
    return v.front();
}

std::vector<GroupSpec> Grid::groups(const std::string& key) const {
    const auto& text = raw(key);
    std::vector<GroupSpec> out;
    if (text.empty()) return out;
    for (auto [piece, pos] : split(text, ',')) {
        std::size_t off = 0;
        auto item = trim(piece, off);
        try {
            out.push_back(GroupSpec::parse(item));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), pos + off + e.position());
        }
    }
    return out;
}

std::vector<MultiplicitySet> Grid::hsets(const std::string& key) const {
    const auto& text = raw(key);
    std::vector<MultiplicitySet> out;
    if (text.empty()) return out;
    for (auto [piece, pos] : split(text, '|')) {
        std::size_t off = 0;
        auto item = trim(piece, off);
        try {
            out.push_back(MultiplicitySet::parse(item));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), pos + off + e.position());
        }
    }
    return out;
}

std::string Grid::to_string() const {
    std::string out;
    for (const auto& [k, v] : values_) {
        if (!out.empty()) out += ';';
        out += k + "=" + v;
    }
    return out;
}

std::string to_string(CheckMode m) { return m == CheckMode::Exhaustive ? "exhaustive" : "sampled"; }

// ---------------------------------------------------------------------------
// Registry

namespace detail {

namespace {

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = [] {
        std::vector<CheckDef> d;
        register_sumset_checks(d);
        register_integer_checks(d);
        register_group_checks(d);
        register_field_checks(d);
        register_restricted_checks(d);
        std::sort(d.begin(), d.end(), [](const CheckDef& a, const CheckDef& b) { return a.info.id < b.info.id; });
        return d;
    }();
    return defs;
}

}  // namespace

std::vector<GroupSubset> subsets_by_size(const GroupSpec& g, std::size_t lo, std::size_t hi,
                                         const ClassFilter& filter) {
    std::vector<GroupSubset> out;
    hi = std::min<std::size_t>(hi, g.order());
    for (std::size_t m = std::max<std::size_t>(lo, 1); m <= hi; ++m)
        for_each_subset(g, m, filter, [&](const GroupSubset& a) { out.push_back(a); });
    return out;
}

std::vector<GroupSubset> integer_subsets(std::int64_t lo, std::int64_t hi, std::size_t kmin, std::size_t kmax) {
    std::vector<GroupSubset> out;
    if (hi < lo) return out;
    const auto n = static_cast<std::size_t>(hi - lo + 1);
    const auto z = GroupSpec::integers();
    for (std::size_t k = std::max<std::size_t>(kmin, 1); k <= std::min(kmax, n); ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<Code> codes(k);
            for (std::size_t i = 0; i < k; ++i) codes[i] = lo + static_cast<Code>(idx[i]);
            out.emplace_back(z, std::move(codes));
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

void require_subset_envelope(const GroupSpec& g, std::size_t max_size) {
    if (!g.is_finite()) throw std::invalid_argument("exhaustive subset checks need finite groups");
    std::uint64_t total = 0;
    for (std::size_t m = 1; m <= std::min<std::size_t>(max_size, g.order()); ++m) {
        total += binomial_saturating(g.order(), m);
        if (total > (std::uint64_t{1} << 24)) break;
    }
    if (total > (std::uint64_t{1} << 24))
        throw EnvelopeError("subset enumeration over " + g.to_string() + " up to size " + std::to_string(max_size) +
                                " exceeds 2^24 subsets",
                            total);
}

std::size_t fast_size(const GroupSubset& a, const MultiplicitySet& H, SumsetKind kind) {
    const auto& g = a.group();
    if (!g.is_finite() || g.order() > static_cast<std::uint64_t>(kMaxKernelOrder) || H.max() > kMaxKernelH)
        return union_fold(a, H, kind).size();
    thread_local std::map<std::string, std::unique_ptr<MaskKernel>> cache;
    auto& k = cache[g.to_string()];
    if (!k) k = std::make_unique<MaskKernel>(g);
    return static_cast<std::size_t>(std::popcount(k->sumset(k->from_subset(a), H, kind)));
}

}  // namespace detail

std::vector<CheckInfo> list_checks() {
    std::vector<CheckInfo> out;
    for (const auto& d : detail::registry()) out.push_back(d.info);
    return out;
}

CheckReport run_check(const CheckSpec& spec) {
    const auto& defs = detail::registry();
    auto it = std::find_if(defs.begin(), defs.end(), [&](const detail::CheckDef& d) { return d.info.id == spec.id; });
    if (it == defs.end()) throw std::invalid_argument("unknown check id '" + spec.id + "'");
    if (spec.workers < 1) throw std::invalid_argument("workers must be >= 1");

    const auto& info = it->info;
    CheckReport r;
    r.id = info.id;
    r.anchor = info.anchor;
    r.mode = info.mode;
    Grid grid = Grid::parse(info.default_grid).merged(spec.grid);
    r.grid = grid.to_string();
    const bool sampled = info.mode == CheckMode::Sampled;
    const std::uint64_t seed = sampled ? spec.seed.value_or(kDefaultSeed) : 0;
    const std::size_t count = sampled ? spec.count.value_or(info.default_count) : 0;
    r.seed = seed;
    r.count = count;

    detail::CheckContext ctx(std::move(grid), spec.workers, seed, count);
    auto start = std::chrono::steady_clock::now();
    it->run(ctx);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    auto& failures = ctx.failures();
    std::sort(failures.begin(), failures.end());
    r.failure_count = failures.size();
    if (failures.size() > spec.max_failures) failures.resize(spec.max_failures);
    r.failures = std::move(failures);
    r.cells = ctx.cells();
    r.notes = std::move(ctx.notes());
    return r;
}

}  // namespace signedsum
