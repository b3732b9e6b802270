#include "signedsum/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace signedsum {

namespace {

constexpr std::int64_t kMaxOrder = std::int64_t{1} << 40;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Z addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Z multiple");
    return r;
}

std::int64_t reduce(std::int64_t x, std::int64_t n) {
    x %= n;
    return x < 0 ? x + n : x;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
        ++offset;
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, std::size_t offset) {
    std::int64_t v = 0;
    if (s.empty()) throw ParseError("expected an integer", offset);
    auto first = s.data();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range", offset);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("invalid integer '" + std::string(s) + "'",
                         offset + static_cast<std::size_t>(ptr - s.data()));
    return v;
}

// Splits on commas that are not inside parentheses; returns (piece, offset).
std::vector<std::pair<std::string_view, std::size_t>> split_top_level(std::string_view s,
                                                                      std::size_t offset) {
    std::vector<std::pair<std::string_view, std::size_t>> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') {
            if (--depth < 0) throw ParseError("unbalanced ')'", offset + i);
        }
        if (s[i] == ',' && depth == 0) {
            out.emplace_back(s.substr(start, i - start), offset + start);
            start = i + 1;
        }
    }
    if (depth != 0) throw ParseError("unbalanced '('", offset + s.size());
    out.emplace_back(s.substr(start), offset + start);
    return out;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument("parse error at column " + std::to_string(position + 1) + ": " + message),
      position_(position) {}

// ---------------------------------------------------------------------------
// ExtendedCount

std::uint64_t ExtendedCount::value() const {
    if (!value_) throw std::domain_error("ExtendedCount is infinite");
    return *value_;
}

bool ExtendedCount::operator<(std::int64_t x) const {
    if (is_infinite() || x <= 0) return false;
    return *value_ < static_cast<std::uint64_t>(x);
}

bool ExtendedCount::operator<=(std::int64_t x) const {
    if (is_infinite() || x < 0) return false;
    return *value_ <= static_cast<std::uint64_t>(x);
}

std::string ExtendedCount::to_string() const {
    return is_infinite() ? "inf" : std::to_string(*value_);
}

ExtendedCount min(ExtendedCount a, ExtendedCount b) { return b < a ? b : a; }

ExtendedCount min(ExtendedCount a, std::int64_t x) {
    if (x < 0) throw std::domain_error("min(p, x) with negative x");
    return min(a, ExtendedCount(static_cast<std::uint64_t>(x)));
}

// ---------------------------------------------------------------------------
// Primes

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t smallest_prime_factor(std::int64_t n) {
    if (n < 2) throw std::domain_error("smallest_prime_factor of n < 2");
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::integers() { return GroupSpec{}; }

GroupSpec GroupSpec::cyclic(std::int64_t n) { return product({n}); }

GroupSpec GroupSpec::product(std::vector<std::int64_t> moduli) {
    if (moduli.empty()) throw std::invalid_argument("finite product needs at least one modulus");
    GroupSpec g;
    g.kind_ = GroupKind::FiniteProduct;
    std::int64_t order = 1;
    for (auto n : moduli) {
        if (n < 2) throw std::invalid_argument("every modulus must be >= 2, got " + std::to_string(n));
        if (order > kMaxOrder / n) throw std::invalid_argument("group order too large");
        order *= n;
    }
    g.moduli_ = std::move(moduli);
    g.order_ = order;
    g.strides_.assign(g.moduli_.size(), 1);
    for (std::size_t i = g.moduli_.size(); i-- > 1;) g.strides_[i - 1] = g.strides_[i] * g.moduli_[i];
    return g;
}

GroupSpec GroupSpec::field(std::int64_t p, int r) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (r < 1) throw std::invalid_argument("extension degree must be >= 1");
    GroupSpec g = product(std::vector<std::int64_t>(static_cast<std::size_t>(r), p));
    g.kind_ = GroupKind::FieldModel;
    g.char_p_ = p;
    return g;
}

GroupSpec GroupSpec::parse(std::string_view text) {
    std::size_t off = 0;
    std::string_view s = trim(text, off);
    if (s.empty()) throw ParseError("empty group spec", off);
    if (s == "Z") return integers();
    if (s.front() == 'F') {
        auto caret = s.find('^');
        std::string_view ps = s.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1);
        std::int64_t p = parse_int(ps, off + 1);
        int r = 1;
        if (caret != std::string_view::npos) {
            r = static_cast<int>(parse_int(s.substr(caret + 1), off + caret + 1));
            if (r < 1) throw ParseError("extension degree must be >= 1", off + caret + 1);
        }
        if (!is_prime(p)) throw ParseError("field characteristic must be prime", off + 1);
        return field(p, r);
    }
    std::vector<std::int64_t> moduli;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto x = s.find('x', pos);
        std::string_view part = s.substr(pos, x == std::string_view::npos ? std::string_view::npos : x - pos);
        if (part.empty() || part.front() != 'Z') throw ParseError("expected 'Z<n>'", off + pos);
        std::int64_t n = parse_int(part.substr(1), off + pos + 1);
        if (n < 2) throw ParseError("modulus must be >= 2", off + pos + 1);
        moduli.push_back(n);
        if (x == std::string_view::npos) break;
        pos = x + 1;
    }
    return product(std::move(moduli));
}

std::uint64_t GroupSpec::order() const {
    if (!is_finite()) throw std::domain_error("Z has infinite order");
    return static_cast<std::uint64_t>(order_);
}

std::string GroupSpec::to_string() const {
    switch (kind_) {
        case GroupKind::Integers:
            return "Z";
        case GroupKind::FieldModel:
            return "F" + std::to_string(char_p_) + (moduli_.size() > 1 ? "^" + std::to_string(moduli_.size()) : "");
        case GroupKind::FiniteProduct: {
            std::string out;
            for (std::size_t i = 0; i < moduli_.size(); ++i) {
                if (i) out += 'x';
                out += "Z" + std::to_string(moduli_[i]);
            }
            return out;
        }
    }
    return {};
}

Code GroupSpec::add(Code a, Code b) const {
    if (!is_finite()) return checked_add(a, b);
    if (moduli_.size() == 1) {
        Code s = a + b;
        return s >= order_ ? s - order_ : s;
    }
    Code out = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        std::int64_t ca = (a / strides_[i]) % moduli_[i];
        std::int64_t cb = (b / strides_[i]) % moduli_[i];
        std::int64_t s = ca + cb;
        if (s >= moduli_[i]) s -= moduli_[i];
        out += s * strides_[i];
    }
    return out;
}

Code GroupSpec::neg(Code a) const {
    if (!is_finite()) return checked_mul(a, -1);
    if (moduli_.size() == 1) return a == 0 ? 0 : order_ - a;
    Code out = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        std::int64_t c = (a / strides_[i]) % moduli_[i];
        out += (c == 0 ? 0 : moduli_[i] - c) * strides_[i];
    }
    return out;
}

Code GroupSpec::mul(std::int64_t n, Code a) const {
    if (!is_finite()) return checked_mul(n, a);
    Code out = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        std::int64_t m = moduli_[i];
        std::int64_t c = (a / strides_[i]) % m;
        auto prod = static_cast<__int128>(reduce(n, m)) * c;
        out += static_cast<std::int64_t>(prod % m) * strides_[i];
    }
    return out;
}

Code GroupSpec::encode(const GroupElement& e) const {
    if (!is_finite()) {
        if (e.coords.size() != 1) throw std::invalid_argument("Z element must have one coordinate");
        return e.coords[0];
    }
    if (e.coords.size() != moduli_.size())
        throw std::invalid_argument("element has " + std::to_string(e.coords.size()) + " coordinates, group " +
                                    to_string() + " needs " + std::to_string(moduli_.size()));
    Code out = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) out += reduce(e.coords[i], moduli_[i]) * strides_[i];
    return out;
}

GroupElement GroupSpec::decode(Code c) const {
    if (!is_finite()) return GroupElement{{c}};
    GroupElement e;
    e.coords.resize(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) e.coords[i] = (c / strides_[i]) % moduli_[i];
    return e;
}

bool GroupSpec::contains(const GroupElement& e) const {
    if (!is_finite()) return e.coords.size() == 1;
    if (e.coords.size() != moduli_.size()) return false;
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        if (e.coords[i] < 0 || e.coords[i] >= moduli_[i]) return false;
    return true;
}

bool GroupSpec::valid_code(Code c) const { return !is_finite() || (c >= 0 && c < order_); }

Code GroupSpec::parse_element(std::string_view text) const {
    std::size_t off = 0;
    std::string_view s = trim(text, off);
    if (s.empty()) throw ParseError("empty element literal", off);
    if (s.front() == '(') {
        if (s.back() != ')') throw ParseError("missing ')'", off + s.size());
        auto parts = split_top_level(s.substr(1, s.size() - 2), off + 1);
        GroupElement e;
        for (auto [piece, poff] : parts) {
            std::size_t o = poff;
            e.coords.push_back(parse_int(trim(piece, o), o));
        }
        if (e.coords.size() != rank())
            throw ParseError("tuple has " + std::to_string(e.coords.size()) + " coordinates, group " + to_string() +
                                 " needs " + std::to_string(rank()),
                             off);
        return encode(e);
    }
    std::int64_t v = parse_int(s, off);
    if (!is_finite()) return v;
    if (moduli_.size() != 1) throw ParseError("group " + to_string() + " needs a tuple literal", off);
    return reduce(v, moduli_[0]);
}

std::string GroupSpec::format(Code c) const {
    if (!is_finite() || moduli_.size() == 1) return std::to_string(c);
    auto e = decode(c);
    std::string out = "(";
    for (std::size_t i = 0; i < e.coords.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(e.coords[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// Free functions

ExtendedCount p_of_group(const GroupSpec& g) {
    switch (g.kind()) {
        case GroupKind::Integers:
            return ExtendedCount::infinity();
        case GroupKind::FieldModel:
            return ExtendedCount(static_cast<std::uint64_t>(g.char_p()));
        case GroupKind::FiniteProduct: {
            std::int64_t best = 0;
            for (auto n : g.moduli()) {
                auto q = smallest_prime_factor(n);
                if (best == 0 || q < best) best = q;
            }
            return ExtendedCount(static_cast<std::uint64_t>(best));
        }
    }
    return ExtendedCount::infinity();
}

namespace {
void require_member(const GroupSpec& g, const GroupElement& a) {
    if (!g.contains(a)) throw std::invalid_argument("element is not a reduced member of " + g.to_string());
}
}  // namespace

GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
    require_member(g, a);
    require_member(g, b);
    return g.decode(g.add(g.encode(a), g.encode(b)));
}

GroupElement neg(const GroupSpec& g, const GroupElement& a) {
    require_member(g, a);
    return g.decode(g.neg(g.encode(a)));
}

GroupElement scalar_mul(const GroupSpec& g, std::int64_t n, const GroupElement& a) {
    require_member(g, a);
    return g.decode(g.mul(n, g.encode(a)));
}

std::vector<GroupElement> enumerate_elements(const GroupSpec& g) {
    if (!g.is_finite()) throw std::domain_error("cannot enumerate the elements of Z");
    std::vector<GroupElement> out;
    out.reserve(g.order());
    for (Code c = 0; c < static_cast<Code>(g.order()); ++c) out.push_back(g.decode(c));
    return out;
}

std::uint64_t element_order(const GroupSpec& g, Code c) {
    if (!g.is_finite()) return c == 0 ? 1 : 0;
    auto e = g.decode(c);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < e.coords.size(); ++i) {
        auto n = static_cast<std::uint64_t>(g.moduli()[i]);
        auto x = static_cast<std::uint64_t>(e.coords[i]);
        std::uint64_t oi = n / std::gcd(x, n);
        ord = std::lcm(ord, oi);
    }
    return ord;
}

// ---------------------------------------------------------------------------
// GroupSubset

GroupSubset::GroupSubset(GroupSpec g, std::vector<Code> codes) : group_(std::move(g)), codes_(std::move(codes)) {
    for (auto c : codes_)
        if (!group_.valid_code(c)) throw std::invalid_argument("code " + std::to_string(c) + " is not in " + group_.to_string());
    std::sort(codes_.begin(), codes_.end());
    codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
}

GroupSubset GroupSubset::from_elements(const GroupSpec& g, const std::vector<GroupElement>& elems) {
    std::vector<Code> codes;
    codes.reserve(elems.size());
    for (const auto& e : elems) {
        require_member(g, e);
        codes.push_back(g.encode(e));
    }
    return GroupSubset(g, std::move(codes));
}

GroupSubset GroupSubset::parse(const GroupSpec& g, std::string_view text) {
    std::size_t off = 0;
    std::string_view s = trim(text, off);
    if (!s.empty() && s.front() == '{') {
        if (s.back() != '}') throw ParseError("missing '}'", off + s.size());
        s = s.substr(1, s.size() - 2);
        ++off;
        s = trim(s, off);
    }
    std::vector<Code> codes;
    if (s.empty()) return GroupSubset(g);
    for (auto [piece, poff] : split_top_level(s, off)) {
        std::size_t o = poff;
        auto t = trim(piece, o);
        if (t.empty()) throw ParseError("empty element in set literal", o);
        try {
            codes.push_back(g.parse_element(t));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), o + e.position());
        }
    }
    return GroupSubset(g, std::move(codes));
}

bool GroupSubset::contains(Code c) const { return std::binary_search(codes_.begin(), codes_.end(), c); }

std::vector<GroupElement> GroupSubset::elements() const {
    std::vector<GroupElement> out;
    out.reserve(codes_.size());
    for (auto c : codes_) out.push_back(group_.decode(c));
    return out;
}

std::string GroupSubset::literal() const {
    std::string out;
    for (std::size_t i = 0; i < codes_.size(); ++i) {
        if (i) out += ',';
        out += group_.format(codes_[i]);
    }
    return out;
}

std::string GroupSubset::to_string() const { return "{" + literal() + "}"; }

GroupSubset subgroup_generated(const GroupSpec& g, const GroupSubset& s) {
    if (!(s.group() == g)) throw std::invalid_argument("subset belongs to a different group");
    if (!g.is_finite()) {
        for (auto c : s.codes())
            if (c != 0) throw std::domain_error("subgroup of Z generated by a nonzero element is infinite");
        return GroupSubset(g, {0});
    }
    std::unordered_set<Code> seen{g.zero()};
    std::vector<Code> frontier{g.zero()};
    while (!frontier.empty()) {
        std::vector<Code> next;
        for (auto x : frontier)
            for (auto c : s.codes()) {
                for (Code y : {g.add(x, c), g.sub(x, c)})
                    if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return GroupSubset(g, std::vector<Code>(seen.begin(), seen.end()));
}

}  // namespace signedsum
