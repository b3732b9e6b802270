#pragma once

// Ambient groups: Z, finite products Z_{n1} x ... x Z_{nr}, and the additive
// group Z_p^r of a field of characteristic p.
//
// Elements are handled internally as a single integer "code":
//   - in Z the code is the integer itself;
//   - in a finite group it is the mixed-radix index of the reduced coordinate
//     tuple, so code order is lexicographic coordinate order.
// Every engine in the library works on codes; GroupElement is the coordinate
// form used at the API and I/O boundary.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace signedsum {

using Code = std::int64_t;

/// Thrown by every text parser in the library; `position` is a 0-based
/// column into the parsed string.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Nonnegative count or infinity (p(G) of a torsion-free group).
class ExtendedCount {
public:
    constexpr ExtendedCount() = default;
    constexpr explicit ExtendedCount(std::uint64_t v) : value_(v) {}

    static constexpr ExtendedCount infinity() {
        ExtendedCount c;
        c.value_.reset();
        return c;
    }

    constexpr bool is_infinite() const { return !value_.has_value(); }
    std::uint64_t value() const;

    friend constexpr bool operator==(const ExtendedCount& a, const ExtendedCount& b) {
        return a.value_ == b.value_;
    }
    friend constexpr std::strong_ordering operator<=>(const ExtendedCount& a,
                                                      const ExtendedCount& b) {
        if (a.is_infinite() || b.is_infinite())
            return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
        return *a.value_ <=> *b.value_;
    }

    /// Comparisons against signed integers; negative values are below every count.
    bool operator<(std::int64_t x) const;
    bool operator<=(std::int64_t x) const;
    bool operator>(std::int64_t x) const { return !(*this <= x); }
    bool operator>=(std::int64_t x) const { return !(*this < x); }
    bool operator==(std::int64_t x) const { return !(*this < x) && *this <= x; }

    std::string to_string() const;

private:
    std::optional<std::uint64_t> value_{0};
};

ExtendedCount min(ExtendedCount a, ExtendedCount b);
/// min(p, x) for an integer bound x; the result is finite unless x is.
ExtendedCount min(ExtendedCount a, std::int64_t x);

enum class GroupKind { Integers, FiniteProduct, FieldModel };

struct GroupElement {
    std::vector<std::int64_t> coords;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

class GroupSpec {
public:
    static GroupSpec integers();
    static GroupSpec cyclic(std::int64_t n);
    static GroupSpec product(std::vector<std::int64_t> moduli);
    /// Additive group of a field with p^r elements.
    static GroupSpec field(std::int64_t p, int r = 1);
    /// `Z` | `Z<n>` | `Z<n1>xZ<n2>x...` | `F<p>` | `F<p>^<r>`
    static GroupSpec parse(std::string_view text);

    GroupKind kind() const { return kind_; }
    bool is_finite() const { return kind_ != GroupKind::Integers; }
    bool is_cyclic() const { return is_finite() && moduli_.size() == 1; }
    /// Empty for Z.
    const std::vector<std::int64_t>& moduli() const { return moduli_; }
    std::size_t rank() const { return kind_ == GroupKind::Integers ? 1 : moduli_.size(); }
    std::int64_t char_p() const { return char_p_; }
    int ext_degree() const { return static_cast<int>(moduli_.size()); }

    /// |G|; throws std::domain_error for Z.
    std::uint64_t order() const;
    std::string to_string() const;

    Code zero() const { return 0; }
    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const { return add(a, neg(b)); }
    Code neg(Code a) const;
    Code mul(std::int64_t n, Code a) const;

    Code encode(const GroupElement& e) const;
    GroupElement decode(Code c) const;
    bool contains(const GroupElement& e) const;
    bool valid_code(Code c) const;

    /// Element literal: an integer, or `(c1,c2,...)` for product groups.
    Code parse_element(std::string_view text) const;
    std::string format(Code c) const;

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
        return a.kind_ == b.kind_ && a.moduli_ == b.moduli_;
    }

private:
    GroupSpec() = default;

    GroupKind kind_ = GroupKind::Integers;
    std::vector<std::int64_t> moduli_;
    std::vector<std::int64_t> strides_;
    std::int64_t order_ = 0;
    std::int64_t char_p_ = 0;
};

bool is_prime(std::int64_t n);
std::int64_t smallest_prime_factor(std::int64_t n);

/// Order of the smallest nontrivial subgroup; infinity for Z.
ExtendedCount p_of_group(const GroupSpec& g);

GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupSpec& g, const GroupElement& a);
GroupElement scalar_mul(const GroupSpec& g, std::int64_t n, const GroupElement& a);

/// All elements in canonical (lexicographic coordinate) order; finite groups only.
std::vector<GroupElement> enumerate_elements(const GroupSpec& g);

/// Additive order of an element of a finite group.
std::uint64_t element_order(const GroupSpec& g, Code c);

/// Finite subset of a group, stored as sorted duplicate-free codes.
class GroupSubset {
public:
    explicit GroupSubset(GroupSpec g, std::vector<Code> codes = {});

    static GroupSubset from_elements(const GroupSpec& g, const std::vector<GroupElement>& elems);
    /// Comma-separated element literals, optionally wrapped in braces.
    static GroupSubset parse(const GroupSpec& g, std::string_view text);

    const GroupSpec& group() const { return group_; }
    std::span<const Code> codes() const { return codes_; }
    std::size_t size() const { return codes_.size(); }
    bool empty() const { return codes_.empty(); }
    bool contains(Code c) const;
    std::vector<GroupElement> elements() const;

    /// `{a,b,c}` in canonical order.
    std::string to_string() const;
    /// `a,b,c`, the form accepted back by parse().
    std::string literal() const;

    friend bool operator==(const GroupSubset& a, const GroupSubset& b) {
        return a.group_ == b.group_ && a.codes_ == b.codes_;
    }
    /// Lexicographic order on the sorted element lists.
    friend std::strong_ordering operator<=>(const GroupSubset& a, const GroupSubset& b) {
        return std::lexicographical_compare_three_way(a.codes_.begin(), a.codes_.end(),
                                                      b.codes_.begin(), b.codes_.end());
    }

private:
    GroupSpec group_;
    std::vector<Code> codes_;
};

/// Closure of S ∪ {0} under addition and negation. Z is rejected unless S ⊆ {0}.
GroupSubset subgroup_generated(const GroupSpec& g, const GroupSubset& s);

}  // namespace signedsum
