#pragma once

// Definitional sumset engines: hA, h^A, h±A, h±^A and their H-fold unions.
// All four are dynamic programs over the canonical element order of A; the
// naive lambda-vector enumerator used to validate them lives in tests/.

#include <string>
#include <string_view>
#include <vector>

#include "signedsum/group.hpp"

namespace signedsum {

enum class SumsetKind { Plain, Restricted, Signed, RestrictedSigned };

/// `plain` | `restricted` | `signed` | `restricted-signed`
SumsetKind parse_kind(std::string_view text);
std::string to_string(SumsetKind k);
/// True for the kinds whose coefficients are bounded by 1 in absolute value.
inline bool is_restricted(SumsetKind k) {
    return k == SumsetKind::Restricted || k == SumsetKind::RestrictedSigned;
}

/// Nonempty finite set H of nonnegative multiplicities.
class MultiplicitySet {
public:
    explicit MultiplicitySet(std::vector<int> values);
    static MultiplicitySet single(int h) { return MultiplicitySet({h}); }
    /// [lo, hi] = {lo, ..., hi}
    static MultiplicitySet interval(int lo, int hi);
    /// Comma-separated items, each `h` or `lo..hi`; e.g. `2`, `0..3`, `1,3..4`.
    static MultiplicitySet parse(std::string_view text);

    const std::vector<int>& values() const { return values_; }
    int max() const { return values_.back(); }
    bool is_single() const { return values_.size() == 1; }
    /// True when H = [0, max].
    bool is_zero_interval() const;
    std::string to_string() const;

    friend bool operator==(const MultiplicitySet&, const MultiplicitySet&) = default;

private:
    std::vector<int> values_;
};

GroupSubset hfold_sumset(const GroupSubset& a, int h);
GroupSubset restricted_sumset(const GroupSubset& a, int h);
GroupSubset signed_sumset(const GroupSubset& a, int h);
GroupSubset restricted_signed_sumset(const GroupSubset& a, int h);

GroupSubset sumset(const GroupSubset& a, int h, SumsetKind kind);
GroupSubset union_fold(const GroupSubset& a, const MultiplicitySet& H, SumsetKind kind);

/// h(A ∪ −A). Throws std::domain_error unless A ∩ (−A) ≠ ∅.
GroupSubset signed_sumset_fast(const GroupSubset& a, int h);
/// h(A ∪ −A ∪ {0}), the closed form of [0,h]±A.
GroupSubset interval_signed_sumset_fast(const GroupSubset& a, int h);

/// A + B for two subsets of the same group.
GroupSubset sum_of(const GroupSubset& a, const GroupSubset& b);

/// Set union / intersection / difference of subsets of one group.
GroupSubset set_union(const GroupSubset& a, const GroupSubset& b);
GroupSubset set_intersection(const GroupSubset& a, const GroupSubset& b);
GroupSubset set_difference(const GroupSubset& a, const GroupSubset& b);

}  // namespace signedsum
