#pragma once

#include <optional>
#include <string>

#include "signedsum/group.hpp"

namespace signedsum {

enum class SymmetryClass { Sym, Asym, Nsym, Other };

std::string to_string(SymmetryClass c);

/// |A ∩ (−A)|
std::size_t sdeg(const GroupSubset& a);

bool is_symmetric(const GroupSubset& a);
bool is_asymmetric(const GroupSubset& a);
/// Not symmetric, and A∖{a} is symmetric for some a ∈ A.
bool is_near_symmetric(const GroupSubset& a);
/// Member of Sym ∪ Asym ∪ Nsym.
bool in_class_a(const GroupSubset& a);

/// One tag per nonempty set, priority Sym, Asym, Nsym, Other.
SymmetryClass classify(const GroupSubset& a);

struct APWitness {
    Code first;
    Code diff;
    std::size_t length;
};

/// {first + i*diff : 0 <= i < length}; throws if the terms are not distinct.
GroupSubset ap_set(const GroupSpec& g, const APWitness& w);

/// A witness with A = {a + i d}, or nothing. Requires |A| >= 2.
/// Over Z the smallest element and positive difference are returned; in a
/// finite group the first (diff, first) pair in code order.
std::optional<APWitness> detect_ap(const GroupSubset& a);

GroupSubset negate(const GroupSubset& a);
GroupSubset dilate(const GroupSubset& a, std::int64_t u);
GroupSubset translate(const GroupSubset& a, Code t);
GroupSubset union_with_negation(const GroupSubset& a);
GroupSubset intersect_with_negation(const GroupSubset& a);
bool is_subset(const GroupSubset& a, const GroupSubset& b);

/// {|a| : a ∈ A}; Z only.
GroupSubset abs_set(const GroupSubset& a);

}  // namespace signedsum
