#pragma once

#include <map>
#include <string>
#include <vector>

#include "signedsum/group.hpp"

namespace signedsum {

/// d * {1, 3, ..., 2m-1} in Z.
GroupSubset odd_spaced_ap(std::int64_t d, std::int64_t m);
/// d * [0, m-1] in Z.
GroupSubset interval_set(std::int64_t d, std::int64_t m);

/// First element of order p(G) in canonical order; finite groups only.
Code order_p_generator(const GroupSpec& g);

/// m-subset with |A ∩ (−A)| = s attaining min(p, 2hm − hs − h + 1) for |h±A|:
/// the image of [−t, m−t−1] (s = 2t+1) or of the odd template
/// {−(2t−1), ..., −1, 1, 3, ..., 2(m−t)−1} (s = 2t) under x ↦ x·g0.
/// Requires 1 <= s <= m and 2m − s <= p(G).
GroupSubset rho_s_witness(const GroupSpec& g, std::int64_t m, std::int64_t s);

/// {0, g0, ..., (m−1)g0} with g0 of order p(G); requires m <= p(G).
GroupSubset subgroup_interval(const GroupSpec& g, std::int64_t m);

struct SymmetrizeStep {
    Code removed;  // a
    Code added;    // −b
    GroupSubset after;
};

struct SymmetrizeResult {
    GroupSubset result;
    std::vector<SymmetrizeStep> steps;
};

/// Repeated replacement A ← (A ∪ {−b}) ∖ {a} over the lexicographically
/// smallest pair a ≠ b in A with −a, −b ∉ A, until no pair is left.
/// Each step is checked for h±(next) ⊆ h±(prev); a violation throws
/// std::logic_error. Requires |A| >= 2, A ∩ (−A) ≠ ∅, sdeg(A) <= |A| − 2.
SymmetrizeResult symmetrize(const GroupSubset& a, int h);

/// Named recipe with integer parameters, as exposed on the command line.
struct ConstructionRecipe {
    std::string name;
    std::map<std::string, std::int64_t> params;
    GroupSpec target_group = GroupSpec::integers();
};

/// Recipe names: odd_spaced_ap(d,m), interval_set(d,m), rho_s_witness(m,s),
/// subgroup_interval(m).
GroupSubset build(const ConstructionRecipe& r);
std::vector<std::string> recipe_names();

}  // namespace signedsum
