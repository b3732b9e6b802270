#pragma once

// Bitmask engine for groups with at most 64 elements: bit c of a mask is the
// element with code c. Used by rho_parallel; the generic engines in
// sumset.cpp remain the reference.

#include <bit>
#include <cstdint>
#include <vector>

#include "signedsum/group.hpp"
#include "signedsum/search.hpp"
#include "signedsum/sumset.hpp"

namespace signedsum::detail {

using Mask = std::uint64_t;

constexpr int kMaxKernelOrder = 64;
constexpr int kMaxKernelH = 31;

class MaskKernel {
public:
    explicit MaskKernel(const GroupSpec& g);

    int order() const { return n_; }
    Mask full() const { return full_; }

    Mask translate(Mask m, Code x) const;
    Mask negate(Mask m) const { return map(m, neg_.data()); }

    /// Union over h in H of the kind-h sumset of `a`.
    Mask sumset(Mask a, const MultiplicitySet& H, SumsetKind kind) const;

    bool accepts(Mask a, const ClassFilter& f) const;
    /// Least member of its unit-dilation orbit (cyclic groups; else true).
    bool canonical(Mask a) const;

    /// Lexicographic order of the sorted code lists, for equal popcounts.
    static bool lex_less(Mask a, Mask b) {
        Mask d = a ^ b;
        return d != 0 && (a & (d & (~d + 1))) != 0;
    }

    Mask from_subset(const GroupSubset& a) const;
    GroupSubset to_subset(const GroupSpec& g, Mask m) const;

private:
    Mask map(Mask m, const std::uint8_t* perm) const {
        Mask out = 0;
        while (m) {
            int b = std::countr_zero(m);
            out |= Mask{1} << perm[b];
            m &= m - 1;
        }
        return out;
    }

    int n_;
    Mask full_;
    bool cyclic_;
    std::vector<std::uint8_t> add_;  // add_[x * n + y] = x + y
    std::vector<std::uint8_t> neg_;
    std::vector<std::uint8_t> mul_;  // mul_[j * n + x] = j x, j in [0, kMaxKernelH]
    std::vector<std::vector<std::uint8_t>> unit_perms_;
};

}  // namespace signedsum::detail
