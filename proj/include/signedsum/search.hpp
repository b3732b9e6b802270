#pragma once

// Exhaustive evaluation of the extremal functions
//   rho_kind(G, m, H) = min { |H-fold kind sumset of A| : A ⊆ G, |A| = m, A passes filter }.
// rho() is the serial reference on the generic engines; rho_parallel()
// splits the lexicographic combination-rank space into contiguous chunks
// and evaluates them with OpenMP, using a bitmask kernel when |G| <= 64.
// Both return the minimum together with its lexicographically smallest witness.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "signedsum/group.hpp"
#include "signedsum/sumset.hpp"

namespace signedsum {

struct ClassFilter {
    enum class Kind { All, Sym, Asym, Nsym, ClassA, SdegEquals, ContainsZero };
    enum class Zero { Any, Required, Excluded };

    Kind kind = Kind::All;
    std::size_t s = 0;  // SdegEquals only
    Zero zero = Zero::Any;

    static ClassFilter all() { return {}; }
    static ClassFilter sdeg_equals(std::size_t s) { return {Kind::SdegEquals, s, Zero::Any}; }
    static ClassFilter of(Kind k, Zero z = Zero::Any) { return {k, 0, z}; }

    /// `all` | `sym` | `asym` | `nsym` | `A` | `sdeg=<s>` | `contains-zero`,
    /// optionally followed by `+zero` or `+nozero`.
    static ClassFilter parse(std::string_view text);
    std::string to_string() const;
    bool accepts(const GroupSubset& a) const;

    friend bool operator==(const ClassFilter&, const ClassFilter&) = default;
};

struct RhoQuery {
    GroupSpec group = GroupSpec::integers();
    std::size_t m = 1;
    MultiplicitySet H = MultiplicitySet::single(1);
    SumsetKind kind = SumsetKind::Plain;
    ClassFilter filter;
    /// Skip sets that are not the lexicographic minimum of their orbit under
    /// x -> ux, u a unit (cyclic groups only; ignored elsewhere).
    bool prune = true;
};

struct RhoResult {
    std::size_t value = 0;
    GroupSubset witness{GroupSpec::integers()};
    std::uint64_t sets_examined = 0;
    std::uint64_t pruned_by_automorphism = 0;
};

struct SearchLimits {
    std::uint64_t max_subsets = 50'000'000;
    /// Progress lines go here when non-null.
    std::ostream* progress = nullptr;
    std::chrono::milliseconds progress_interval{2000};
};

/// Search space too large; `estimate` is C(|G|, m).
class EnvelopeError : public std::runtime_error {
public:
    EnvelopeError(const std::string& what, std::uint64_t estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    std::uint64_t estimate() const { return estimate_; }

private:
    std::uint64_t estimate_;
};

/// No m-subset passes the filter.
class EmptyClassError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

/// Calls `fn` on every m-subset passing the filter, in lexicographic order.
void for_each_subset(const GroupSpec& g, std::size_t m, const ClassFilter& filter,
                     const std::function<void(const GroupSubset&)>& fn);
std::vector<GroupSubset> enumerate_subsets(const GroupSpec& g, std::size_t m, const ClassFilter& filter);

/// True iff A is the lexicographically least member of its unit-dilation
/// orbit. Always true for non-cyclic groups.
bool automorphism_orbit_prune(const GroupSpec& g, const GroupSubset& a);

/// Serial reference. Throws EmptyClassError, EnvelopeError, std::invalid_argument.
RhoResult rho(const RhoQuery& q, const SearchLimits& limits = {});
/// Same value, witness and counters as rho() for every worker count.
RhoResult rho_parallel(const RhoQuery& q, int workers, const SearchLimits& limits = {});
/// rho_parallel with an empty class reported as nullopt.
std::optional<RhoResult> try_rho(const RhoQuery& q, int workers, const SearchLimits& limits = {});

/// Worker count from SIGNEDSUM_WORKERS, else the OpenMP default.
int default_workers();

}  // namespace signedsum
