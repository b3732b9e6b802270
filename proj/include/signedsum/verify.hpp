#pragma once

// Check registry: each lemma or theorem in scope is a named predicate run over
// a parameter grid. Reports are deterministic for a given spec (failures are
// sorted before capping; sampled checks draw from a seeded mt19937_64).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "signedsum/group.hpp"
#include "signedsum/sumset.hpp"

namespace signedsum {

/// Parameter ranges, written `key=value;key=value`. Values are interpreted
/// by the accessor: integer lists like `2..10` or `3,5,7..9` (a reversed
/// range is empty), group lists like `Z7,Z2xZ4,F3^2`, or `|`-separated
/// multiplicity sets like `1|0..2|1,3`.
class Grid {
public:
    Grid() = default;
    static Grid parse(std::string_view text);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    const std::string& raw(const std::string& key) const;
    void set(const std::string& key, std::string value) { values_[key] = std::move(value); }
    /// Keys of `overrides` replace ours.
    Grid merged(const Grid& overrides) const;

    std::vector<std::int64_t> ints(const std::string& key) const;
    std::int64_t scalar(const std::string& key) const;
    std::vector<GroupSpec> groups(const std::string& key) const;
    std::vector<MultiplicitySet> hsets(const std::string& key) const;

    /// Canonical form, keys sorted.
    std::string to_string() const;
    bool empty() const { return values_.empty(); }

private:
    std::map<std::string, std::string> values_;
};

enum class CheckMode { Exhaustive, Sampled };
std::string to_string(CheckMode m);

constexpr std::uint64_t kDefaultSeed = 20260101;

struct CheckSpec {
    std::string id;
    /// Merged over the check's default grid.
    Grid grid;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> count;
    int workers = 1;
    std::size_t max_failures = 20;
};

struct Failure {
    std::string params;
    std::string witness;
    std::string expected;
    std::string actual;

    auto operator<=>(const Failure&) const = default;
};

struct CheckReport {
    std::string id;
    std::string anchor;
    CheckMode mode = CheckMode::Exhaustive;
    std::string grid;
    std::uint64_t seed = 0;   // sampled checks only
    std::size_t count = 0;    // sampled checks only
    std::uint64_t cells = 0;
    std::uint64_t failure_count = 0;
    std::vector<Failure> failures;  // first max_failures in sorted order
    std::map<std::string, std::string> notes;
    double elapsed_ms = 0;

    bool passed() const { return failure_count == 0; }
};

struct CheckInfo {
    std::string id;
    /// The statement under test.
    std::string anchor;
    std::string default_grid;
    CheckMode mode = CheckMode::Exhaustive;
    std::size_t default_count = 0;
};

/// Registered checks in id order.
std::vector<CheckInfo> list_checks();

/// Throws std::invalid_argument for an unknown id, ParseError for a bad grid,
/// EnvelopeError when the grid leaves the supported envelope.
CheckReport run_check(const CheckSpec& spec);

}  // namespace signedsum
