#pragma once

// Shared plumbing for the checks_*.cpp files.

#include <omp.h>

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>

#include "signedsum/search.hpp"
#include "signedsum/verify.hpp"

namespace signedsum::detail {

class CheckContext {
public:
    CheckContext(Grid grid, int workers, std::uint64_t seed, std::size_t count)
        : grid_(std::move(grid)), workers_(workers), seed_(seed), count_(count) {}

    const Grid& grid() const { return grid_; }
    int workers() const { return workers_; }
    std::uint64_t seed() const { return seed_; }
    std::size_t count() const { return count_; }

    void cell(std::uint64_t n = 1) { cells_ += n; }
    std::uint64_t cells() const { return cells_; }

    void fail(std::string params, std::string witness, std::string expected, std::string actual) {
        std::lock_guard lock(mu_);
        failures_.push_back({std::move(params), std::move(witness), std::move(expected), std::move(actual)});
    }
    void note(const std::string& key, std::string value) {
        std::lock_guard lock(mu_);
        notes_[key] = std::move(value);
    }

    std::vector<Failure>& failures() { return failures_; }
    std::map<std::string, std::string>& notes() { return notes_; }

    /// Runs fn(i) for i in [0, n) on the configured worker count. The first
    /// exception thrown by any iteration is rethrown after the loop.
    template <class F>
    void parallel_for(std::size_t n, F&& fn) {
        std::exception_ptr error;
        std::mutex error_mu;
#pragma omp parallel for num_threads(workers_) schedule(dynamic, 8)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
            try {
                fn(static_cast<std::size_t>(i));
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
    }

    RhoResult rho(const RhoQuery& q) const { return rho_parallel(q, workers_); }
    std::optional<RhoResult> try_rho(const RhoQuery& q) const { return signedsum::try_rho(q, workers_); }

private:
    Grid grid_;
    int workers_;
    std::uint64_t seed_;
    std::size_t count_;
    std::atomic<std::uint64_t> cells_{0};
    std::mutex mu_;
    std::vector<Failure> failures_;
    std::map<std::string, std::string> notes_;
};

struct CheckDef {
    CheckInfo info;
    std::function<void(CheckContext&)> run;
};

void register_sumset_checks(std::vector<CheckDef>& out);
void register_integer_checks(std::vector<CheckDef>& out);
void register_group_checks(std::vector<CheckDef>& out);
void register_field_checks(std::vector<CheckDef>& out);
void register_restricted_checks(std::vector<CheckDef>& out);

// ---------------------------------------------------------------------------
// Helpers

/// "k1=v1 k2=v2"
inline std::string params(std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::string out;
    for (const auto& [k, v] : kv) {
        if (!out.empty()) out += ' ';
        out += k;
        out += '=';
        out += v;
    }
    return out;
}

template <class T>
std::string num(T x) {
    return std::to_string(x);
}

/// All subsets of g with size in [lo, hi], in size-then-lex order.
std::vector<GroupSubset> subsets_by_size(const GroupSpec& g, std::size_t lo, std::size_t hi,
                                         const ClassFilter& filter = ClassFilter::all());

/// Subsets of the integer interval [lo, hi] with size in [kmin, kmax].
std::vector<GroupSubset> integer_subsets(std::int64_t lo, std::int64_t hi, std::size_t kmin, std::size_t kmax);

/// Refuses exhaustive subset enumeration beyond 2^24 subsets.
void require_subset_envelope(const GroupSpec& g, std::size_t max_size);

/// Groups of order <= 64 get a bitmask evaluation of |kind-H sumset|.
std::size_t fast_size(const GroupSubset& a, const MultiplicitySet& H, SumsetKind kind);

}  // namespace signedsum::detail
