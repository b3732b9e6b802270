#include "signedsum/search.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>

#include "mask_kernel.hpp"
#include "signedsum/structure.hpp"

namespace signedsum {

// ---------------------------------------------------------------------------
// ClassFilter

ClassFilter ClassFilter::parse(std::string_view text) {
    ClassFilter f;
    auto plus = text.find('+');
    std::string_view head = text.substr(0, plus);
    if (plus != std::string_view::npos) {
        auto tail = text.substr(plus + 1);
        if (tail == "zero") f.zero = Zero::Required;
        else if (tail == "nozero") f.zero = Zero::Excluded;
        else throw ParseError("unknown filter modifier '" + std::string(tail) + "'", plus + 1);
    }
    if (head == "all") f.kind = Kind::All;
    else if (head == "sym") f.kind = Kind::Sym;
    else if (head == "asym") f.kind = Kind::Asym;
    else if (head == "nsym") f.kind = Kind::Nsym;
    else if (head == "A") f.kind = Kind::ClassA;
    else if (head == "contains-zero") f.kind = Kind::ContainsZero;
    else if (head.starts_with("sdeg=")) {
        f.kind = Kind::SdegEquals;
        auto num = head.substr(5);
        std::size_t s = 0;
        if (num.empty()) throw ParseError("sdeg= needs a value", 5);
        for (std::size_t i = 0; i < num.size(); ++i) {
            if (num[i] < '0' || num[i] > '9') throw ParseError("invalid sdeg value", 5 + i);
            s = s * 10 + static_cast<std::size_t>(num[i] - '0');
        }
        f.s = s;
    } else {
        throw ParseError("unknown filter '" + std::string(head) +
                             "' (expected all, sym, asym, nsym, A, sdeg=<s>, contains-zero)",
                         0);
    }
    return f;
}

std::string ClassFilter::to_string() const {
    std::string out;
    switch (kind) {
        case Kind::All: out = "all"; break;
        case Kind::Sym: out = "sym"; break;
        case Kind::Asym: out = "asym"; break;
        case Kind::Nsym: out = "nsym"; break;
        case Kind::ClassA: out = "A"; break;
        case Kind::SdegEquals: out = "sdeg=" + std::to_string(s); break;
        case Kind::ContainsZero: out = "contains-zero"; break;
    }
    if (zero == Zero::Required) out += "+zero";
    if (zero == Zero::Excluded) out += "+nozero";
    return out;
}

bool ClassFilter::accepts(const GroupSubset& a) const {
    bool has_zero = a.contains(a.group().zero());
    if (zero == Zero::Required && !has_zero) return false;
    if (zero == Zero::Excluded && has_zero) return false;
    switch (kind) {
        case Kind::All: return true;
        case Kind::Sym: return is_symmetric(a);
        case Kind::Asym: return is_asymmetric(a);
        case Kind::Nsym: return is_near_symmetric(a);
        case Kind::ClassA: return in_class_a(a);
        case Kind::SdegEquals: return sdeg(a) == s;
        case Kind::ContainsZero: return has_zero;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(r);
}

namespace {

// Lexicographic combinations of {0, ..., n-1}.
class Combination {
public:
    Combination(std::size_t n, std::size_t m, std::uint64_t rank) : n_(n), idx_(m) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < m; ++i) {
            for (;; ++c) {
                auto below = binomial_saturating(n - c - 1, m - i - 1);
                if (rank < below) break;
                rank -= below;
            }
            idx_[i] = static_cast<Code>(c++);
        }
    }

    const std::vector<Code>& codes() const { return idx_; }

    void next() {
        const auto m = idx_.size();
        std::size_t i = m;
        while (i > 0 && static_cast<std::size_t>(idx_[i - 1]) == n_ - m + i - 1) --i;
        if (i == 0) return;
        ++idx_[i - 1];
        for (std::size_t j = i; j < m; ++j) idx_[j] = idx_[j - 1] + 1;
    }

private:
    std::size_t n_;
    std::vector<Code> idx_;
};

struct Local {
    bool found = false;
    std::size_t value = 0;
    std::vector<Code> witness;
    std::uint64_t examined = 0;
    std::uint64_t pruned = 0;

    void offer(std::size_t v, const std::vector<Code>& w) {
        ++examined;
        if (!found || v < value) {
            found = true;
            value = v;
            witness = w;
        }
    }
};

// Chunks are merged in rank order, so a strict "<" keeps the lexicographically first minimizer.
void merge_into(Local& acc, const Local& part) {
    acc.examined += part.examined;
    acc.pruned += part.pruned;
    if (part.found && (!acc.found || part.value < acc.value)) {
        acc.found = true;
        acc.value = part.value;
        acc.witness = part.witness;
    }
}

void validate(const RhoQuery& q) {
    if (!q.group.is_finite()) throw std::invalid_argument("rho needs a finite group");
    if (q.m < 1 || q.m > q.group.order())
        throw std::invalid_argument("rho needs 1 <= m <= |G|, got m = " + std::to_string(q.m));
    if (q.filter.kind == ClassFilter::Kind::SdegEquals && q.filter.s > q.m)
        throw std::invalid_argument("filter sdeg=s needs s <= m");
}

std::uint64_t check_envelope(const RhoQuery& q, const SearchLimits& limits) {
    auto total = binomial_saturating(q.group.order(), q.m);
    if (total > limits.max_subsets)
        throw EnvelopeError("search space C(" + std::to_string(q.group.order()) + ", " + std::to_string(q.m) +
                                ") = " + (total == UINT64_MAX ? std::string(">= 2^64") : std::to_string(total)) +
                                " subsets exceeds the limit of " + std::to_string(limits.max_subsets),
                            total);
    return total;
}

RhoResult finish(const RhoQuery& q, const Local& acc) {
    if (!acc.found)
        throw EmptyClassError("no " + std::to_string(q.m) + "-subset of " + q.group.to_string() +
                              " passes filter " + q.filter.to_string());
    RhoResult r;
    r.value = acc.value;
    r.witness = GroupSubset(q.group, acc.witness);
    r.sets_examined = acc.examined;
    r.pruned_by_automorphism = acc.pruned;
    return r;
}

void generic_range(const RhoQuery& q, std::uint64_t lo, std::uint64_t hi, Local& out) {
    if (lo >= hi) return;
    const bool prune = q.prune && q.group.is_cyclic();
    Combination comb(q.group.order(), q.m, lo);
    for (std::uint64_t r = lo; r < hi; ++r, comb.next()) {
        GroupSubset a(q.group, comb.codes());
        if (!q.filter.accepts(a)) continue;
        if (prune && !automorphism_orbit_prune(q.group, a)) {
            ++out.pruned;
            continue;
        }
        out.offer(union_fold(a, q.H, q.kind).size(), comb.codes());
    }
}

void mask_range(const RhoQuery& q, const detail::MaskKernel& k, std::uint64_t lo, std::uint64_t hi, Local& out) {
    if (lo >= hi) return;
    const bool prune = q.prune && q.group.is_cyclic();
    Combination comb(q.group.order(), q.m, lo);
    for (std::uint64_t r = lo; r < hi; ++r, comb.next()) {
        detail::Mask a = 0;
        for (Code c : comb.codes()) a |= detail::Mask{1} << c;
        if (!k.accepts(a, q.filter)) continue;
        if (prune && !k.canonical(a)) {
            ++out.pruned;
            continue;
        }
        out.offer(static_cast<std::size_t>(std::popcount(k.sumset(a, q.H, q.kind))), comb.codes());
    }
}

}  // namespace

void for_each_subset(const GroupSpec& g, std::size_t m, const ClassFilter& filter,
                     const std::function<void(const GroupSubset&)>& fn) {
    if (!g.is_finite()) throw std::invalid_argument("subset enumeration needs a finite group");
    if (m < 1 || m > g.order()) throw std::invalid_argument("need 1 <= m <= |G|");
    auto total = binomial_saturating(g.order(), m);
    Combination comb(g.order(), m, 0);
    for (std::uint64_t r = 0; r < total; ++r, comb.next()) {
        GroupSubset a(g, comb.codes());
        if (filter.accepts(a)) fn(a);
    }
}

std::vector<GroupSubset> enumerate_subsets(const GroupSpec& g, std::size_t m, const ClassFilter& filter) {
    std::vector<GroupSubset> out;
    for_each_subset(g, m, filter, [&](const GroupSubset& a) { out.push_back(a); });
    return out;
}

bool automorphism_orbit_prune(const GroupSpec& g, const GroupSubset& a) {
    if (!g.is_cyclic()) return true;
    const auto n = static_cast<std::int64_t>(g.order());
    for (std::int64_t u = 2; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        if (dilate(a, u) < a) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// rho

RhoResult rho(const RhoQuery& q, const SearchLimits& limits) {
    validate(q);
    auto total = check_envelope(q, limits);
    Local acc;
    generic_range(q, 0, total, acc);
    return finish(q, acc);
}

RhoResult rho_parallel(const RhoQuery& q, int workers, const SearchLimits& limits) {
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    validate(q);
    const auto total = check_envelope(q, limits);

    std::optional<detail::MaskKernel> kernel;
    if (q.group.order() <= detail::kMaxKernelOrder && q.H.max() <= detail::kMaxKernelH) kernel.emplace(q.group);

    const std::uint64_t chunks =
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, static_cast<std::uint64_t>(workers) * 16));
    std::vector<Local> parts(chunks);
    std::atomic<std::uint64_t> done{0};
    auto last = std::chrono::steady_clock::now();
    std::mutex progress_mu;
    auto report = [&](std::uint64_t finished) {
        *limits.progress << "rho " << q.group.to_string() << " m=" << q.m << ": " << finished << "/" << chunks
                         << " chunks\n";
        limits.progress->flush();
    };

#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(chunks); ++i) {
        auto ui = static_cast<unsigned __int128>(i);
        auto lo = static_cast<std::uint64_t>(ui * total / chunks);
        auto hi = static_cast<std::uint64_t>((ui + 1) * total / chunks);
        if (kernel) mask_range(q, *kernel, lo, hi, parts[static_cast<std::size_t>(i)]);
        else generic_range(q, lo, hi, parts[static_cast<std::size_t>(i)]);
        auto finished = ++done;
        if (limits.progress) {
            std::unique_lock lock(progress_mu, std::try_to_lock);
            auto now = std::chrono::steady_clock::now();
            if (lock && finished < chunks && now - last >= limits.progress_interval) {
                last = now;
                report(finished);
            }
        }
    }
    if (limits.progress) report(chunks);

    Local acc;
    for (const auto& p : parts) merge_into(acc, p);
    return finish(q, acc);
}

std::optional<RhoResult> try_rho(const RhoQuery& q, int workers, const SearchLimits& limits) {
    try {
        return rho_parallel(q, workers, limits);
    } catch (const EmptyClassError&) {
        return std::nullopt;
    }
}

int default_workers() {
    if (const char* env = std::getenv("SIGNEDSUM_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
    }
    return std::max(1, omp_get_max_threads());
}

}  // namespace signedsum
