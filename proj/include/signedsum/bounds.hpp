#pragma once

// Closed-form lower bounds and polynomial-method coefficients, in exact
// arithmetic. Every bound evaluator reports the branch it took and the
// hypotheses it checked; bounds that cannot be applied come back with
// applicable = false instead of throwing.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "signedsum/group.hpp"

namespace signedsum {

using ExactInteger = mpz_class;

ExactInteger factorial(std::int64_t n);
ExactInteger binomial(std::int64_t n, std::int64_t k);
/// n! / prod(parts_i!); throws std::invalid_argument unless sum(parts) = n.
ExactInteger multinomial(std::int64_t n, const std::vector<std::int64_t>& parts);

// Coefficient of prod x_i^e, e = 2k - 1 - l, in (x_1 + ... + x_h)^K p(x)
// with p = x1+x2 (h=2), (x1+x2)(x1+x3)(x2+x3) (h=3), prod_{i<j}(xi+xj) (h=4)
// and K = h e - deg p.

/// C(2e, e).
ExactInteger coeff_h2(std::int64_t k, std::int64_t l = 0);
/// 2(4e-3)(3e-3)! / (e! ((e-1)!)^2); requires e >= 1 (k >= 2 when l = 0).
ExactInteger coeff_h3(std::int64_t k, std::int64_t l = 0);
/// 8(8k-10-4l)!(32k^2-64k-32kl+32l+8l^2+31) / ((2k-1-l)!((2k-2-l)!)^2(2k-3-l)!);
/// requires 2k - 3 - l >= 0.
ExactInteger coeff_h4(std::int64_t k, std::int64_t l = 0);

/// The same coefficient by dense truncated polynomial multiplication,
/// independent of the closed forms. Throws std::invalid_argument if the total
/// degree h*e exceeds `degree_cap`.
ExactInteger symbolic_coefficient_oracle(int h, std::int64_t k, std::int64_t l = 0, int degree_cap = 60);

struct PrimePower {
    ExactInteger base;
    unsigned exponent;
};
/// Trial division by primes up to `limit`; a leftover cofactor > 1 is
/// reported with exponent 1 (it may be composite). n must be positive.
std::vector<PrimePower> factor_trial(const ExactInteger& n, std::uint64_t limit = 1000000);
/// "2^4 * 3 * 5 * 31"
std::string factorization_string(const std::vector<PrimePower>& f);

enum class Residuosity { Residue, NonResidue, Zero };
std::string to_string(Residuosity r);
/// Euler's criterion for an odd prime p.
Residuosity is_quadratic_residue(std::int64_t a, std::int64_t p);

/// 2hk - h(3h-1)/2 - hs
std::int64_t theta(std::int64_t k, std::int64_t h, std::int64_t s);
/// Least l >= 1 with theta - l h + 1 <= p < theta - (l-1) h + 1.
/// Throws std::domain_error unless p is finite and p < theta + 1.
std::int64_t ell(std::int64_t theta_val, ExtendedCount p, std::int64_t h);
/// (k-1)h - (m+1)h(h-1)/2
std::int64_t liu_sun_K(std::int64_t k, std::int64_t m, std::int64_t h);

struct Hypothesis {
    std::string label;
    bool met;
};

struct BoundResult {
    /// Lower bound on a cardinality; negative closed forms are reported as 0.
    ExtendedCount value;
    bool applicable = true;
    std::string branch;
    std::vector<Hypothesis> hypotheses;
};

/// |h±A| for A ∩ (−A) = ∅, |A| = k, in a field with p(F) = p; h in {2,3,4}.
BoundResult bound_signed_field(std::int64_t k, ExtendedCount p, int h);

/// The three-case bound on |h±^A| in a field. Throws std::invalid_argument
/// unless 2 <= h <= k and h - 1 <= p.
BoundResult bound_restricted_field(std::int64_t k, ExtendedCount p, std::int64_t h, std::int64_t s);

/// min(p, hm - h + 1); branch "equality" when m <= p.
BoundResult bound_plagne(ExtendedCount p, std::int64_t m, std::int64_t h);
/// min(p, |A| + |B| - 1)
BoundResult bound_devos(ExtendedCount p, std::int64_t a, std::int64_t b);
/// hk - h + 1 over Z.
BoundResult bound_nathanson(std::int64_t k, std::int64_t h);
/// min(p, 2hm - hs - h + 1); branch "equality" when 2m - s <= p.
BoundResult bound_rho_s(ExtendedCount p, std::int64_t m, std::int64_t h, std::int64_t s);
/// min(p, hm - h^2 + 1) for |h^A|, h <= m.
BoundResult bound_restricted_plain(ExtendedCount p, std::int64_t m, std::int64_t h);
/// |[0,h]±^A| >= min(p, 2hm - h^2 - hs + 1 (+h when 0 ∉ A)).
BoundResult bound_restricted_interval(ExtendedCount p, std::int64_t m, std::int64_t h, std::int64_t s,
                                      bool zero_in_a);
/// Class minima of |[0,h]±^A|: cls is "asym", "sym" or "nsym".
BoundResult bound_restricted_class(ExtendedCount p, std::int64_t m, std::int64_t h, const std::string& cls);
/// Positive integers: 4k - 2 (h = 2), 2hk - h + 1 (h >= 3); k >= 3.
BoundResult bound_positive_integers(std::int64_t k, std::int64_t h);
/// Z, h >= 3: 2hm - hs - h + 1. Z, h = 2: 4m - 2 (s = 0), 4m - 2s - 1 (s > 0).
BoundResult bound_integer_signed(std::int64_t m, std::int64_t h, std::int64_t s);

/// Named dispatcher for the command line: "signed-field", "restricted-field",
/// "plagne", "devos", "nathanson", "rho-s", "restricted-plain",
/// "restricted-interval", "restricted-class", "positive-integers",
/// "integer-signed". Integer parameters by name; `p` may be absent (infinity).
BoundResult evaluate_bound(const std::string& name, const std::map<std::string, std::int64_t>& params,
                           ExtendedCount p, const std::string& cls = "");
std::vector<std::string> bound_names();

}  // namespace signedsum
