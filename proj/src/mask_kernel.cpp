#include "mask_kernel.hpp"

#include <array>
#include <numeric>

#include "signedsum/structure.hpp"

namespace signedsum::detail {

MaskKernel::MaskKernel(const GroupSpec& g) {
    if (!g.is_finite() || g.order() > kMaxKernelOrder)
        throw std::invalid_argument("mask kernel needs a finite group of order <= 64");
    n_ = static_cast<int>(g.order());
    full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    cyclic_ = g.is_cyclic();
    add_.resize(static_cast<std::size_t>(n_ * n_));
    neg_.resize(static_cast<std::size_t>(n_));
    mul_.resize(static_cast<std::size_t>((kMaxKernelH + 1) * n_));
    for (int x = 0; x < n_; ++x) {
        neg_[x] = static_cast<std::uint8_t>(g.neg(x));
        for (int y = 0; y < n_; ++y) add_[x * n_ + y] = static_cast<std::uint8_t>(g.add(x, y));
        for (int j = 0; j <= kMaxKernelH; ++j) mul_[j * n_ + x] = static_cast<std::uint8_t>(g.mul(j, x));
    }
    if (cyclic_) {
        for (int u = 2; u < n_; ++u) {
            if (std::gcd(u, n_) != 1) continue;
            std::vector<std::uint8_t> perm(static_cast<std::size_t>(n_));
            for (int x = 0; x < n_; ++x) perm[x] = static_cast<std::uint8_t>((u * x) % n_);
            unit_perms_.push_back(std::move(perm));
        }
    }
}

Mask MaskKernel::translate(Mask m, Code x) const {
    if (x == 0 || m == 0) return m;
    if (cyclic_) {
        auto s = static_cast<int>(x);
        return ((m << s) | (m >> (n_ - s))) & full_;
    }
    return map(m, &add_[static_cast<std::size_t>(x) * n_]);
}

Mask MaskKernel::sumset(Mask a, const MultiplicitySet& H, SumsetKind kind) const {
    const int hmax = H.max();
    if (hmax > kMaxKernelH) throw std::invalid_argument("mask kernel supports h <= 31");
    std::uint64_t want = 0;
    for (int h : H.values()) want |= std::uint64_t{1} << h;
    auto wanted = [&](int h) { return (want >> h) & 1; };

    Mask result = wanted(0) ? Mask{1} : 0;
    std::array<Mask, kMaxKernelH + 1> layer{};
    layer[0] = 1;

    switch (kind) {
        case SumsetKind::Plain: {
            Mask s = 1;
            for (int j = 1; j <= hmax; ++j) {
                Mask t = 0;
                for (Mask r = a; r; r &= r - 1) t |= translate(s, std::countr_zero(r));
                s = t;
                if (wanted(j)) result |= s;
            }
            return result;
        }
        case SumsetKind::Restricted:
        case SumsetKind::RestrictedSigned: {
            const bool sign = kind == SumsetKind::RestrictedSigned;
            int seen = 0;
            for (Mask r = a; r; r &= r - 1) {
                int x = std::countr_zero(r);
                int top = std::min(++seen, hmax);
                for (int c = top; c >= 1; --c) {
                    Mask prev = layer[c - 1];
                    if (!prev) continue;
                    layer[c] |= translate(prev, x);
                    if (sign) layer[c] |= translate(prev, neg_[x]);
                }
            }
            break;
        }
        case SumsetKind::Signed: {
            for (Mask r = a; r; r &= r - 1) {
                int x = std::countr_zero(r);
                std::array<Mask, kMaxKernelH + 1> next{};
                for (int w = 0; w <= hmax; ++w) {
                    for (int j = 0; j <= w; ++j) {
                        Mask src = layer[w - j];
                        if (!src) continue;
                        Code jx = mul_[j * n_ + x];
                        next[w] |= translate(src, jx);
                        if (j) next[w] |= translate(src, neg_[jx]);
                    }
                }
                layer = next;
            }
            break;
        }
    }
    for (int h = 1; h <= hmax; ++h)
        if (wanted(h)) result |= layer[h];
    return result;
}

bool MaskKernel::accepts(Mask a, const ClassFilter& f) const {
    using K = ClassFilter::Kind;
    using Z = ClassFilter::Zero;
    bool has_zero = a & 1;
    if (f.zero == Z::Required && !has_zero) return false;
    if (f.zero == Z::Excluded && has_zero) return false;
    auto m = static_cast<std::size_t>(std::popcount(a));
    auto sd = static_cast<std::size_t>(std::popcount(a & negate(a)));
    auto lonely = m - sd;
    switch (f.kind) {
        case K::All: return true;
        case K::Sym: return lonely == 0;
        case K::Asym: return sd == 0;
        case K::Nsym: return lonely == 1;
        case K::ClassA: return lonely <= 1 || lonely == m;
        case K::SdegEquals: return sd == f.s;
        case K::ContainsZero: return has_zero;
    }
    return false;
}

bool MaskKernel::canonical(Mask a) const {
    for (const auto& perm : unit_perms_)
        if (lex_less(map(a, perm.data()), a)) return false;
    return true;
}

Mask MaskKernel::from_subset(const GroupSubset& a) const {
    Mask m = 0;
    for (Code c : a.codes()) m |= Mask{1} << c;
    return m;
}

GroupSubset MaskKernel::to_subset(const GroupSpec& g, Mask m) const {
    std::vector<Code> codes;
    for (; m; m &= m - 1) codes.push_back(std::countr_zero(m));
    return GroupSubset(g, std::move(codes));
}

}  // namespace signedsum::detail
