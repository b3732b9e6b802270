#include <stdexcept>
#include <vector>

#include "signedsum/bounds.hpp"

namespace signedsum {

namespace {

// Dense polynomial in h variables, each exponent truncated at e.
class Truncated {
public:
    Truncated(int h, std::int64_t e) : h_(h), side_(static_cast<std::size_t>(e + 1)) {
        std::size_t total = 1;
        for (int i = 0; i < h; ++i) total *= side_;
        coef_.assign(total, 0);
        stride_.resize(static_cast<std::size_t>(h));
        std::size_t s = 1;
        for (int i = h - 1; i >= 0; --i) {
            stride_[static_cast<std::size_t>(i)] = s;
            s *= side_;
        }
    }

    ExactInteger& at_zero() { return coef_[0]; }
    const ExactInteger& at_top() const { return coef_.back(); }

    // this *= (sum of x_i for i in vars)
    void multiply_linear(const std::vector<int>& vars) {
        std::vector<ExactInteger> out(coef_.size(), 0);
        std::vector<std::size_t> exps(static_cast<std::size_t>(h_), 0);
        for (std::size_t idx = 0; idx < coef_.size(); ++idx) {
            if (coef_[idx] != 0) {
                for (int v : vars) {
                    auto vi = static_cast<std::size_t>(v);
                    if (exps[vi] + 1 < side_) out[idx + stride_[vi]] += coef_[idx];
                }
            }
            for (int i = h_ - 1; i >= 0; --i) {
                auto ui = static_cast<std::size_t>(i);
                if (++exps[ui] < side_) break;
                exps[ui] = 0;
            }
        }
        coef_.swap(out);
    }

private:
    int h_;
    std::size_t side_;
    std::vector<std::size_t> stride_;
    std::vector<ExactInteger> coef_;
};

}  // namespace

ExactInteger symbolic_coefficient_oracle(int h, std::int64_t k, std::int64_t l, int degree_cap) {
    if (h < 2 || h > 4) throw std::invalid_argument("oracle supports h in {2,3,4}");
    const std::int64_t e = 2 * k - 1 - l;
    if (k < 1 || l < 0 || e < 0) throw std::invalid_argument("oracle needs k >= 1, 0 <= l <= 2k - 1");
    if (h * e > degree_cap)
        throw std::invalid_argument("total degree " + std::to_string(h * e) + " exceeds cap " +
                                    std::to_string(degree_cap));
    const std::int64_t deg_p = h * (h - 1) / 2;
    const std::int64_t K = h * e - deg_p;
    if (K < 0) return 0;

    Truncated poly(h, e);
    poly.at_zero() = 1;
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j) poly.multiply_linear({i, j});
    std::vector<int> all;
    for (int i = 0; i < h; ++i) all.push_back(i);
    for (std::int64_t t = 0; t < K; ++t) poly.multiply_linear(all);
    return poly.at_top();
}

}  // namespace signedsum
