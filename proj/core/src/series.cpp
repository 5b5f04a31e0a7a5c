#include "composita/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "composita/numbers.hpp"

namespace composita {

Series::Series(Kind kind, std::vector<Rational> coeffs)
    : kind_(kind), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("Series: needs at least the constant coefficient");
    }
}

Series Series::zero(Kind kind, int order) {
    if (order < 0) throw std::invalid_argument("Series::zero: negative order");
    return Series(kind, std::vector<Rational>(order + 1));
}

Series Series::one(Kind kind, int order) {
    Series s = zero(kind, order);
    s.coeffs_[0] = Rational(1);
    return s;
}

const Rational& Series::coeff(int n) const {
    if (n < 0 || n > order()) {
        throw std::out_of_range("Series::coeff: index " + std::to_string(n) +
                                " outside 0.." + std::to_string(order()));
    }
    return coeffs_[static_cast<size_t>(n)];
}

Rational Series::egf_coefficient(int n) const {
    if (kind_ != Kind::exponential) {
        throw std::invalid_argument("egf_coefficient: series is not exponential");
    }
    return coeff(n) * Rational(factorial(n));
}

bool Series::has_integer_egf_coefficients() const {
    for (int n = 0; n <= order(); ++n) {
        if (!(coeffs_[static_cast<size_t>(n)] * Rational(factorial(n))).is_integer()) {
            return false;
        }
    }
    return true;
}

bool Series::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_integer(); });
}

Series Series::truncated(int new_order) const {
    if (new_order < 0 || new_order > order()) {
        throw std::invalid_argument("Series::truncated: order " + std::to_string(new_order) +
                                    " outside 0.." + std::to_string(order()));
    }
    return Series(kind_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

namespace {

void require_same_kind(const Series& a, const Series& b, const char* op) {
    if (a.kind() != b.kind()) {
        throw std::invalid_argument(std::string(op) + ": incompatible series kinds");
    }
}

std::vector<Rational> convolve(std::span<const Rational> a, std::span<const Rational> b,
                               int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        Rational acc;
        for (int i = 0; i <= n; ++i) {
            acc += a[static_cast<size_t>(i)] * b[static_cast<size_t>(n - i)];
        }
        c[static_cast<size_t>(n)] = std::move(acc);
    }
    return c;
}

}  // namespace

Series operator+(const Series& a, const Series& b) {
    require_same_kind(a, b, "series addition");
    int order = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        c[static_cast<size_t>(n)] = a.coeff(n) + b.coeff(n);
    }
    return Series(a.kind(), std::move(c));
}

Series operator*(const Series& a, const Series& b) {
    require_same_kind(a, b, "series multiplication");
    int order = std::min(a.order(), b.order());
    return Series(a.kind(), convolve(a.coeffs(), b.coeffs(), order));
}

Series pow(const Series& f, int k) {
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    if (k == 0) return Series::one(f.kind(), f.order());
    if (!f.zero_constant_term()) {
        throw std::invalid_argument("pow: series has a free term, truncation would be inexact");
    }
    // square-and-multiply over truncated series; mul keeps truncation exact
    Series result = Series::one(f.kind(), f.order());
    Series base = f;
    for (int e = k; e > 0; e >>= 1) {
        if (e & 1) result = result * base;
        if (e > 1) base = base * base;
    }
    return result;
}

}  // namespace composita
