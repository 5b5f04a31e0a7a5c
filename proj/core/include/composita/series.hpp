#pragma once

#include <span>
#include <vector>

#include "composita/rational.hpp"

namespace composita {

/// How a series' coefficients are meant to be read. The stored values are
/// always ordinary coefficients c(n) = [x^n]; an exponential series exposes
/// its EGF coefficients as a(n) = n! * c(n).
enum class Kind { ordinary, exponential };

/// A power series truncated at an explicit order N, with exact rational
/// coefficients c(0..N). Immutable after construction; all operations on
/// series are pure functions, so values can be shared freely across threads.
class Series {
public:
    /// Order is coeffs.size() - 1; coeffs must be nonempty.
    Series(Kind kind, std::vector<Rational> coeffs);

    static Series zero(Kind kind, int order);
    /// The one-series: c(0) = 1, all other coefficients zero.
    static Series one(Kind kind, int order);

    Kind kind() const { return kind_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Ordinary coefficient c(n); throws std::out_of_range outside 0..order.
    const Rational& coeff(int n) const;

    std::span<const Rational> coeffs() const { return coeffs_; }

    /// EGF coefficient a(n) = n! * c(n). Requires kind == exponential;
    /// throws std::invalid_argument otherwise, std::out_of_range on bad n.
    Rational egf_coefficient(int n) const;

    bool zero_constant_term() const { return coeffs_.front().is_zero(); }

    /// True when every EGF coefficient n! * c(n) is an integer.
    bool has_integer_egf_coefficients() const;
    /// True when every ordinary coefficient is an integer.
    bool has_integer_coefficients() const;

    /// Copy truncated to a lower order. Throws std::invalid_argument when
    /// new_order exceeds the current order (extension would fabricate
    /// coefficients).
    Series truncated(int new_order) const;

    friend bool operator==(const Series& a, const Series& b) = default;

private:
    Kind kind_;
    std::vector<Rational> coeffs_;
};

/// Coefficientwise sum, truncated to min of the operand orders.
/// Throws std::invalid_argument on kind mismatch.
Series operator+(const Series& a, const Series& b);

/// Cauchy product, truncated to min of the operand orders.
/// Throws std::invalid_argument on kind mismatch.
Series operator*(const Series& a, const Series& b);

/// F^k truncated to F's order, by binary exponentiation. k = 0 gives the
/// one-series. For k >= 1 requires c(0) = 0; throws std::invalid_argument
/// otherwise, and on negative k.
Series pow(const Series& f, int k);

}  // namespace composita
