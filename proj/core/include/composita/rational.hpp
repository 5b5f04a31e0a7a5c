#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace composita {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, always reduced: gcd(|num|, den) = 1 and
/// den >= 1. Zero is 0/1. Every operation is exact; nothing ever rounds.
///
/// Values are immutable in the sense that all operations return fresh
/// rationals; it is safe to share const references across threads.
class Rational {
public:
    Rational() = default;
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(n) {}
    Rational(Integer n) : q_(std::move(n)) {}

    /// num/den, reduced on construction. Throws std::invalid_argument when
    /// den is zero.
    Rational(const Integer& num, const Integer& den);

    /// Parses "p/q" or plain "p" in decimal ("13/4", "9", "-1").
    /// Throws std::invalid_argument on malformed input or zero denominator.
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// The integer value; throws std::domain_error when denominator != 1.
    Integer to_integer() const;

    /// "p/q" with the "/q" part omitted when the denominator is 1.
    std::string str() const;

    Rational operator-() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    /// Exact division; throws std::invalid_argument on a zero divisor.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;  // invariant: canonical form (reduced, positive denominator)
};

}  // namespace composita
