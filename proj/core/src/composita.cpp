#include "composita/composita.hpp"

#include <stdexcept>

#include "composita/numbers.hpp"

namespace composita {

namespace {

size_t triangle_index(int n, int k) {
    return static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2 +
           static_cast<size_t>(k) - 1;
}

void require_admissible_inner(const Series& f, const char* op) {
    if (!f.zero_constant_term()) {
        throw std::invalid_argument(std::string(op) + ": series has a nonzero free term");
    }
}

void require_positive_pair(int n, int k, const char* op) {
    if (n < 1 || k < 1) {
        throw std::invalid_argument(std::string(op) + ": n and k must be >= 1");
    }
}

Rational integer_power(const Integer& base, int exponent) {
    Integer mag;
    mpz_pow_ui(mag.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent < 0 ? Rational(Integer(1), mag) : Rational(mag);
}

}  // namespace

CompositaTable::CompositaTable(int order, std::vector<Rational> entries)
    : order_(order), entries_(std::move(entries)) {
    size_t expected = static_cast<size_t>(order) * (static_cast<size_t>(order) + 1) / 2;
    if (order < 1 || entries_.size() != expected) {
        throw std::invalid_argument("CompositaTable: entry count does not match order");
    }
}

const Rational& CompositaTable::at(int n, int k) const {
    if (n < 1 || n > order_ || k < 1) {
        throw std::out_of_range("CompositaTable::at: (" + std::to_string(n) + "," +
                                std::to_string(k) + ") outside table of order " +
                                std::to_string(order_));
    }
    static const Rational zero;
    if (k > n) return zero;
    return entries_[triangle_index(n, k)];
}

CompositaTable composita_by_power(const Series& f) {
    require_admissible_inner(f, "composita_by_power");
    const int order = f.order();
    if (order < 1) {
        throw std::invalid_argument("composita_by_power: order must be >= 1");
    }
    std::vector<Rational> entries(static_cast<size_t>(order) * (static_cast<size_t>(order) + 1) / 2);

    // power holds F^k; advance by one convolution with F per column.
    std::vector<Rational> power(f.coeffs().begin(), f.coeffs().end());
    for (int k = 1; k <= order; ++k) {
        for (int n = k; n <= order; ++n) {
            entries[triangle_index(n, k)] = power[static_cast<size_t>(n)];
        }
        if (k == order) break;
        std::vector<Rational> next(static_cast<size_t>(order) + 1);
        for (int i = 0; i <= order; ++i) {
            if (power[static_cast<size_t>(i)].is_zero()) continue;
            for (int j = 1; i + j <= order; ++j) {
                next[static_cast<size_t>(i + j)] += power[static_cast<size_t>(i)] * f.coeff(j);
            }
        }
        power = std::move(next);
    }
    return CompositaTable(order, std::move(entries));
}

namespace {

// Recursion over the first part lambda_1; depth k, no memoization.
Rational composition_sum(const Series& f, int n, int k) {
    if (k == 1) return f.coeff(n);
    Rational acc;
    for (int first = 1; first <= n - (k - 1); ++first) {
        const Rational& c = f.coeff(first);
        if (c.is_zero()) continue;
        acc += c * composition_sum(f, n - first, k - 1);
    }
    return acc;
}

}  // namespace

Rational composita_by_compositions(const Series& f, int n, int k) {
    require_admissible_inner(f, "composita_by_compositions");
    if (n < 1 || k < 1 || k > n || n > f.order()) {
        throw std::out_of_range("composita_by_compositions: need 1 <= k <= n <= order");
    }
    return composition_sum(f, n, k);
}

Rational stirling2_composita(int n, int k) {
    require_positive_pair(n, k, "stirling2_composita");
    if (k > n) return Rational();
    return Rational(factorial(k) * stirling2(n, k), factorial(n));
}

Rational poly3_composita(int n, int k) {
    require_positive_pair(n, k, "poly3_composita");
    Rational acc;
    for (int j = 0; j <= k; ++j) {
        Integer b1 = binomial(j, n - 3 * k + 2 * j);
        if (b1 == 0) continue;
        Rational term(b1 * binomial(k, j));
        term *= integer_power(Integer(3), j - k);
        term *= integer_power(Integer(2), -n + 2 * k - j);
        acc += term;
    }
    return acc;
}

Rational artanh_composita(int n, int k) {
    require_positive_pair(n, k, "artanh_composita");
    Rational acc;
    for (int m = k; m <= n; ++m) {
        Integer numer = stirling1_unsigned(m, k) * binomial(n - 1, m - 1);
        if (numer == 0) continue;
        Integer two;
        mpz_pow_ui(two.get_mpz_t(), Integer(2).get_mpz_t(), static_cast<unsigned long>(m - k));
        if ((m - k) % 2 != 0) numer = -numer;
        acc += Rational(numer * two, factorial(m));
    }
    return acc * Rational(factorial(k));
}

}  // namespace composita
