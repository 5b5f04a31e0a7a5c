#pragma once

#include <vector>

#include "composita/series.hpp"

namespace composita {

/// Triangular table of composita values F^Delta(n,k) = [x^n] F(x)^k for
/// 1 <= k <= n <= order. Immutable after construction; safe for concurrent
/// reads.
///
/// Structural identities: F^Delta(n,1) = c(n), F^Delta(n,n) = c(1)^n, and
/// F^Delta(n,k) = 0 whenever k > n.
class CompositaTable {
public:
    /// Entries row-major: n = 1..order, k = 1..n.
    CompositaTable(int order, std::vector<Rational> entries);

    int order() const { return order_; }

    /// F^Delta(n,k). Requires 1 <= n <= order and k >= 1; values with
    /// k > n are zero.
    const Rational& at(int n, int k) const;

private:
    int order_;
    std::vector<Rational> entries_;
};

/// Composita by power-raising: column k of the table is F^k, computed by
/// iterated multiplication reusing F^(k-1). Requires c(0) = 0; throws
/// std::invalid_argument otherwise.
CompositaTable composita_by_power(const Series& f);

/// Brute-force composita: the sum over all compositions of n into exactly
/// k positive parts of the products of ordinary coefficients. Exponential
/// time, meant as an oracle for small n. Requires 1 <= k <= n <= f.order()
/// and c(0) = 0.
Rational composita_by_compositions(const Series& f, int n, int k);

/// Closed-form composita of e^x - 1: k! * S(n,k) / n!.
Rational stirling2_composita(int n, int k);

/// Closed-form composita of x + x^2/2 + x^3/6:
/// sum_j C(j, n-3k+2j) * 3^(j-k) * C(k,j) * 2^(-n+2k-j), binomials vanishing
/// outside range.
Rational poly3_composita(int n, int k);

/// Closed-form composita of artanh(x):
/// k! * sum_{m=k..n} (-2)^(m-k)/m! * [m k] * C(n-1, m-1), with unsigned
/// Stirling-1 numbers [m k]; the alternating factor carries the signed
/// Stirling-1 convention that matches power-raising.
Rational artanh_composita(int n, int k);

}  // namespace composita
