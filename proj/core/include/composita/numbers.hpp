#pragma once

#include <span>

#include "composita/rational.hpp"

namespace composita {

// Special sequences used throughout: Stirling numbers of both kinds, Bell
// numbers, Euler zigzag numbers, binomials and multinomials. All values are
// exact big integers computed by recurrences and memoized.
//
// The caches grow monotonically and are not synchronized: warm them up to
// the required bound before sharing work across threads, after which reads
// of computed prefixes are safe.

/// n!, memoized.
Integer factorial(int n);

/// C(n, k); zero outside 0 <= k <= n (the convention the composita closed
/// forms rely on).
Integer binomial(long n, long k);

/// Stirling number of the second kind S(n, k), by the recurrence
/// S(n,k) = k*S(n-1,k) + S(n-1,k-1). Zero for k > n; throws
/// std::invalid_argument on negative input.
Integer stirling2(int n, int k);

/// Unsigned Stirling number of the first kind, by the recurrence
/// c(m,k) = (m-1)*c(m-1,k) + c(m-1,k-1). Zero for k > m; throws
/// std::invalid_argument on negative input.
Integer stirling1_unsigned(int m, int k);

/// Bell number B_n, by the Bell triangle. Throws on negative n.
Integer bell(int n);

/// Euler zigzag number E(n) (alternating permutations; E(0..4) = 1,1,1,2,5),
/// by the boustrophedon triangle. Throws on negative n.
Integer euler_zigzag(int n);

/// n! / (parts[0]! * parts[1]! * ...). Parts must be positive and sum to n;
/// throws std::invalid_argument otherwise.
Integer multinomial(int n, std::span<const int> parts);

}  // namespace composita
