#pragma once

#include <span>
#include <vector>

#include "composita/composita.hpp"
#include "composita/series.hpp"

namespace composita {

/// Composition H = R(F) through the composita table of F:
/// h(n) = sum_{k=1..n} F^Delta(n,k) * r(k) for n >= 1, h(0) = r(0),
/// where outer_coeffs are the ordinary coefficients r(0..). Requires
/// F.c(0) = 0 and outer_coeffs.size() >= F.order() + 1. Result is an
/// ordinary series of F's order.
Series compose_coeffs(std::span<const Rational> outer_coeffs, const Series& inner);

/// EGF-in-EGF composition G = A(E). Both series exponential, E.c(0) = 0,
/// A at least E's order. G is exponential with g(n) = n! * sum_k
/// E^Delta(n,k) a(k)/k! and g(0) = a(0).
Series compose_egf_egf(const Series& outer, const Series& inner);

/// Ordinary outer, exponential inner: G = B(E) with
/// g(n) = n! * sum_k E^Delta(n,k) b(k), g(0) = b(0). G is exponential.
Series compose_ogf_egf(const Series& outer, const Series& inner);

/// Flags, per n in 0..order, whether the EGF coefficient g(n) of
/// compose_egf_egf(outer, inner) is an integer. For integer-EGF inputs
/// every flag is true; a false flag is a finding, not an error.
std::vector<bool> integrality_of_composition(const Series& outer, const Series& inner);

}  // namespace composita
