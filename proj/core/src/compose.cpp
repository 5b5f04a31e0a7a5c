#include "composita/compose.hpp"

#include <stdexcept>

namespace composita {

namespace {

void require_kind(const Series& s, Kind kind, const char* role) {
    if (s.kind() != kind) {
        throw std::invalid_argument(std::string(role) + ": wrong series kind");
    }
}

}  // namespace

Series compose_coeffs(std::span<const Rational> outer_coeffs, const Series& inner) {
    if (!inner.zero_constant_term()) {
        throw std::invalid_argument("compose_coeffs: inner series has a nonzero free term");
    }
    const int order = inner.order();
    if (static_cast<int>(outer_coeffs.size()) < order + 1) {
        throw std::invalid_argument("compose_coeffs: outer coefficients cover order " +
                                    std::to_string(static_cast<int>(outer_coeffs.size()) - 1) +
                                    ", inner has order " + std::to_string(order));
    }
    if (order == 0) {
        return Series(Kind::ordinary, {outer_coeffs[0]});
    }
    CompositaTable table = composita_by_power(inner);
    std::vector<Rational> h(static_cast<size_t>(order) + 1);
    h[0] = outer_coeffs[0];
    for (int n = 1; n <= order; ++n) {
        Rational acc;
        for (int k = 1; k <= n; ++k) {
            const Rational& r = outer_coeffs[static_cast<size_t>(k)];
            if (r.is_zero()) continue;
            acc += table.at(n, k) * r;
        }
        h[static_cast<size_t>(n)] = std::move(acc);
    }
    return Series(Kind::ordinary, std::move(h));
}

Series compose_egf_egf(const Series& outer, const Series& inner) {
    require_kind(outer, Kind::exponential, "compose_egf_egf outer");
    require_kind(inner, Kind::exponential, "compose_egf_egf inner");
    Series h = compose_coeffs(outer.coeffs(), inner);
    return Series(Kind::exponential, std::vector<Rational>(h.coeffs().begin(), h.coeffs().end()));
}

Series compose_ogf_egf(const Series& outer, const Series& inner) {
    require_kind(outer, Kind::ordinary, "compose_ogf_egf outer");
    require_kind(inner, Kind::exponential, "compose_ogf_egf inner");
    Series h = compose_coeffs(outer.coeffs(), inner);
    return Series(Kind::exponential, std::vector<Rational>(h.coeffs().begin(), h.coeffs().end()));
}

std::vector<bool> integrality_of_composition(const Series& outer, const Series& inner) {
    Series g = compose_egf_egf(outer, inner);
    std::vector<bool> flags(static_cast<size_t>(g.order()) + 1);
    for (int n = 0; n <= g.order(); ++n) {
        flags[static_cast<size_t>(n)] = g.egf_coefficient(n).is_integer();
    }
    return flags;
}

}  // namespace composita
