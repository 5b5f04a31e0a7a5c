#include "composita/builtins.hpp"

#include <stdexcept>

#include "composita/numbers.hpp"

namespace composita {

Integer sin_egf_coefficient(int n) {
    if (n < 0) throw std::invalid_argument("sin_egf_coefficient: negative index");
    if (n % 2 == 0) return 0;
    return ((n - 1) / 2) % 2 == 0 ? 1 : -1;
}

Series builtin_series(std::string_view name, int order) {
    if (order < 0) {
        throw std::invalid_argument("builtin_series: negative order");
    }
    std::vector<Rational> c(static_cast<size_t>(order) + 1);

    if (name == "x") {
        if (order >= 1) c[1] = 1;
        return Series(Kind::exponential, std::move(c));
    }
    if (name == "exp" || name == "expm1") {
        for (int n = (name == "exp" ? 0 : 1); n <= order; ++n) {
            c[static_cast<size_t>(n)] = Rational(Integer(1), factorial(n));
        }
        return Series(Kind::exponential, std::move(c));
    }
    if (name == "sin") {
        for (int n = 1; n <= order; n += 2) {
            c[static_cast<size_t>(n)] = Rational(sin_egf_coefficient(n), factorial(n));
        }
        return Series(Kind::exponential, std::move(c));
    }
    if (name == "artanh") {
        for (int n = 1; n <= order; n += 2) {
            c[static_cast<size_t>(n)] = Rational(Integer(1), Integer(n));
        }
        return Series(Kind::exponential, std::move(c));
    }
    if (name == "poly3") {
        for (int n = 1; n <= 3 && n <= order; ++n) {
            c[static_cast<size_t>(n)] = Rational(Integer(1), factorial(n));
        }
        return Series(Kind::exponential, std::move(c));
    }
    if (name == "geom") {
        for (int n = 0; n <= order; ++n) {
            c[static_cast<size_t>(n)] = 1;
        }
        return Series(Kind::ordinary, std::move(c));
    }
    throw std::invalid_argument("builtin_series: unknown series '" + std::string(name) + "'");
}

std::vector<std::string_view> builtin_series_names() {
    return {"x", "exp", "expm1", "sin", "artanh", "poly3", "geom"};
}

}  // namespace composita
