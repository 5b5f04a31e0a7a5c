#include "composita/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace composita {

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (den == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    for (char c : text) {
        // mpq_set_str silently skips embedded whitespace; reject it instead
        if (std::isspace(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("Rational::parse: malformed rational '" +
                                        std::string(text) + "'");
        }
    }
    mpq_class q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0) {
        throw std::invalid_argument("Rational::parse: malformed rational '" +
                                    std::string(text) + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("Rational::parse: zero denominator in '" +
                                    std::string(text) + "'");
    }
    q.canonicalize();
    Rational r;
    r.q_ = std::move(q);
    return r;
}

Integer Rational::to_integer() const {
    if (!is_integer()) {
        throw std::domain_error("Rational::to_integer: " + str() + " is not an integer");
    }
    return q_.get_num();
}

std::string Rational::str() const {
    return q_.get_str();  // "p/q", or "p" when the denominator is 1
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::invalid_argument("Rational: division by zero");
    }
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.q_;
}

}  // namespace composita
