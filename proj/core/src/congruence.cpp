#include "composita/congruence.hpp"

#include <optional>
#include <utility>

#include "composita/builtins.hpp"
#include "composita/compose.hpp"
#include "composita/numbers.hpp"

namespace composita {

std::string_view to_string(Verdict v) {
    return v == Verdict::composite_witness ? "composite_witness" : "consistent_with_prime";
}

namespace {

CongruenceReport make_report(std::string family, int n, Rational value, bool degenerate = false) {
    CongruenceReport r;
    r.family = std::move(family);
    r.n = n;
    r.value = std::move(value);
    r.is_integer = r.value.is_integer();
    r.verdict = r.is_integer ? Verdict::consistent_with_prime : Verdict::composite_witness;
    r.degenerate = degenerate;
    return r;
}

void require_integer_egf(const Series& e, const char* op) {
    if (e.kind() != Kind::exponential) {
        throw std::invalid_argument(std::string(op) + ": series is not exponential");
    }
    if (!e.has_integer_egf_coefficients()) {
        throw std::invalid_argument(std::string(op) + ": EGF coefficients are not integers");
    }
}

void require_inner_egf(const Series& e, const char* op) {
    require_integer_egf(e, op);
    if (!e.zero_constant_term()) {
        throw std::invalid_argument(std::string(op) + ": inner series has a nonzero free term");
    }
}

Integer integer_pow(const Integer& base, int exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
}

// sum_{k=2..n-1} table(n,k) * (n-1)!/k!
Rational corollary1_value(const CompositaTable& table, int n) {
    Rational acc;
    for (int k = 2; k <= n - 1; ++k) {
        const Rational& e = table.at(n, k);
        if (e.is_zero()) continue;
        acc += e * Rational(factorial(n - 1), factorial(k));
    }
    return acc;
}

void check_corollary_range(const Series& egf, int n, const char* op) {
    if (n < 3) {
        throw std::invalid_argument(std::string(op) + ": n must be >= 3 (the sum over 2..n-1 is empty below that)");
    }
    if (n > egf.order()) {
        throw std::out_of_range(std::string(op) + ": n exceeds the series order " +
                                std::to_string(egf.order()));
    }
}

}  // namespace

bool theorem1_check(const CompositaTable& table, int n, int k) {
    return (table.at(n, k) * Rational(factorial(n), factorial(k))).is_integer();
}

bool theorem1_check(const Series& egf, int n, int k) {
    require_inner_egf(egf, "theorem1_check");
    if (k < 1 || k > n || n > egf.order()) {
        throw std::out_of_range("theorem1_check: need 1 <= k <= n <= order");
    }
    return theorem1_check(composita_by_power(egf.truncated(n)), n, k);
}

CongruenceReport corollary1_sum(const Series& egf, int n) {
    require_inner_egf(egf, "corollary1_sum");
    check_corollary_range(egf, n, "corollary1_sum");
    CompositaTable table = composita_by_power(egf.truncated(n));
    return make_report("corollary1_sum", n, corollary1_value(table, n));
}

CongruenceReport corollary1_via_g(const Series& egf, int n) {
    require_inner_egf(egf, "corollary1_via_g");
    check_corollary_range(egf, n, "corollary1_via_g");
    Series inner = egf.truncated(n);
    Series g = compose_egf_egf(builtin_series("exp", n), inner);
    Rational value = g.egf_coefficient(n) - inner.egf_coefficient(n) -
                     Rational(integer_pow(inner.egf_coefficient(1).to_integer(), n));
    return make_report("corollary1_via_g", n, value / Rational(Integer(n)));
}

CongruenceReport general_prime_congruence(const Series& outer, const Series& inner, int n) {
    require_integer_egf(outer, "general_prime_congruence");
    require_inner_egf(inner, "general_prime_congruence");
    if (n < 1 || n > inner.order() || n > outer.order()) {
        throw std::out_of_range("general_prime_congruence: n outside series orders");
    }
    Series g = compose_egf_egf(outer.truncated(n), inner.truncated(n));
    Rational value = g.egf_coefficient(n) -
                     inner.egf_coefficient(n) * outer.egf_coefficient(1) -
                     Rational(integer_pow(inner.egf_coefficient(1).to_integer(), n)) *
                         outer.egf_coefficient(n);
    return make_report("general_prime_congruence", n, value / Rational(Integer(n)));
}

CongruenceReport theorem2_congruence(const Series& ogf, const Series& egf, int n) {
    if (ogf.kind() != Kind::ordinary || !ogf.has_integer_coefficients()) {
        throw std::invalid_argument("theorem2_congruence: outer must be an integer OGF");
    }
    require_inner_egf(egf, "theorem2_congruence");
    if (n < 1 || n > egf.order() || n > ogf.order()) {
        throw std::out_of_range("theorem2_congruence: n outside series orders");
    }
    Series g = compose_ogf_egf(ogf.truncated(n), egf.truncated(n));
    Rational value = g.egf_coefficient(n) - egf.egf_coefficient(n) * ogf.coeff(1);
    return make_report("theorem2_congruence", n, value / Rational(Integer(n)));
}

CongruenceReport touchard_k0(int n) {
    if (n < 2) throw std::invalid_argument("touchard_k0: n must be >= 2");
    return make_report("touchard_k0", n, Rational(bell(n) - 2, Integer(n)));
}

CongruenceReport touchard_general(int n, int k) {
    if (n < 2 || k < 0) throw std::invalid_argument("touchard_general: need n >= 2, k >= 0");
    return make_report("touchard_general", n,
                       Rational(bell(n + k) - bell(k + 1) - bell(k), Integer(n)));
}

CongruenceReport euler_congruence(int n) {
    if (n < 2) throw std::invalid_argument("euler_congruence: n must be >= 2");
    return make_report("euler", n,
                       Rational(euler_zigzag(n + 1) - sin_egf_coefficient(n), Integer(n)));
}

Family::Family(std::string name, int min_n, int max_n,
               std::function<void(int)> prepare,
               std::function<CongruenceReport(int)> evaluate)
    : name_(std::move(name)),
      min_n_(min_n),
      max_n_(max_n),
      prepare_(std::move(prepare)),
      evaluate_(std::move(evaluate)) {}

void Family::prepare(int to) const {
    if (to > max_n_) throw order_limit_error(to, max_n_);
    prepare_(to);
}

CongruenceReport Family::evaluate(int n) const {
    if (n < min_n_ || n > max_n_) {
        throw std::invalid_argument("Family::evaluate: n=" + std::to_string(n) +
                                    " outside " + std::to_string(min_n_) + ".." +
                                    std::to_string(max_n_) + " for family " + name_);
    }
    return evaluate_(n);
}

Family make_corollary1_family(std::string name,
                              std::function<Series(int)> series_factory,
                              int max_order) {
    // One table per prepared bound, shared by every evaluate() call.
    struct State {
        std::optional<CompositaTable> table;
    };
    auto state = std::make_shared<State>();
    auto family_name = name;
    auto prepare = [state, factory = std::move(series_factory)](int to) {
        if (state->table && state->table->order() >= to) return;
        Series egf = factory(to);
        require_inner_egf(egf, "corollary1 family");
        state->table = composita_by_power(egf);
    };
    auto evaluate = [state, family_name](int n) {
        if (n <= 2) {
            return make_report(family_name, n, Rational(), /*degenerate=*/true);
        }
        if (!state->table || state->table->order() < n) {
            throw std::logic_error("corollary1 family: evaluate before prepare");
        }
        return make_report(family_name, n, corollary1_value(*state->table, n));
    };
    return Family(std::move(name), 1, max_order, std::move(prepare), std::move(evaluate));
}

std::vector<std::string> family_names() {
    return {"touchard_k0", "euler", "expm1", "sin", "artanh", "poly3"};
}

Family make_family(std::string_view name, int max_order) {
    if (name == "touchard_k0") {
        return Family("touchard_k0", 2, max_order,
                      [](int to) { bell(to); },
                      [](int n) { return touchard_k0(n); });
    }
    if (name == "euler") {
        return Family("euler", 2, max_order,
                      [](int to) { euler_zigzag(to + 1); },
                      [](int n) { return euler_congruence(n); });
    }
    for (std::string_view builtin : {"expm1", "sin", "artanh", "poly3"}) {
        if (name == builtin) {
            std::string n(name);
            return make_corollary1_family(
                n, [n](int to) { return builtin_series(n, to); }, max_order);
        }
    }
    throw std::invalid_argument("make_family: unknown family '" + std::string(name) + "'");
}

ScanResult scan(const Family& family, int from, int to) {
    if (from < family.min_n()) {
        throw std::invalid_argument("scan: from=" + std::to_string(from) +
                                    " below the family minimum " +
                                    std::to_string(family.min_n()));
    }
    if (to < from) {
        throw std::invalid_argument("scan: empty range");
    }
    family.prepare(to);
    ScanResult result;
    result.reports.reserve(static_cast<size_t>(to - from + 1));
    for (int n = from; n <= to; ++n) {
        CongruenceReport report = family.evaluate(n);
        if (!report.is_integer) {
            result.certificates.push_back(WitnessCertificate{
                report.family, n, report.value, report.value.denominator()});
        }
        result.reports.push_back(std::move(report));
    }
    return result;
}

}  // namespace composita
