#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "composita/composita.hpp"
#include "composita/series.hpp"

namespace composita {

// Exact evaluators for the prime-only integrality expressions. Every value
// is an exact rational; integrality means denominator 1 after reduction.
// The tests are one-sided: a non-integer value certifies n composite, an
// integer value is merely consistent with n being prime.

enum class Verdict { consistent_with_prime, composite_witness };

std::string_view to_string(Verdict v);

struct CongruenceReport {
    std::string family;
    int n = 0;
    Rational value;
    bool is_integer = true;
    Verdict verdict = Verdict::consistent_with_prime;
    /// True for the empty-sum range (n < 3) of the corollary families,
    /// where the report carries the conventional value 0.
    bool degenerate = false;
};

/// Proof object for "n is composite": a non-integer value of an expression
/// that is an integer for every prime n.
struct WitnessCertificate {
    std::string family;
    int n = 0;
    Rational value;
    Integer denominator;  // of value in lowest terms; always > 1
};

/// Thrown when a requested order or scan bound exceeds the configured limit.
class order_limit_error : public std::runtime_error {
public:
    order_limit_error(int requested, int limit)
        : std::runtime_error("requested order " + std::to_string(requested) +
                             " exceeds the configured limit " + std::to_string(limit)),
          requested_(requested),
          limit_(limit) {}

    int requested() const { return requested_; }
    int limit() const { return limit_; }

private:
    int requested_;
    int limit_;
};

/// True iff (n!/k!) * E^Delta(n,k) is an integer. For a series with integer
/// EGF coefficients this always holds; a false return indicates a bug or a
/// non-integer input. Requires integer EGF coefficients, E.c(0) = 0 and
/// 1 <= k <= n <= E.order().
bool theorem1_check(const Series& egf, int n, int k);
/// Same check against a precomputed composita table.
bool theorem1_check(const CompositaTable& table, int n, int k);

/// sum_{k=2..n-1} E^Delta(n,k) * (n-1)!/k!, an integer for every prime n.
/// Requires integer EGF coefficients, E.c(0) = 0 and 3 <= n <= E.order().
CongruenceReport corollary1_sum(const Series& egf, int n);

/// The same value by the composition route:
/// (g(n) - e(n) - e(1)^n)/n with G = exp(E). Equals corollary1_sum exactly.
CongruenceReport corollary1_via_g(const Series& egf, int n);

/// General EGF-in-EGF form: (g(n) - e(n) a(1) - e(1)^n a(n))/n with
/// G = A(E); integer for every prime n.
CongruenceReport general_prime_congruence(const Series& outer, const Series& inner, int n);

/// OGF-outer form: (g(n) - e(n) b(1))/n with G = B(E); integer for every
/// prime n. B ordinary with integer coefficients.
CongruenceReport theorem2_congruence(const Series& ogf, const Series& egf, int n);

/// (B_n - 2)/n; Touchard's congruence at k = 0. Requires n >= 2.
CongruenceReport touchard_k0(int n);

/// (B_{n+k} - B_{k+1} - B_k)/n. Requires n >= 2, k >= 0.
CongruenceReport touchard_general(int n, int k);

/// (E(n+1) - s(n))/n with s(n) the sin EGF coefficient. Requires n >= 2.
CongruenceReport euler_congruence(int n);

/// Library-wide default bound on truncation orders and scan ranges.
inline constexpr int kDefaultMaxOrder = 512;

/// A registered congruence family: a name, the n-range it supports, and an
/// evaluator over precomputed tables. prepare() builds whatever the family
/// needs up to a bound; evaluate(n) then never recomputes shared tables.
class Family {
public:
    Family(std::string name, int min_n, int max_n,
           std::function<void(int)> prepare,
           std::function<CongruenceReport(int)> evaluate);

    const std::string& name() const { return name_; }
    int min_n() const { return min_n_; }
    int max_n() const { return max_n_; }

    /// Throws order_limit_error when to exceeds max_n().
    void prepare(int to) const;
    CongruenceReport evaluate(int n) const;

private:
    std::string name_;
    int min_n_;
    int max_n_;
    std::function<void(int)> prepare_;
    std::function<CongruenceReport(int)> evaluate_;
};

/// Built-in family names: touchard_k0, euler, and the corollary-1 families
/// expm1, sin, artanh, poly3.
std::vector<std::string> family_names();

/// Looks up a built-in family. Throws std::invalid_argument for unknown
/// names.
Family make_family(std::string_view name, int max_order = kDefaultMaxOrder);

/// Corollary-1 family over a caller-supplied integer EGF; series are
/// regenerated to the prepared order by the factory.
Family make_corollary1_family(std::string name,
                              std::function<Series(int)> series_factory,
                              int max_order = kDefaultMaxOrder);

struct ScanResult {
    std::vector<CongruenceReport> reports;        // ordered by n
    std::vector<WitnessCertificate> certificates; // one per non-integer value
};

/// Evaluates the family at every n in [from, to]. Witnesses are data, not
/// errors. Throws std::invalid_argument on a bad range and order_limit_error
/// past the family bound.
ScanResult scan(const Family& family, int from, int to);

}  // namespace composita
