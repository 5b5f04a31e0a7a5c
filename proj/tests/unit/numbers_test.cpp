#include <doctest.h>

#include <random>
#include <vector>

#include "composita/builtins.hpp"
#include "composita/compose.hpp"
#include "composita/numbers.hpp"
#include "oracles.hpp"

using namespace composita;
using composita::testing::is_prime_trial;
using composita::testing::stirling1_by_rising_factorial;
using composita::testing::stirling2_by_sum;

TEST_CASE("stirling2 matches the explicit-sum path") {
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    for (int n = 0; n <= 20; ++n) {
        CHECK(stirling2(n, 0) == (n == 0 ? 1 : 0));
        for (int k = 0; k <= n; ++k) {
            CHECK(stirling2(n, k) == stirling2_by_sum(n, k));
        }
    }
    for (int n = 1; n <= 20; ++n) {
        CHECK(stirling2(n, n) == 1);
        CHECK(stirling2(n, 1) == 1);
    }
    CHECK(stirling2(3, 5) == 0);
    CHECK_THROWS_AS(stirling2(-1, 0), std::invalid_argument);
}

TEST_CASE("stirling1 matches rising-factorial extraction") {
    CHECK(stirling1_unsigned(4, 2) == 11);
    CHECK(stirling1_unsigned(5, 1) == 24);
    for (int m = 0; m <= 16; ++m) {
        if (m >= 1) CHECK(stirling1_unsigned(m, 0) == 0);
        CHECK(stirling1_unsigned(m, m) == 1);
        for (int k = 0; k <= m; ++k) {
            CHECK(stirling1_unsigned(m, k) == stirling1_by_rising_factorial(m, k));
        }
    }
    CHECK_THROWS_AS(stirling1_unsigned(2, -1), std::invalid_argument);
}

TEST_CASE("bell agrees with the stirling2 row sums") {
    CHECK(bell(0) == 1);
    CHECK(bell(1) == 1);
    CHECK(bell(5) == 52);
    CHECK(bell(7) == 877);
    for (int n = 0; n <= 25; ++n) {
        Integer row_sum = 0;
        for (int k = 0; k <= n; ++k) row_sum += stirling2(n, k);
        CHECK(bell(n) == row_sum);
    }
    CHECK_THROWS_AS(bell(-1), std::invalid_argument);
}

TEST_CASE("euler zigzag base values and composition cross-check") {
    CHECK(euler_zigzag(0) == 1);
    CHECK(euler_zigzag(1) == 1);
    CHECK(euler_zigzag(2) == 1);
    CHECK(euler_zigzag(3) == 2);
    CHECK(euler_zigzag(6) == 61);
    CHECK(euler_zigzag(8) == 1385);

    // 1/(1 - sin x) has EGF coefficients E(n+1)
    Series g = compose_ogf_egf(builtin_series("geom", 15), builtin_series("sin", 15));
    for (int n = 0; n <= 15; ++n) {
        CHECK(g.egf_coefficient(n) == Rational(euler_zigzag(n + 1)));
    }
    CHECK_THROWS_AS(euler_zigzag(-3), std::invalid_argument);
}

TEST_CASE("multinomial") {
    std::vector<int> whole{7};
    CHECK(multinomial(7, whole) == 1);
    std::vector<int> pair{2, 2};
    CHECK(multinomial(4, pair) == 6);
    std::vector<int> p34{3, 4};
    CHECK(multinomial(7, p34) == 35);
    CHECK(multinomial(7, p34) % 7 == 0);

    std::vector<int> bad{2, 2};
    CHECK_THROWS_AS(multinomial(5, bad), std::invalid_argument);
    std::vector<int> nonpositive{4, 0};
    CHECK_THROWS_AS(multinomial(4, nonpositive), std::invalid_argument);
}

TEST_CASE("multinomials of prime n with k >= 2 parts are divisible by n") {
    std::mt19937 rng(123);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
        REQUIRE(is_prime_trial(p));
        for (int trial = 0; trial < 20; ++trial) {
            // random composition of p into k >= 2 parts
            std::uniform_int_distribution<int> kd(2, static_cast<int>(p));
            int k = kd(rng);
            std::vector<int> parts(static_cast<size_t>(k), 1);
            int rest = static_cast<int>(p) - k;
            std::uniform_int_distribution<int> slot(0, k - 1);
            while (rest-- > 0) parts[static_cast<size_t>(slot(rng))] += 1;
            CHECK(multinomial(static_cast<int>(p), parts) % p == 0);
        }
    }
}

TEST_CASE("binomial convention vanishes outside range") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}
