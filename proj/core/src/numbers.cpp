#include "composita/numbers.hpp"

#include <stdexcept>
#include <vector>

namespace composita {

namespace {

void require_nonnegative(int value, const char* what) {
    if (value < 0) {
        throw std::invalid_argument(std::string(what) + ": negative argument " +
                                    std::to_string(value));
    }
}

// Triangular memo for two-parameter recurrences seeded with T(0,0) = 1.
class TriangleCache {
public:
    using Step = Integer (*)(int n, int k, const std::vector<Integer>& prev_row);

    explicit TriangleCache(Step step) : step_(step) { rows_.push_back({Integer(1)}); }

    const Integer& at(int n, int k) {
        while (static_cast<int>(rows_.size()) <= n) {
            const std::vector<Integer>& prev = rows_.back();
            int r = static_cast<int>(rows_.size());
            std::vector<Integer> row(static_cast<size_t>(r) + 1);
            row[0] = 0;
            for (int j = 1; j <= r; ++j) {
                row[static_cast<size_t>(j)] = step_(r, j, prev);
            }
            rows_.push_back(std::move(row));
        }
        return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
    }

private:
    Step step_;
    std::vector<std::vector<Integer>> rows_;
};

Integer stirling2_step(int n, int k, const std::vector<Integer>& prev) {
    Integer v = (k <= n - 1) ? Integer(k * prev[static_cast<size_t>(k)]) : Integer(0);
    return v + prev[static_cast<size_t>(k - 1)];
}

Integer stirling1_step(int m, int k, const std::vector<Integer>& prev) {
    Integer v = (k <= m - 1) ? Integer((m - 1) * prev[static_cast<size_t>(k)]) : Integer(0);
    return v + prev[static_cast<size_t>(k - 1)];
}

}  // namespace

Integer factorial(int n) {
    require_nonnegative(n, "factorial");
    static std::vector<Integer> cache{Integer(1)};
    while (static_cast<int>(cache.size()) <= n) {
        cache.push_back(cache.back() * static_cast<long>(cache.size()));
    }
    return cache[static_cast<size_t>(n)];
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer stirling2(int n, int k) {
    require_nonnegative(n, "stirling2");
    require_nonnegative(k, "stirling2");
    if (k > n) return 0;
    static TriangleCache cache(stirling2_step);
    return cache.at(n, k);
}

Integer stirling1_unsigned(int m, int k) {
    require_nonnegative(m, "stirling1_unsigned");
    require_nonnegative(k, "stirling1_unsigned");
    if (k > m) return 0;
    static TriangleCache cache(stirling1_step);
    return cache.at(m, k);
}

Integer bell(int n) {
    require_nonnegative(n, "bell");
    // Bell triangle, keeping only the previous row; B_n is the row head.
    static std::vector<Integer> bells{Integer(1)};
    static std::vector<Integer> row{Integer(1)};
    while (static_cast<int>(bells.size()) <= n) {
        std::vector<Integer> next(row.size() + 1);
        next[0] = row.back();
        for (size_t i = 1; i < next.size(); ++i) {
            next[i] = next[i - 1] + row[i - 1];
        }
        bells.push_back(next[0]);
        row = std::move(next);
    }
    return bells[static_cast<size_t>(n)];
}

Integer euler_zigzag(int n) {
    require_nonnegative(n, "euler_zigzag");
    // Boustrophedon triangle: T(r,0) = 0 for r >= 1, T(r,j) = T(r,j-1) + T(r-1, r-j),
    // E(r) = T(r,r).
    static std::vector<Integer> zigzag{Integer(1)};
    static std::vector<Integer> row{Integer(1)};
    while (static_cast<int>(zigzag.size()) <= n) {
        int r = static_cast<int>(zigzag.size());
        std::vector<Integer> next(static_cast<size_t>(r) + 1);
        next[0] = 0;
        for (int j = 1; j <= r; ++j) {
            next[static_cast<size_t>(j)] = next[static_cast<size_t>(j - 1)] + row[static_cast<size_t>(r - j)];
        }
        zigzag.push_back(next.back());
        row = std::move(next);
    }
    return zigzag[static_cast<size_t>(n)];
}

Integer multinomial(int n, std::span<const int> parts) {
    require_nonnegative(n, "multinomial");
    long sum = 0;
    Integer denom = 1;
    for (int p : parts) {
        if (p <= 0) {
            throw std::invalid_argument("multinomial: parts must be positive");
        }
        sum += p;
        denom *= factorial(p);
    }
    if (sum != n) {
        throw std::invalid_argument("multinomial: parts sum to " + std::to_string(sum) +
                                    ", expected " + std::to_string(n));
    }
    return factorial(n) / denom;
}

}  // namespace composita
