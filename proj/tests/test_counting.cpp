#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <functional>

#include "tenspect/counting.hpp"

using namespace tenspect;

namespace {

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Brute-force coefficient extraction. With m_i = n_i − 1, choose j_i ≤ m_i for each factor and
// distribute the j_i powers of t̂_i = Σ_{k≠i} t_k among the other variables, requiring the
// powers received by t_k to total j_k. Each distribution contributes a multinomial coefficient.
long long brute_force_count(const std::vector<int>& sizes) {
    const std::size_t d = sizes.size();
    std::vector<int> m(d);
    for (std::size_t i = 0; i < d; ++i) m[i] = sizes[i] - 1;
    std::vector<int> j(d);
    long long total = 0;

    std::function<void(std::size_t)> choose_j;
    std::vector<int> received(d, 0);
    std::function<long long(std::size_t, std::size_t, int, long long)> distribute =
        [&](std::size_t i, std::size_t k, int left, long long weight) -> long long {
        if (i == d) {
            for (std::size_t q = 0; q < d; ++q)
                if (received[q] != j[q]) return 0;
            return weight;
        }
        if (k == d) {
            if (left != 0) return 0;
            return distribute(i + 1, 0, i + 1 < d ? j[i + 1] : 0, weight);
        }
        if (k == i) return distribute(i, k + 1, left, weight);
        long long sum = 0;
        for (int a = 0; a <= left; ++a) {
            received[k] += a;
            // multinomial built incrementally: weight · C(left, a)
            long long c = factorial(left) / (factorial(a) * factorial(left - a));
            sum += distribute(i, k + 1, left - a, weight * c);
            received[k] -= a;
        }
        return sum;
    };
    choose_j = [&](std::size_t i) {
        if (i == d) {
            std::fill(received.begin(), received.end(), 0);
            total += distribute(0, 0, j[0], 1);
            return;
        }
        for (j[i] = 0; j[i] <= m[i]; ++j[i]) choose_j(i + 1);
    };
    choose_j(0);
    return total;
}

}  // namespace

TEST(CountPolynomial, ExactArithmetic) {
    auto p = CountPolynomial::monomial(2, 0, 1);
    p += CountPolynomial::monomial(2, 1, 1);  // t0 + t1
    auto sq = p.multiply(p);
    EXPECT_EQ(sq.coefficient({1, 1}), 2);
    EXPECT_EQ(sq.coefficient({2, 0}), 1);
    const Exponents caps = {1, 1};
    const auto capped = p.multiply(p, &caps);
    EXPECT_EQ(capped.coefficient({2, 0}), 0);
    EXPECT_EQ(capped.coefficient({1, 1}), 2);
}

TEST(CountSingularTuples, TableExamples) {
    EXPECT_EQ(count_singular_tuples({2, 2, 2}), 6);
    EXPECT_EQ(count_singular_tuples({3, 3, 3}), 37);
    EXPECT_EQ(count_singular_tuples({3, 4, 5}), 138);
}

TEST(CountSingularTuples, FullTable) {
    const auto start = std::chrono::steady_clock::now();
    EXPECT_EQ(count_singular_tuples({2, 2, 2}), 6);
    for (std::size_t n = 3; n <= 12; ++n) EXPECT_EQ(count_singular_tuples({2, 2, n}), 8) << n;
    EXPECT_EQ(count_singular_tuples({2, 3, 3}), 15);
    for (std::size_t n = 4; n <= 12; ++n) EXPECT_EQ(count_singular_tuples({2, 3, n}), 18) << n;
    for (std::size_t n = 2; n <= 8; ++n) EXPECT_EQ(count_singular_tuples({2, n, n}), n * (2 * n - 1)) << n;
    EXPECT_EQ(count_singular_tuples({3, 3, 3}), 37);
    EXPECT_EQ(count_singular_tuples({3, 3, 4}), 55);
    for (std::size_t n = 5; n <= 12; ++n) EXPECT_EQ(count_singular_tuples({3, 3, n}), 61) << n;
    EXPECT_EQ(count_singular_tuples({3, 4, 4}), 104);
    EXPECT_EQ(count_singular_tuples({3, 4, 5}), 138);
    for (std::size_t n = 6; n <= 12; ++n) EXPECT_EQ(count_singular_tuples({3, 4, n}), 148) << n;
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 1.0);
}

TEST(CountSingularTuples, MatricesGiveMinimum) {
    for (std::size_t m = 1; m <= 6; ++m)
        for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(count_singular_tuples({m, n}), std::min(m, n));
}

TEST(CountSingularTuples, BinaryFormatsGiveFactorial) {
    for (std::size_t d = 2; d <= 6; ++d) EXPECT_EQ(count_singular_tuples(Shape(d, 2)), factorial(static_cast<int>(d)));
}

TEST(CountSingularTuples, PermutationInvariant) {
    Shape s = {2, 3, 4};
    const BigInt reference = count_singular_tuples(s);
    std::sort(s.begin(), s.end());
    do {
        EXPECT_EQ(count_singular_tuples(s), reference);
    } while (std::next_permutation(s.begin(), s.end()));
    Shape s4 = {2, 2, 3, 3};
    const BigInt r4 = count_singular_tuples(s4);
    do {
        EXPECT_EQ(count_singular_tuples(s4), r4);
    } while (std::next_permutation(s4.begin(), s4.end()));
}

TEST(CountSingularTuples, MatchesBruteForceOracle) {
    for (int a = 1; a <= 4; ++a)
        for (int b = a; b <= 4; ++b)
            for (int c = b; c <= 5; ++c) {
                const Shape s = {std::size_t(a), std::size_t(b), std::size_t(c)};
                EXPECT_EQ(count_singular_tuples(s), brute_force_count({a, b, c})) << a << b << c;
            }
    EXPECT_EQ(count_singular_tuples({2, 3, 2, 3}), brute_force_count({2, 3, 2, 3}));
}

TEST(CountSingularTuples, Guard) {
    EXPECT_THROW(count_singular_tuples({10, 10, 10}), std::invalid_argument);
    EXPECT_NO_THROW(count_singular_tuples({10, 10, 10}, true));
    EXPECT_THROW(count_singular_tuples({}), std::invalid_argument);
    EXPECT_THROW(count_singular_tuples({2, 0}), std::invalid_argument);
}

TEST(CountEigentensors, Formula) {
    EXPECT_EQ(count_eigentensors(1, 3), 3);
    EXPECT_EQ(count_eigentensors(2, 3), 7);
    for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ(count_eigentensors(n, 2), n + 1);
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned d = 3; d <= 5; ++d) {
            BigInt p = 1;
            for (unsigned k = 0; k <= n; ++k) p *= d - 1;
            EXPECT_EQ(count_eigentensors(n, d), (p - 1) / (d - 2));
        }
}

TEST(Stabilization, TwoByTwo) {
    const auto p = stabilization_profile({2, 2}, 8);
    ASSERT_FALSE(p.counts.empty());
    EXPECT_EQ(p.last_sizes.front(), 2U);
    EXPECT_EQ(p.counts.front(), 6);
    for (std::size_t k = 1; k < p.counts.size(); ++k) EXPECT_EQ(p.counts[k], 8);
    EXPECT_EQ(p.boundary_size, 3U);
    EXPECT_TRUE(p.stable_from_boundary);
}

TEST(Stabilization, TwoByThree) {
    const auto p = stabilization_profile({2, 3}, 9);
    EXPECT_EQ(p.counts.front(), 15);
    EXPECT_EQ(p.boundary_size, 4U);
    for (std::size_t k = 1; k < p.counts.size(); ++k) EXPECT_EQ(p.counts[k], 18);
    EXPECT_TRUE(p.stable_from_boundary);
}

TEST(Stabilization, DiagonalRow) {
    EXPECT_EQ(count_singular_tuples({2, 4, 4}), 28);
}
