#include <gtest/gtest.h>

#include <array>

#include "tenspect/hyperdet.hpp"
#include "test_support.hpp"

using namespace tenspect;
using tenspect::testing::random_tensor;
using tenspect::testing::Rng;

namespace {

// Discriminant of the binary quadratic det(x·A0 + y·A1), where A_k is the slice with the third
// index equal to k. Independent of the Cayley expansion.
double discriminant_oracle(const Tensor& t) {
    auto e = [&](std::size_t i, std::size_t j, std::size_t k) { return t.at({i, j, k}); };
    const double a = e(0, 0, 0) * e(1, 1, 0) - e(0, 1, 0) * e(1, 0, 0);
    const double c = e(0, 0, 1) * e(1, 1, 1) - e(0, 1, 1) * e(1, 0, 1);
    const double b = e(0, 0, 0) * e(1, 1, 1) + e(0, 0, 1) * e(1, 1, 0) - e(0, 1, 0) * e(1, 0, 1) -
                     e(0, 1, 1) * e(1, 0, 0);
    return b * b - 4 * a * c;
}

Tensor permute_modes(const Tensor& t, std::array<std::size_t, 3> perm) {
    Tensor out({2, 2, 2});
    for (std::size_t flat = 0; flat < 8; ++flat) {
        const auto idx = t.multi_index(flat);
        out.at({idx[perm[0]], idx[perm[1]], idx[perm[2]]}) = t.data()[flat];
    }
    return out;
}

SolverConfig config(std::uint64_t seed) {
    SolverConfig cfg;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST(CayleyHyperdet, DecomposableIsZero) {
    EXPECT_EQ(cayley_hyperdet(outer<double>({{1, 0}, {1, 0}, {1, 0}})), 0.0);
}

TEST(CayleyHyperdet, Normalization) {
    Tensor t({2, 2, 2});
    t.at({0, 0, 0}) = 1;
    t.at({1, 1, 1}) = 1;
    EXPECT_DOUBLE_EQ(cayley_hyperdet(t), 1.0);
}

TEST(CayleyHyperdet, MatchesDiscriminantOracle) {
    Rng rng(81);
    for (int trial = 0; trial < 50; ++trial) {
        const Tensor t = random_tensor({2, 2, 2}, rng);
        EXPECT_NEAR(cayley_hyperdet(t), discriminant_oracle(t), 1e-12 * std::pow(frobenius_norm(t), 4));
    }
}

TEST(CayleyHyperdet, HomogeneousOfDegreeFour) {
    Rng rng(82);
    const Tensor t = random_tensor({2, 2, 2}, rng);
    EXPECT_NEAR(cayley_hyperdet(t * 2.0), 16.0 * cayley_hyperdet(t), 1e-11 * std::abs(cayley_hyperdet(t)) + 1e-12);
}

TEST(CayleyHyperdet, ModePermutationInvariant) {
    Rng rng(83);
    const Tensor t = random_tensor({2, 2, 2}, rng);
    std::array<std::size_t, 3> perm = {0, 1, 2};
    do {
        EXPECT_NEAR(std::abs(cayley_hyperdet(permute_modes(t, perm))), std::abs(cayley_hyperdet(t)), 1e-12);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(CayleyHyperdet, ComplexAgreesWithReal) {
    Rng rng(84);
    const Tensor t = random_tensor({2, 2, 2}, rng);
    EXPECT_NEAR(std::abs(cayley_hyperdet(to_complex(t)) - cayley_hyperdet(t)), 0.0, 1e-12);
}

TEST(CayleyHyperdet, WrongShape) {
    EXPECT_THROW(cayley_hyperdet(Tensor({2, 2, 3})), std::invalid_argument);
}

TEST(Duality, RandomTensorsVanish) {
    Rng rng(85);
    for (int trial = 0; trial < 5; ++trial) {
        const Tensor p = random_tensor({2, 2, 2}, rng);
        const auto rep = duality_check(p, config(trial));
        EXPECT_EQ(rep.critical_tuples.size(), 6U);
        EXPECT_EQ(rep.vanishing_values.size(), 6U);
        EXPECT_TRUE(rep.passed);
        EXPECT_LE(rep.max_abs, 1e-6 * std::pow(frobenius_norm(p), 4));
        EXPECT_TRUE(rep.warnings.empty());
    }
}

TEST(Duality, RankOnePoint) {
    const Tensor p = outer<double>({{1, 2}, {-1, 0.5}, {3, 1}});
    const auto rep = duality_check(p, config(1));
    EXPECT_NEAR(cayley_hyperdet(p), 0.0, 1e-12);
    ASSERT_FALSE(rep.critical_tuples.empty());
    const auto& top = rep.critical_tuples.front();
    EXPECT_LT(frobenius_norm(to_complex(p) - top.scaled_rank_one()), 1e-8);
    EXPECT_TRUE(rep.degenerate);
    EXPECT_FALSE(rep.warnings.empty());
}

TEST(Duality, ZeroSliceWarns) {
    Rng rng(86);
    Tensor p = random_tensor({2, 2, 2}, rng);
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) p.at({1, j, k}) = 0.0;
    const auto rep = duality_check(p, config(2));
    EXPECT_TRUE(rep.degenerate);
    EXPECT_FALSE(rep.warnings.empty());
    EXPECT_FALSE(rep.vanishing_values.empty());
}
