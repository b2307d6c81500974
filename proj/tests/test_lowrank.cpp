#include <gtest/gtest.h>

#include <numeric>

#include "tenspect/lowrank.hpp"
#include "test_support.hpp"

using namespace tenspect;
using tenspect::testing::max_abs_diff;
using tenspect::testing::orthogonality_defect;
using tenspect::testing::random_matrix;
using tenspect::testing::random_rank_matrix;
using tenspect::testing::Rng;

namespace {

Matrix diag(std::initializer_list<double> d) { return Matrix::diagonal(std::vector<double>(d)); }

// ||P_⊥ M|| where P_⊥ projects onto the orthogonal complement of the column space of `basis`.
double outside_column_space(const Matrix& m, const Matrix& a) {
    const auto s = svd(a);
    Matrix proj(a.rows(), a.rows());
    for (std::size_t i = 0; i < s.rank; ++i) proj += outer(s.u.col(i), s.u.col(i));
    return (m - proj * m).norm();
}

}  // namespace

TEST(BestRankR, DiagonalTruncation) {
    EXPECT_LT(max_abs_diff(best_rank_r(diag({3, 2, 1}), 2), diag({3, 2, 0})), 1e-14);
    EXPECT_NEAR((diag({3, 2, 1}) - best_rank_r(diag({3, 2, 1}), 1)).norm(), std::sqrt(5.0), 1e-14);
}

TEST(BestRankR, RankOutOfRange) {
    EXPECT_THROW(best_rank_r(diag({3, 2, 0}), 3), std::invalid_argument);
    EXPECT_THROW(best_rank_r(diag({3, 2, 1}), 0), std::invalid_argument);
}

TEST(BestRankR, BeatsRandomSamples) {
    Rng rng(21);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix a = random_matrix(4, 4, rng);
        for (std::size_t r = 1; r <= 3; ++r) {
            const double best = (a - best_rank_r(a, r)).norm();
            for (int k = 0; k < 200; ++k) EXPECT_LE(best, (a - random_rank_matrix(4, 4, r, rng)).norm());
        }
    }
}

TEST(BestRankR, DistanceMonotoneInRank) {
    Rng rng(22);
    const Matrix a = random_matrix(5, 4, rng);
    double prev = a.norm();
    for (std::size_t r = 1; r <= 4; ++r) {
        const double d = (a - best_rank_r(a, r)).norm();
        EXPECT_LE(d, prev + 1e-12);
        prev = d;
    }
    EXPECT_LT(prev, 1e-12 * a.norm());
}

TEST(EnumerateCritical, DiagonalRankOne) {
    const auto e = enumerate_critical(diag({3, 2, 1}), 1);
    ASSERT_EQ(e.points.size(), 3U);
    EXPECT_NEAR(e.points[0].distance, std::sqrt(5.0), 1e-14);
    EXPECT_NEAR(e.points[1].distance, std::sqrt(10.0), 1e-14);
    EXPECT_NEAR(e.points[2].distance, std::sqrt(13.0), 1e-14);
    EXPECT_FALSE(e.degenerate);
}

TEST(EnumerateCritical, FullRankIsTheMatrix) {
    const auto e = enumerate_critical(diag({3, 2, 1}), 3);
    ASSERT_EQ(e.points.size(), 1U);
    EXPECT_NEAR(e.points[0].distance, 0.0, 1e-14);
    EXPECT_LT(max_abs_diff(e.points[0].matrix, diag({3, 2, 1})), 1e-14);
}

TEST(EnumerateCritical, RandomCountAndTangentOrthogonality) {
    Rng rng(23);
    const Matrix a = random_matrix(5, 4, rng);
    const auto s = svd(a);
    const auto e = enumerate_critical(s, 2);
    ASSERT_EQ(e.points.size(), 6U);
    for (const auto& p : e.points) {
        EXPECT_LE(tangent_residual(a, s, p), 1e-9);
        // Independent check: A − X is orthogonal to every e_k ⊗ v_i and u_i ⊗ e_l.
        const Matrix b = a - p.matrix;
        for (auto i : p.index_set) {
            for (std::size_t k = 0; k < 5; ++k)
                EXPECT_NEAR(inner_product(b, outer(Matrix::identity(5).col(k), s.v.col(i))), 0.0, 1e-9);
            for (std::size_t l = 0; l < 4; ++l)
                EXPECT_NEAR(inner_product(b, outer(s.u.col(i), Matrix::identity(4).col(l))), 0.0, 1e-9);
        }
        EXPECT_LT(outside_column_space(p.matrix, a), 1e-10 * a.norm());
        EXPECT_LT(outside_column_space(p.matrix.transpose(), a.transpose()), 1e-10 * a.norm());
    }
    EXPECT_LT(max_abs_diff(e.points.front().matrix, best_rank_r(s, 2)), 1e-12);
}

TEST(EnumerateCritical, RepeatedSigmasFlagged) {
    const auto e = enumerate_critical(diag({2, 2, 1}), 1);
    EXPECT_TRUE(e.degenerate);
    EXPECT_EQ(e.points.size(), 3U);
}

TEST(EnumerateCritical, CountFollowsRank) {
    Rng rng(24);
    const Matrix a = random_rank_matrix(5, 5, 3, rng);
    EXPECT_EQ(enumerate_critical(a, 2).points.size(), 3U);
}

TEST(OrthogonalCritical, OneByOne) {
    const auto c = orthogonal_critical(Matrix{{5}});
    ASSERT_EQ(c.size(), 2U);
    EXPECT_DOUBLE_EQ(c[0](0, 0), 1.0);
    EXPECT_DOUBLE_EQ(c[1](0, 0), -1.0);
}

TEST(OrthogonalCritical, CountIsTwoToTheN) {
    Rng rng(25);
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto c = orthogonal_critical(random_matrix(n, n, rng));
        EXPECT_EQ(c.size(), std::size_t{1} << n);
        for (const auto& q : c) EXPECT_LT(orthogonality_defect(q), 1e-12);
    }
}

TEST(OrthogonalCritical, DiagonalBruteForce) {
    const Matrix a = diag({2, 3});
    const auto c = orthogonal_critical(a);
    EXPECT_LT(max_abs_diff(c.front(), Matrix::identity(2)), 1e-14);
    EXPECT_NEAR((a - c.front()).norm(), std::sqrt(5.0), 1e-14);
}

TEST(Lowdin, FixesOrthogonalInput) {
    const double t = 0.3;
    const Matrix q{{std::cos(t), -std::sin(t)}, {std::sin(t), std::cos(t)}};
    EXPECT_LT(max_abs_diff(lowdin(q), q), 1e-14);
    EXPECT_LT(max_abs_diff(lowdin(diag({2, 3})), Matrix::identity(2)), 1e-14);
}

TEST(Lowdin, NearestAmongCriticalPoints) {
    Rng rng(26);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix a = random_matrix(3, 3, rng);
        const double best = (a - lowdin(a)).norm();
        for (const auto& q : orthogonal_critical(a)) EXPECT_LE(best, (a - q).norm() + 1e-12);
    }
}

TEST(Lowdin, Errors) {
    EXPECT_THROW(lowdin(Matrix(2, 3)), std::invalid_argument);
    EXPECT_THROW(lowdin(diag({1, 0})), std::invalid_argument);
}
