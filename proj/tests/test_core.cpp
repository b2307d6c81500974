#include <gtest/gtest.h>

#include "tenspect/core.hpp"
#include "test_support.hpp"

using namespace tenspect;
using tenspect::testing::Rng;
using tenspect::testing::random_tensor;
using tenspect::testing::random_vector;

TEST(Tensor, RejectsBadShapes) {
    EXPECT_THROW(Tensor(Shape{}), std::invalid_argument);
    EXPECT_THROW(Tensor(Shape{2, 0}), std::invalid_argument);
    EXPECT_THROW(Tensor(Shape{2, 2}, {1, 2, 3}), std::invalid_argument);
}

TEST(Tensor, RowMajorRoundTrip) {
    Tensor t({3, 2, 2});
    double v = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) t.at({i, j, k}) = v++;
    // last index fastest
    for (std::size_t flat = 0; flat < t.size(); ++flat) EXPECT_EQ(t.data()[flat], static_cast<double>(flat));
    for (std::size_t flat = 0; flat < t.size(); ++flat) EXPECT_EQ(t.offset(t.multi_index(flat)), flat);
    EXPECT_THROW(t.at({3, 0, 0}), std::out_of_range);
    EXPECT_THROW(t.at({0, 0}), std::out_of_range);
}

TEST(Tensor, ShapeMismatchInArithmetic) {
    Tensor a({2, 2});
    Tensor b({4});
    EXPECT_THROW(a + b, std::invalid_argument);
    EXPECT_THROW(inner_product(a, b), std::invalid_argument);
}

TEST(InnerProduct, IdentityHasTraceTwo) {
    const Tensor i2 = Matrix::identity(2).to_tensor();
    EXPECT_DOUBLE_EQ(inner_product(i2, i2), 2.0);
}

TEST(InnerProduct, RankOneFactorizes) {
    Rng rng(1);
    const auto u1 = random_vector(3, rng), u2 = random_vector(3, rng);
    const auto v1 = random_vector(4, rng), v2 = random_vector(4, rng);
    const double got = inner_product(outer<double>({u1, v1}), outer<double>({u2, v2}));
    EXPECT_NEAR(got, dot(u1, u2) * dot(v1, v2), 1e-12);
}

TEST(InnerProduct, MatchesDoubleLoop) {
    Rng rng(2);
    const Tensor a = random_tensor({3, 2}, rng), b = random_tensor({3, 2}, rng);
    double oracle = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) oracle += a.at({i, j}) * b.at({i, j});
    EXPECT_NEAR(inner_product(a, b), oracle, 1e-14);
}

TEST(InnerProduct, BilinearAndSymmetricProperty) {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Shape shape{2, 3, 2};
        const Tensor a = random_tensor(shape, rng), b = random_tensor(shape, rng), c = random_tensor(shape, rng);
        const double s = random_vector(1, rng)[0];
        EXPECT_NEAR(inner_product(a, b), inner_product(b, a), 1e-12);
        EXPECT_NEAR(inner_product(a * s + b, c), s * inner_product(a, c) + inner_product(b, c), 1e-11);
    }
}

TEST(InnerProduct, HermitianForComplex) {
    Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const auto re1 = random_vector(6, rng), im1 = random_vector(6, rng);
        const auto re2 = random_vector(6, rng), im2 = random_vector(6, rng);
        std::vector<Complex> d1, d2;
        for (std::size_t i = 0; i < 6; ++i) {
            d1.emplace_back(re1[i], im1[i]);
            d2.emplace_back(re2[i], im2[i]);
        }
        const ComplexTensor a({2, 3}, d1), b({2, 3}, d2);
        const Complex ab = inner_product(a, b), ba = inner_product(b, a);
        EXPECT_NEAR(std::abs(ab - std::conj(ba)), 0.0, 1e-12);
        EXPECT_NEAR(inner_product(a, a).imag(), 0.0, 1e-12);
        EXPECT_NEAR(inner_product(a, a).real(), frobenius_norm(a) * frobenius_norm(a), 1e-11);
    }
}

TEST(Outer, BasisVectors) {
    const Tensor t = outer<double>({{1, 0}, {0, 1}});
    EXPECT_EQ(t.values(), (std::vector<double>{0, 1, 0, 0}));
}

TEST(Outer, HandMultiplication) {
    const Tensor t = outer<double>({{1, 2}, {3, 4}});
    EXPECT_EQ(t.shape(), (Shape{2, 2}));
    EXPECT_EQ(t.values(), (std::vector<double>{3, 4, 6, 8}));
}

TEST(Outer, NormIsProductOfNorms) {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = random_vector(3, rng), y = random_vector(2, rng), z = random_vector(4, rng);
        EXPECT_NEAR(frobenius_norm(outer<double>({x, y, z})), norm(x) * norm(y) * norm(z), 1e-12);
    }
}

TEST(Outer, RejectsEmpty) {
    EXPECT_THROW(outer<double>({{1.0}, {}}), std::invalid_argument);
}

TEST(Contract, MatrixIdentity) {
    const Tensor i2 = Matrix::identity(2).to_tensor();
    const std::vector<Vector> xs = {{}, {5, 7}};
    EXPECT_EQ(contract_all_but<double>(i2, xs, 0), (Vector{5, 7}));
}

TEST(Contract, DecomposableCase) {
    const Tensor e = outer<double>({{1, 0}, {1, 0}, {1, 0}});
    const std::vector<Vector> xs = {{1, 0}, {1, 0}, {}};
    EXPECT_EQ(contract_all_but<double>(e, xs, 2), (Vector{1, 0}));
}

TEST(Contract, MatchesTripleLoop) {
    Rng rng(6);
    const Tensor a = random_tensor({3, 3, 2}, rng);
    const std::vector<Vector> xs = {random_vector(3, rng), random_vector(3, rng), random_vector(2, rng)};
    for (std::size_t skip = 0; skip < 3; ++skip) {
        Vector oracle(a.dim(skip), 0.0);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = 0; k < 2; ++k) {
                    const std::size_t idx[3] = {i, j, k};
                    double w = a.at({i, j, k});
                    for (std::size_t m = 0; m < 3; ++m)
                        if (m != skip) w *= xs[m][idx[m]];
                    oracle[idx[skip]] += w;
                }
        const auto got = contract_all_but<double>(a, xs, skip);
        for (std::size_t p = 0; p < oracle.size(); ++p) EXPECT_NEAR(got[p], oracle[p], 1e-13);
    }
}

TEST(Contract, RankOneProperty) {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<Vector> xs = {random_vector(2, rng), random_vector(3, rng), random_vector(4, rng)};
        const Tensor t = outer<double>(std::span<const Vector>(xs));
        for (std::size_t i = 0; i < 3; ++i) {
            double scale = 1.0;
            for (std::size_t k = 0; k < 3; ++k)
                if (k != i) scale *= dot(xs[k], xs[k]);
            const auto got = contract_all_but<double>(t, xs, i);
            for (std::size_t p = 0; p < got.size(); ++p) EXPECT_NEAR(got[p], scale * xs[i][p], 1e-10);
        }
    }
}

TEST(Contract, ArityErrors) {
    const Tensor a({2, 2});
    const std::vector<Vector> bad = {{1, 0}};
    EXPECT_THROW(contract_all_but<double>(a, bad, 0), std::invalid_argument);
    const std::vector<Vector> wrong_len = {{1, 0}, {1, 0, 0}};
    EXPECT_THROW(contract_all_but<double>(a, wrong_len, 0), std::invalid_argument);
    const std::vector<Vector> ok = {{1, 0}, {1, 0}};
    EXPECT_THROW(contract_all_but<double>(a, ok, 2), std::invalid_argument);
}

TEST(Matrix, ProductMatchesNaive) {
    Rng rng(8);
    const Matrix a = tenspect::testing::random_matrix(4, 3, rng);
    const Matrix b = tenspect::testing::random_matrix(3, 5, rng);
    EXPECT_LT(tenspect::testing::max_abs_diff(a * b, tenspect::testing::naive_product(a, b)), 1e-13);
}

TEST(ComplexConversion, RealPartAndRejection) {
    const Tensor t({2}, {1.5, -2.0});
    EXPECT_EQ(to_real(to_complex(t)).values(), t.values());
    const ComplexTensor c({1}, {Complex(1.0, 0.5)});
    EXPECT_THROW(to_real(c), std::invalid_argument);
}
