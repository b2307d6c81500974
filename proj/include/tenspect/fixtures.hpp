#pragma once

#include <array>
#include <vector>

#include "tenspect/core.hpp"

namespace tenspect::fixtures {

/// The 3×3×2 example tensor f = Σ f_ijk x_i y_j z_k. Mode 1 is x (size 3), mode 2 is y
/// (size 3), mode 3 is z (size 2); entry (i, j, k) holds the coefficient of x_i y_j z_k.
Tensor example_tensor();

/// The 18 published coefficients in their printed order: z_0 block then z_1 block, each
/// listing x_0y_0, x_1y_0, x_2y_0, x_0y_1, … .
std::array<double, 18> example_coefficients();

/// One decomposable summand x⊗y⊗z.
struct RankOneTerm {
    Vector x;
    Vector y;
    Vector z;
};

/// Published three-term decomposition of the example tensor (coefficients truncated to six
/// significant digits).
std::vector<RankOneTerm> example_kronecker_terms();

Tensor sum_of_terms(const std::vector<RankOneTerm>& terms);

/// Published best rank-one factors of the example tensor, up to per-mode scale.
RankOneTerm example_best_rank_one_factors();

inline constexpr double kExampleMinDistance = 184.038;
inline constexpr std::size_t kExampleTupleCount = 15;
inline constexpr std::size_t kExampleRealTupleCount = 9;

Tensor identity(std::size_t n);

}  // namespace tenspect::fixtures
