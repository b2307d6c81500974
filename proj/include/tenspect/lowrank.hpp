#pragma once

#include <vector>

#include "tenspect/core.hpp"
#include "tenspect/spectral.hpp"

namespace tenspect {

/// Critical point U(Σ_{i_1}+…+Σ_{i_r})Vᵗ of the distance from A to the rank-r matrices.
struct CriticalPoint {
    Matrix matrix;
    std::vector<std::size_t> index_set;  // ascending, 0-based singular value indices
    double distance = 0.0;
};

struct CriticalEnumeration {
    std::vector<CriticalPoint> points;  // by distance, then index set
    /// Repeated nonzero singular values: the critical locus is positive dimensional and the
    /// points returned are one representative per index subset.
    bool degenerate = false;
};

/// Relative tolerance used to decide that two nonzero singular values coincide.
inline constexpr double kDegenerateSigmaTolerance = 1e-8;

/// Truncated SVD U(Σ_1+…+Σ_r)Vᵗ. Requires 1 ≤ r ≤ rank(a).
Matrix best_rank_r(const Matrix& a, std::size_t r, const SvdOptions& opts = {});
Matrix best_rank_r(const Svd& s, std::size_t r);

CriticalEnumeration enumerate_critical(const Matrix& a, std::size_t r, const SvdOptions& opts = {});
CriticalEnumeration enumerate_critical(const Svd& s, std::size_t r);

/// Largest |⟨A−X, T⟩| over the spanning set e_k⊗v_i, u_i⊗e_l (i in the index set) of the
/// tangent space at X. Zero exactly when X is a critical point.
double tangent_residual(const Matrix& a, const Svd& s, const CriticalPoint& x);

/// The 2ⁿ critical points U·Diag(±1,…,±1)·Vᵗ of the distance from a square matrix to O(n),
/// sorted by distance to a.
std::vector<Matrix> orthogonal_critical(const Matrix& a, const SvdOptions& opts = {});

/// Nearest orthogonal matrix UVᵗ. Throws std::invalid_argument when a is rank deficient.
Matrix lowdin(const Matrix& a, const SvdOptions& opts = {});

}  // namespace tenspect
