#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tenspect/core.hpp"

namespace tenspect {

struct JacobiOptions {
    /// Stop once the off-diagonal Frobenius norm drops below tolerance·||S||.
    double tolerance = 1e-13;
    int max_sweeps = 100;
    /// When set, the (p,q) rotation order is shuffled every sweep with this seed.
    std::optional<std::uint64_t> shuffle_seed;
};

/// Eigendecomposition S = Q·Diag(λ)·Qᵗ of a real symmetric matrix.
struct SymEigen {
    Matrix q;          // columns are eigenvectors
    Vector lambdas;    // descending
    int sweeps = 0;
};

/// Cyclic Jacobi eigendecomposition. Throws std::invalid_argument for non-square input or
/// when |s_ij - s_ji| exceeds 1e-12·||s||.
SymEigen sym_eigen(const Matrix& s, const JacobiOptions& opts = {});

struct SvdOptions {
    /// Singular values at or below rank_tolerance·σ₁ do not count towards the rank.
    double rank_tolerance = 1e-10;
    JacobiOptions jacobi;
};

/// A = U·Σ·Vᵗ with square orthogonal U (m×m), V (n×n) and min(m,n) descending sigmas.
struct Svd {
    Matrix u;
    Vector sigmas;
    Matrix v;
    std::size_t rank = 0;

    [[nodiscard]] std::size_t rows() const { return u.rows(); }
    [[nodiscard]] std::size_t cols() const { return v.rows(); }
    /// The m×n pseudodiagonal Σ.
    [[nodiscard]] Matrix sigma_matrix() const;
    [[nodiscard]] Matrix reconstruct() const;
    /// U·Σ_i·Vᵗ = σ_i u_i v_iᵗ.
    [[nodiscard]] Matrix term(std::size_t i) const;
};

/// SVD built from the spectral theorem: AᵗA = V·Diag(d)·Vᵗ, σ_i = √d_i, u_i = A v_i / σ_i, and
/// the remaining columns of U completed to an orthonormal basis.
///
/// The Jacobi eigenvectors of AᵗA are refined by one-sided rotations on the columns of A·V so
/// that small singular values keep full relative accuracy. Each v_i is signed so its first
/// coordinate above 1e-12 in magnitude is positive.
Svd svd(const Matrix& a, const SvdOptions& opts = {});

/// One σ-group of the coordinate-free decomposition F = Σ σ_i F_i.
struct SpectralComponent {
    double sigma = 0.0;
    Matrix f;
    std::size_t rank = 0;
};

struct SpectralPart {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<SpectralComponent> parts;  // σ strictly descending

    [[nodiscard]] Matrix recombine() const;
};

/// Groups singular values equal to within group_tolerance·σ₁; zero singular values are dropped.
SpectralPart spectral_parts(const Svd& s, double group_tolerance = 1e-8);
SpectralPart spectral_parts(const Matrix& a, const SvdOptions& opts = {}, double group_tolerance = 1e-8);

/// Moore-Penrose inverse Σ σ_i⁻¹ F_iᵗ.
Matrix pseudoinverse(const Matrix& a, const SvdOptions& opts = {});

}  // namespace tenspect
