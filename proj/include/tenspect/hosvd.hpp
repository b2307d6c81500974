#pragma once

#include <vector>

#include "tenspect/core.hpp"
#include "tenspect/spectral.hpp"

namespace tenspect {

/// Mode-i flattening: rows indexed by mode i, columns by the remaining modes in ascending
/// order, row-major.
Matrix unfold(const Tensor& t, std::size_t mode);
Tensor fold(const Matrix& m, std::size_t mode, const Shape& shape);

/// t ×_mode m: replaces mode `mode` (size m.cols()) by m.rows().
Tensor mode_product(const Tensor& t, const Matrix& m, std::size_t mode);

/// A = S ×_1 U_1 ×_2 … ×_d U_d with orthogonal U_i, all-orthogonal and norm-ordered core S.
struct Hosvd {
    Tensor core;
    std::vector<Matrix> factors;
    /// ||S^i_0|| ≥ ||S^i_1|| ≥ … for each mode i.
    std::vector<Vector> mode_singular_values;

    [[nodiscard]] Tensor reconstruct() const;
};

Hosvd hosvd(const Tensor& a, const SvdOptions& opts = {});

/// Norms of the slices of t with mode i fixed to 0, 1, ….
Vector slice_norms(const Tensor& t, std::size_t mode);

struct HosvdResiduals {
    double reconstruction = 0.0;  // ||A − rebuilt|| / ||A||
    double orthogonality = 0.0;   // max |⟨S^i_α, S^i_β⟩| / ||S||², α ≠ β
    double ordering = 0.0;        // max increase between consecutive slice norms, / ||S||
    double factor_orthogonality = 0.0;  // max ||U_iᵗU_i − I||
};

HosvdResiduals verify_hosvd(const Tensor& a, const Hosvd& h);

}  // namespace tenspect
