#pragma once

#include <string>
#include <vector>

#include "tenspect/core.hpp"
#include "tenspect/tuples.hpp"

namespace tenspect {

/// Equation (mode, p, q): A(x¹,…,e_p,…,x^d)(xⁱ)_q − A(x¹,…,e_q,…,x^d)(xⁱ)_p = 0 with p < q.
/// In the symmetric case `mode` is unused and the equation is the 2×2 minor on variables p, q.
struct EquationLabel {
    std::size_t mode = 0;
    std::size_t p = 0;
    std::size_t q = 0;
};

/// Linear equations whose common kernel is the singular space of a tensor.
///
/// General case: one column per tensor entry in row-major order. Symmetric case: one column per
/// degree-d monomial (sorted index multiset), and the coordinate of a symmetric tensor X in that
/// column is the entry X_{i_1…i_d}; for X = x^d that is the monomial value x^α.
struct SingularSpaceSystem {
    Shape shape;
    bool symmetric = false;
    std::vector<std::vector<std::size_t>> monomials;  // symmetric columns
    std::vector<EquationLabel> labels;
    std::vector<ComplexVector> equations;
    std::size_t ambient = 0;
    std::size_t numeric_rank = 0;
    std::size_t dimension = 0;
    double rank_threshold = 1e-9;
    std::vector<double> system_singular_values;

    [[nodiscard]] std::size_t rows() const { return equations.size(); }
    [[nodiscard]] ComplexVector coordinates(const ComplexTensor& x) const;
    /// Largest |⟨row, coordinates(x)⟩| over all equations.
    [[nodiscard]] double residual(const ComplexTensor& x) const;
};

/// Σ_i C(n_i + 1, 2) equations, ordered by mode then (p, q) lexicographically.
SingularSpaceSystem assemble_general(const ComplexTensor& a, double rank_threshold = 1e-9);
SingularSpaceSystem assemble_general(const Tensor& a, double rank_threshold = 1e-9);

/// C(n + 1, 2) equations (A·x^{d−1})_q x_p − (A·x^{d−1})_p x_q on Sym^d. Throws for non-symmetric input.
SingularSpaceSystem assemble_symmetric(const ComplexTensor& a, double rank_threshold = 1e-9);
SingularSpaceSystem assemble_symmetric(const Tensor& a, double rank_threshold = 1e-9);

struct RankInfo {
    std::size_t rank = 0;
    std::size_t dimension = 0;
    std::vector<double> singular_values;
};

/// Rank by column-pivoted Householder QR of the stacked real form [Re −Im; Im Re]; a pivot
/// counts when it exceeds rel_threshold times the largest row norm.
RankInfo numeric_rank(const SingularSpaceSystem& sys, double rel_threshold);
std::size_t numeric_dimension(const SingularSpaceSystem& sys, double rel_threshold = 1e-9);

/// Closed-form dimension for general mode sizes (sorted internally):
///   ∏ s_i − Σ C(s_i, 2)            when s_d ≤ N,
///   C(N + 1, 2) − Σ_{i<d} C(s_i, 2) when s_d ≥ N,   N = ∏_{i<d} s_i.
std::size_t singular_space_dimension(const Shape& sizes);

/// C(n + d, d) − C(n + 1, 2) for Sym^d(C^{n+1}).
std::size_t symmetric_singular_space_dimension(std::size_t n, std::size_t d);

std::size_t binomial(std::size_t n, std::size_t k);

/// Numeric dimension next to the closed forms and the singular-tuple count, without asserting
/// agreement between them.
struct DimensionReport {
    Shape shape;
    bool symmetric = false;
    std::size_t equations = 0;
    std::size_t numeric_rank = 0;
    std::size_t numeric_dimension = 0;
    std::size_t formula_dimension = 0;
    std::size_t tuple_count = 0;  // expected number of singular tuples / eigenvectors
    bool equations_independent = false;
    bool formula_matches = false;
    /// The tuples can only form a basis when their count equals the dimension.
    bool tuple_basis_possible = false;
    std::vector<std::string> notes;
};

DimensionReport dimension_report(const SingularSpaceSystem& sys);

struct SpanDecomposition {
    ComplexVector coefficients;
    double residual = 0.0;
    double relative_residual = 0.0;
    std::size_t span_rank = 0;
    /// Fewer independent rank-one terms than terms supplied: coefficients are minimum norm.
    bool dependent = false;
    /// Relative residual above 1e-6: the supplied terms do not span a.
    bool underdetermined = false;
};

/// Least-squares a ≈ Σ c_k x¹_k⊗…⊗x^d_k over the given singular tuples.
SpanDecomposition decompose_in_tuple_span(const ComplexTensor& a, std::span<const SingularTuple> tuples);
/// Least-squares a ≈ Σ c_k x_k^{⊗d} over eigenvectors of a symmetric tensor.
SpanDecomposition decompose_in_eigen_span(const ComplexTensor& a, std::span<const Eigenpair> pairs);

}  // namespace tenspect
