#pragma once

#include <cstdint>
#include <vector>

#include "tenspect/core.hpp"

namespace tenspect {

struct SolverConfig {
    std::uint64_t seed = 0;
    /// Real multi-starts: alternating power iteration followed by Newton refinement.
    std::size_t real_starts = 200;
    /// Complex Gaussian starts refined by complex Newton only.
    std::size_t complex_starts = 500;
    double newton_tol = 1e-12;
    /// Largest accepted residual, relative to max(1, ||A||).
    double accept_residual = 1e-9;
    int max_iters = 500;
    /// Lifts the desk-scale guard (every mode ≤ 5, at most 4 modes).
    bool allow_large = false;
    /// Worker threads; 0 reads TENSPECT_THREADS and falls back to 1.
    std::size_t threads = 0;
};

struct SolverDiagnostics {
    std::size_t starts = 0;
    std::size_t converged = 0;   // Newton reached newton_tol
    std::size_t rejected = 0;    // converged but residual above accept_residual
    std::size_t failed = 0;      // diverged or stalled
    std::size_t duplicates = 0;  // accepted but already known
};

/// Singular vector tuple: A·(x¹⊗…x̂ⁱ…⊗x^d) = λ xⁱ for every mode i.
///
/// Factors are normalized with the bilinear form, xⁱᵀxⁱ = 1, which coincides with the
/// Euclidean unit norm for real tuples. Real tuples are signed so that λ ≥ 0.
struct SingularTuple {
    std::vector<ComplexVector> xs;
    Complex lambda;
    double residual = 0.0;
    bool is_real = false;
    /// λ vanishes: A is orthogonal to the rank-one tensor of the tuple.
    bool zero_lambda = false;

    [[nodiscard]] ComplexTensor rank_one() const;  // x¹⊗…⊗x^d
    [[nodiscard]] ComplexTensor scaled_rank_one() const;  // λ·x¹⊗…⊗x^d
    /// Real factors; throws if the tuple is not real.
    [[nodiscard]] std::vector<Vector> real_factors() const;
};

struct TupleResult {
    std::vector<SingularTuple> tuples;  // |λ| descending
    SolverDiagnostics diagnostics;

    [[nodiscard]] std::size_t real_count() const;
};

TupleResult singular_tuples(const ComplexTensor& a, const SolverConfig& cfg = {});
TupleResult singular_tuples(const Tensor& a, const SolverConfig& cfg = {});

/// Largest ||A·(x¹⊗…x̂ⁱ…⊗x^d) − λxⁱ|| over modes.
double tuple_residual(const ComplexTensor& a, std::span<const ComplexVector> xs, Complex lambda);

/// Eigenvector of a symmetric tensor: A·x^{d−1} = λx with xᵀx = 1.
struct Eigenpair {
    ComplexVector x;
    Complex lambda;
    double residual = 0.0;
    bool is_real = false;
};

struct EigenResult {
    std::vector<Eigenpair> pairs;  // |λ| descending
    SolverDiagnostics diagnostics;

    [[nodiscard]] std::size_t real_count() const;
};

/// Throws std::invalid_argument unless every mode has the same size and entries are invariant
/// under index permutation to 1e-12 relative.
void require_symmetric(const ComplexTensor& a);
bool is_symmetric(const ComplexTensor& a, double tol = 1e-12);

EigenResult eigenpairs(const ComplexTensor& a, const SolverConfig& cfg = {});
EigenResult eigenpairs(const Tensor& a, const SolverConfig& cfg = {});

double eigen_residual(const ComplexTensor& a, std::span<const Complex> x, Complex lambda);

struct RankOneApproximation {
    Tensor approximation;  // λ·x¹⊗…⊗x^d
    double distance = 0.0;
    SingularTuple tuple;
    SolverDiagnostics diagnostics;
};

/// Best rank-one approximation among the real singular tuples. The minimizer maximizes |λ|, so
/// distance² = ||A||² − λ². Throws ConvergenceError when no real tuple is found.
RankOneApproximation best_rank_one(const Tensor& a, const SolverConfig& cfg = {});

/// Worker count used when SolverConfig::threads is 0.
std::size_t default_thread_count();

}  // namespace tenspect
