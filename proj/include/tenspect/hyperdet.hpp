#pragma once

#include <string>
#include <vector>

#include "tenspect/core.hpp"
#include "tenspect/tuples.hpp"

namespace tenspect {

/// Cayley hyperdeterminant of a 2×2×2 tensor, normalized so that the coefficient of
/// a000²a111² is 1. Homogeneous of degree 4.
double cayley_hyperdet(const Tensor& t);
Complex cayley_hyperdet(const ComplexTensor& t);

struct Hyperdet222Report {
    Tensor point;
    std::vector<SingularTuple> critical_tuples;
    /// |Det(p − λ_k·x¹_k⊗x²_k⊗x³_k)| per critical tuple.
    std::vector<double> vanishing_values;
    double max_abs = 0.0;
    /// 1e-6·||p||⁴.
    double tolerance = 0.0;
    bool passed = false;
    bool degenerate = false;
    std::vector<std::string> warnings;
    SolverDiagnostics diagnostics;
};

/// Checks that p − x lies on the hyperdeterminant hypersurface for every critical rank-one
/// tensor x of the distance from p.
Hyperdet222Report duality_check(const Tensor& p, const SolverConfig& cfg = {});

}  // namespace tenspect
