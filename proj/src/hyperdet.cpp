#include "tenspect/hyperdet.hpp"

#include <algorithm>
#include <cmath>

#include "tenspect/counting.hpp"

namespace tenspect {

namespace {

template <typename T>
T cayley(const BasicTensor<T>& t) {
    if (t.shape() != Shape{2, 2, 2}) throw std::invalid_argument("hyperdeterminant needs a 2x2x2 tensor");
    auto a = [&](std::size_t i, std::size_t j, std::size_t k) { return t.at({i, j, k}); };
    const T a000 = a(0, 0, 0), a001 = a(0, 0, 1), a010 = a(0, 1, 0), a011 = a(0, 1, 1);
    const T a100 = a(1, 0, 0), a101 = a(1, 0, 1), a110 = a(1, 1, 0), a111 = a(1, 1, 1);
    const T squares = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 + a010 * a010 * a101 * a101 +
                      a100 * a100 * a011 * a011;
    const T mixed = a000 * a001 * a110 * a111 + a000 * a010 * a101 * a111 + a000 * a100 * a011 * a111 +
                    a001 * a010 * a101 * a110 + a001 * a100 * a011 * a110 + a010 * a100 * a011 * a101;
    const T cross = a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111;
    return squares - T{2} * mixed + T{4} * cross;
}

bool has_zero_slice(const Tensor& p) {
    const double scale = frobenius_norm(p);
    for (std::size_t mode = 0; mode < 3; ++mode) {
        for (std::size_t v = 0; v < 2; ++v) {
            double s = 0.0;
            for (std::size_t flat = 0; flat < p.size(); ++flat)
                if (p.multi_index(flat)[mode] == v) s += p.data()[flat] * p.data()[flat];
            if (std::sqrt(s) <= 1e-12 * scale) return true;
        }
    }
    return false;
}

}  // namespace

double cayley_hyperdet(const Tensor& t) { return cayley(t); }
Complex cayley_hyperdet(const ComplexTensor& t) { return cayley(t); }

Hyperdet222Report duality_check(const Tensor& p, const SolverConfig& cfg) {
    if (p.shape() != Shape{2, 2, 2}) throw std::invalid_argument("duality check needs a 2x2x2 tensor");
    Hyperdet222Report report;
    report.point = p;
    const double pn = frobenius_norm(p);
    report.tolerance = 1e-6 * std::pow(pn, 4);

    if (has_zero_slice(p)) {
        report.degenerate = true;
        report.warnings.push_back("point has a zero slice; critical points are not isolated");
    }
    if (std::abs(cayley_hyperdet(p)) <= 1e-10 * std::pow(pn, 4)) {
        report.degenerate = true;
        report.warnings.push_back("point lies on the hyperdeterminant hypersurface");
    }

    const auto tuples = singular_tuples(p, cfg);
    report.diagnostics = tuples.diagnostics;
    report.critical_tuples = tuples.tuples;
    const auto expected = static_cast<std::size_t>(count_singular_tuples(p.shape()));
    if (report.critical_tuples.size() != expected) {
        report.degenerate = true;
        report.warnings.push_back("found " + std::to_string(report.critical_tuples.size()) + " critical tuples, expected " +
                                  std::to_string(expected) + " for a general point");
    }

    const ComplexTensor pc = to_complex(p);
    for (const auto& t : report.critical_tuples) {
        const double v = std::abs(cayley_hyperdet(pc - t.scaled_rank_one()));
        report.vanishing_values.push_back(v);
        report.max_abs = std::max(report.max_abs, v);
    }
    report.passed = report.max_abs <= report.tolerance;
    return report;
}

}  // namespace tenspect
