#include "tenspect/singspace.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <numeric>

#include "tenspect/counting.hpp"
#include "tenspect/symmetric.hpp"

namespace tenspect {

namespace {

Eigen::MatrixXcd to_eigen(const std::vector<ComplexVector>& rows, std::size_t cols) {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return m;
}

void fill_rank(SingularSpaceSystem& sys) {
    const auto info = numeric_rank(sys, sys.rank_threshold);
    sys.numeric_rank = info.rank;
    sys.dimension = info.dimension;
    sys.system_singular_values = info.singular_values;
}

SpanDecomposition least_squares(const ComplexTensor& a, const std::vector<ComplexTensor>& terms) {
    SpanDecomposition out;
    const auto n = static_cast<Eigen::Index>(a.size());
    const auto k = static_cast<Eigen::Index>(terms.size());
    Eigen::VectorXcd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) rhs[i] = a.data()[static_cast<std::size_t>(i)];
    const double a_norm = rhs.norm();
    if (k == 0) {
        out.residual = a_norm;
        out.relative_residual = a_norm > 0 ? 1.0 : 0.0;
        out.underdetermined = a_norm > 0;
        return out;
    }
    Eigen::MatrixXcd basis(n, k);
    for (Eigen::Index j = 0; j < k; ++j) {
        const auto& t = terms[static_cast<std::size_t>(j)];
        a.require_same_shape(t);
        for (Eigen::Index i = 0; i < n; ++i) basis(i, j) = t.data()[static_cast<std::size_t>(i)];
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(basis);
    cod.setThreshold(1e-10);
    const Eigen::VectorXcd c = cod.solve(rhs);
    out.coefficients.assign(c.data(), c.data() + k);
    out.residual = (basis * c - rhs).norm();
    out.relative_residual = a_norm > 0 ? out.residual / a_norm : out.residual;
    out.span_rank = static_cast<std::size_t>(cod.rank());
    out.dependent = out.span_rank < terms.size();
    out.underdetermined = out.relative_residual > 1e-6;
    return out;
}

}  // namespace

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

ComplexVector SingularSpaceSystem::coordinates(const ComplexTensor& x) const {
    if (x.shape() != shape) throw std::invalid_argument("tensor shape does not match the singular space system");
    if (!symmetric) return ComplexVector(x.data().begin(), x.data().end());
    ComplexVector c;
    c.reserve(monomials.size());
    for (const auto& m : monomials) c.push_back(x(m));
    return c;
}

double SingularSpaceSystem::residual(const ComplexTensor& x) const {
    const auto c = coordinates(x);
    double worst = 0.0;
    for (const auto& row : equations) {
        Complex s{};
        for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * c[j];
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

SingularSpaceSystem assemble_general(const ComplexTensor& a, double rank_threshold) {
    if (a.order() < 2) throw std::invalid_argument("singular space needs at least 2 modes");
    SingularSpaceSystem sys;
    sys.shape = a.shape();
    sys.ambient = a.size();
    sys.rank_threshold = rank_threshold;
    const std::size_t d = a.order();
    for (std::size_t mode = 0; mode < d; ++mode) {
        const std::size_t len = a.dim(mode);
        for (std::size_t p = 0; p < len; ++p) {
            for (std::size_t q = p + 1; q < len; ++q) {
                // Coefficient of X_J: A_{J[i→p]} when J_i = q, minus A_{J[i→q]} when J_i = p.
                ComplexVector row(sys.ambient, Complex{});
                for (std::size_t flat = 0; flat < a.size(); ++flat) {
                    auto idx = a.multi_index(flat);
                    if (idx[mode] == q) {
                        idx[mode] = p;
                        row[flat] += a(idx);
                    } else if (idx[mode] == p) {
                        idx[mode] = q;
                        row[flat] -= a(idx);
                    }
                }
                sys.labels.push_back({mode, p, q});
                sys.equations.push_back(std::move(row));
            }
        }
    }
    fill_rank(sys);
    return sys;
}

SingularSpaceSystem assemble_general(const Tensor& a, double rank_threshold) {
    return assemble_general(to_complex(a), rank_threshold);
}

SingularSpaceSystem assemble_symmetric(const ComplexTensor& a, double rank_threshold) {
    require_symmetric(a);
    if (a.order() < 2) throw std::invalid_argument("symmetric singular space needs degree at least 2");
    SingularSpaceSystem sys;
    sys.shape = a.shape();
    sys.symmetric = true;
    sys.rank_threshold = rank_threshold;
    const std::size_t vars = a.dim(0);
    const std::size_t d = a.order();
    sys.monomials = monomial_multisets(vars, d);
    sys.ambient = sys.monomials.size();
    std::map<std::vector<std::size_t>, std::size_t> column;
    for (std::size_t c = 0; c < sys.monomials.size(); ++c) column[sys.monomials[c]] = c;

    // Index sequences J of length d−1 for the contraction A·x^{d−1}.
    const Tensor rest_shape(Shape(d - 1, vars));
    const std::size_t rest_count = rest_shape.size();

    auto col_of = [&](std::size_t lead, const std::vector<std::size_t>& rest) {
        std::vector<std::size_t> ms = rest;
        ms.push_back(lead);
        std::sort(ms.begin(), ms.end());
        return column.at(ms);
    };
    auto entry = [&](std::size_t lead, const std::vector<std::size_t>& rest) {
        std::vector<std::size_t> idx{lead};
        idx.insert(idx.end(), rest.begin(), rest.end());
        return a(idx);
    };

    for (std::size_t p = 0; p < vars; ++p) {
        for (std::size_t q = p + 1; q < vars; ++q) {
            // (A·x^{d−1})_q x_p − (A·x^{d−1})_p x_q.
            ComplexVector row(sys.ambient, Complex{});
            for (std::size_t r = 0; r < rest_count; ++r) {
                const auto rest = rest_shape.multi_index(r);
                row[col_of(p, rest)] += entry(q, rest);
                row[col_of(q, rest)] -= entry(p, rest);
            }
            sys.labels.push_back({0, p, q});
            sys.equations.push_back(std::move(row));
        }
    }
    fill_rank(sys);
    return sys;
}

SingularSpaceSystem assemble_symmetric(const Tensor& a, double rank_threshold) {
    return assemble_symmetric(to_complex(a), rank_threshold);
}

RankInfo numeric_rank(const SingularSpaceSystem& sys, double rel_threshold) {
    RankInfo info;
    const std::size_t rows = sys.rows();
    const std::size_t cols = sys.ambient;
    if (rows == 0) {
        info.dimension = cols;
        return info;
    }
    const Eigen::MatrixXcd m = to_eigen(sys.equations, cols);
    const bool complex_coeffs = m.imag().cwiseAbs().maxCoeff() > 0.0;
    Eigen::MatrixXd stacked;
    if (complex_coeffs) {
        const auto r = static_cast<Eigen::Index>(rows);
        const auto c = static_cast<Eigen::Index>(cols);
        stacked.resize(2 * r, 2 * c);
        stacked << m.real(), -m.imag(), m.imag(), m.real();
    } else {
        stacked = m.real();
    }
    const double max_row = stacked.rowwise().norm().maxCoeff();
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(stacked);
    const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < std::min(r.rows(), r.cols()); ++i)
        if (std::abs(r(i, i)) > rel_threshold * max_row) ++rank;
    info.rank = complex_coeffs ? rank / 2 : rank;
    info.dimension = cols - info.rank;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    info.singular_values.assign(sv.data(), sv.data() + sv.size());
    return info;
}

std::size_t numeric_dimension(const SingularSpaceSystem& sys, double rel_threshold) {
    return numeric_rank(sys, rel_threshold).dimension;
}

std::size_t singular_space_dimension(const Shape& sizes) {
    if (sizes.size() < 2) throw std::invalid_argument("singular space dimension needs at least 2 modes");
    Shape s = sizes;
    std::sort(s.begin(), s.end());
    const std::size_t last = s.back();
    std::size_t big_n = 1;
    std::size_t pairs_prefix = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        big_n *= s[i];
        pairs_prefix += binomial(s[i], 2);
    }
    if (last <= big_n) return big_n * last - pairs_prefix - binomial(last, 2);
    return binomial(big_n + 1, 2) - pairs_prefix;
}

std::size_t symmetric_singular_space_dimension(std::size_t n, std::size_t d) {
    return binomial(n + d, d) - binomial(n + 1, 2);
}

DimensionReport dimension_report(const SingularSpaceSystem& sys) {
    DimensionReport r;
    r.shape = sys.shape;
    r.symmetric = sys.symmetric;
    r.equations = sys.rows();
    r.numeric_rank = sys.numeric_rank;
    r.numeric_dimension = sys.dimension;
    r.equations_independent = sys.numeric_rank == sys.rows();
    if (sys.symmetric) {
        const std::size_t n = sys.shape[0] - 1;
        const std::size_t d = sys.shape.size();
        r.formula_dimension = symmetric_singular_space_dimension(n, d);
        r.tuple_count = static_cast<std::size_t>(count_eigentensors(static_cast<unsigned>(n), static_cast<unsigned>(d)));
    } else {
        r.formula_dimension = singular_space_dimension(sys.shape);
        r.tuple_count = static_cast<std::size_t>(count_singular_tuples(sys.shape, true));
    }
    r.formula_matches = r.formula_dimension == r.numeric_dimension;
    r.tuple_basis_possible = r.tuple_count == r.numeric_dimension;
    if (!r.formula_matches) {
        r.notes.push_back("numeric dimension " + std::to_string(r.numeric_dimension) + " differs from closed form " +
                          std::to_string(r.formula_dimension));
    }
    if (r.tuple_count > r.formula_dimension) {
        r.notes.push_back("conflicting claims: the closed form gives dimension " + std::to_string(r.formula_dimension) +
                          " while the " + std::to_string(r.tuple_count) +
                          " singular tuples are said to be independent and form a basis; numeric dimension is " +
                          std::to_string(r.numeric_dimension));
    }
    if (!r.tuple_basis_possible) {
        r.notes.push_back(std::to_string(r.tuple_count) + " tuples cannot form a basis of a " +
                          std::to_string(r.numeric_dimension) + "-dimensional space");
    }
    return r;
}

SpanDecomposition decompose_in_tuple_span(const ComplexTensor& a, std::span<const SingularTuple> tuples) {
    std::vector<ComplexTensor> terms;
    for (const auto& t : tuples) terms.push_back(t.rank_one());
    return least_squares(a, terms);
}

SpanDecomposition decompose_in_eigen_span(const ComplexTensor& a, std::span<const Eigenpair> pairs) {
    std::vector<ComplexTensor> terms;
    for (const auto& p : pairs) {
        const std::vector<ComplexVector> xs(a.order(), p.x);
        terms.push_back(outer<Complex>(std::span<const ComplexVector>(xs)));
    }
    return least_squares(a, terms);
}

}  // namespace tenspect
