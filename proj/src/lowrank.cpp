#include "tenspect/lowrank.hpp"

#include <algorithm>
#include <utility>
#include <cmath>

namespace tenspect {

namespace {

void require_rank(const Svd& s, std::size_t r) {
    if (r < 1 || r > s.rank) {
        throw std::invalid_argument("rank r=" + std::to_string(r) + " outside [1, " + std::to_string(s.rank) + "]");
    }
}

Matrix truncation(const Svd& s, std::span<const std::size_t> indices) {
    Matrix x(s.rows(), s.cols());
    for (auto i : indices) x += s.term(i);
    return x;
}

bool has_repeated_sigma(const Svd& s) {
    for (std::size_t i = 0; i + 1 < s.rank; ++i)
        if (s.sigmas[i] - s.sigmas[i + 1] <= kDegenerateSigmaTolerance * s.sigmas[0]) return true;
    return false;
}

// Calls fn for every r-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t r, Fn&& fn) {
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        fn(std::as_const(idx));
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Matrix best_rank_r(const Svd& s, std::size_t r) {
    require_rank(s, r);
    std::vector<std::size_t> first(r);
    for (std::size_t i = 0; i < r; ++i) first[i] = i;
    return truncation(s, first);
}

Matrix best_rank_r(const Matrix& a, std::size_t r, const SvdOptions& opts) { return best_rank_r(svd(a, opts), r); }

CriticalEnumeration enumerate_critical(const Svd& s, std::size_t r) {
    require_rank(s, r);
    CriticalEnumeration out;
    out.degenerate = has_repeated_sigma(s);
    for_each_subset(s.rank, r, [&](const std::vector<std::size_t>& idx) {
        CriticalPoint p;
        p.index_set = idx;
        p.matrix = truncation(s, idx);
        // distance² is the sum of the σ_j² left out, including those below the rank cutoff.
        double d2 = 0.0;
        for (std::size_t j = 0; j < s.sigmas.size(); ++j)
            if (!std::binary_search(idx.begin(), idx.end(), j)) d2 += s.sigmas[j] * s.sigmas[j];
        p.distance = std::sqrt(d2);
        out.points.push_back(std::move(p));
    });
    std::stable_sort(out.points.begin(), out.points.end(), [](const auto& a, const auto& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        return a.index_set < b.index_set;
    });
    return out;
}

CriticalEnumeration enumerate_critical(const Matrix& a, std::size_t r, const SvdOptions& opts) {
    return enumerate_critical(svd(a, opts), r);
}

double tangent_residual(const Matrix& a, const Svd& s, const CriticalPoint& x) {
    const Matrix b = a - x.matrix;
    const Matrix bt = b.transpose();
    double worst = 0.0;
    for (auto i : x.index_set) {
        // ⟨B, e_k⊗v_i⟩ = (B v_i)_k and ⟨B, u_i⊗e_l⟩ = (Bᵗ u_i)_l.
        for (double w : b * s.v.col(i)) worst = std::max(worst, std::abs(w));
        for (double w : bt * s.u.col(i)) worst = std::max(worst, std::abs(w));
    }
    return worst;
}

std::vector<Matrix> orthogonal_critical(const Matrix& a, const SvdOptions& opts) {
    if (!a.is_square()) throw std::invalid_argument("orthogonal_critical: matrix must be square");
    const Svd s = svd(a, opts);
    const std::size_t n = a.rows();
    std::vector<std::pair<double, Matrix>> found;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Vector signs(n);
        for (std::size_t i = 0; i < n; ++i) signs[i] = (mask >> i) & 1 ? -1.0 : 1.0;
        Matrix x = s.u * Matrix::diagonal(signs) * s.v.transpose();
        found.emplace_back((a - x).norm(), std::move(x));
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<Matrix> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
}

Matrix lowdin(const Matrix& a, const SvdOptions& opts) {
    if (!a.is_square()) throw std::invalid_argument("lowdin: matrix must be square");
    const Svd s = svd(a, opts);
    if (s.rank < a.rows()) throw std::invalid_argument("lowdin: matrix is rank deficient, nearest orthogonal matrix is not unique");
    return s.u * s.v.transpose();
}

}  // namespace tenspect
