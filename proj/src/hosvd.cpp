#include "tenspect/hosvd.hpp"

#include <algorithm>
#include <cmath>

namespace tenspect {

namespace {

// Column index of a multi-index within the mode-i flattening.
std::size_t flattened_column(std::span<const std::size_t> idx, const Shape& shape, std::size_t mode) {
    std::size_t col = 0;
    for (std::size_t k = 0; k < shape.size(); ++k) {
        if (k == mode) continue;
        col = col * shape[k] + idx[k];
    }
    return col;
}

}  // namespace

Matrix unfold(const Tensor& t, std::size_t mode) {
    const auto& shape = t.shape();
    if (mode >= shape.size()) throw std::invalid_argument("unfold: mode out of range");
    Matrix m(shape[mode], t.size() / shape[mode]);
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        const auto idx = t.multi_index(flat);
        m(idx[mode], flattened_column(idx, shape, mode)) = t.data()[flat];
    }
    return m;
}

Tensor fold(const Matrix& m, std::size_t mode, const Shape& shape) {
    Tensor t(shape);
    if (m.rows() != shape.at(mode) || m.cols() * m.rows() != t.size()) {
        throw std::invalid_argument("fold: matrix does not match target shape");
    }
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        const auto idx = t.multi_index(flat);
        t.data()[flat] = m(idx[mode], flattened_column(idx, shape, mode));
    }
    return t;
}

Tensor mode_product(const Tensor& t, const Matrix& m, std::size_t mode) {
    if (mode >= t.order() || m.cols() != t.dim(mode)) throw std::invalid_argument("mode_product: dimension mismatch");
    Shape shape = t.shape();
    shape[mode] = m.rows();
    return fold(m * unfold(t, mode), mode, shape);
}

Tensor Hosvd::reconstruct() const {
    Tensor t = core;
    for (std::size_t i = 0; i < factors.size(); ++i) t = mode_product(t, factors[i], i);
    return t;
}

Vector slice_norms(const Tensor& t, std::size_t mode) {
    Vector norms(t.dim(mode), 0.0);
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        const double v = t.data()[flat];
        norms[t.multi_index(flat)[mode]] += v * v;
    }
    for (auto& n : norms) n = std::sqrt(n);
    return norms;
}

Hosvd hosvd(const Tensor& a, const SvdOptions& opts) {
    if (a.order() < 2) throw std::invalid_argument("hosvd needs at least 2 modes");
    Hosvd h;
    for (std::size_t i = 0; i < a.order(); ++i) h.factors.push_back(svd(unfold(a, i), opts).u);
    h.core = a;
    for (std::size_t i = 0; i < a.order(); ++i) h.core = mode_product(h.core, h.factors[i].transpose(), i);
    for (std::size_t i = 0; i < a.order(); ++i) h.mode_singular_values.push_back(slice_norms(h.core, i));
    return h;
}

HosvdResiduals verify_hosvd(const Tensor& a, const Hosvd& h) {
    HosvdResiduals r;
    const double an = frobenius_norm(a);
    r.reconstruction = frobenius_norm(a - h.reconstruct()) / (an > 0 ? an : 1.0);
    const double sn = frobenius_norm(h.core);
    const double scale = sn > 0 ? sn : 1.0;
    for (std::size_t i = 0; i < h.core.order(); ++i) {
        const Matrix flat = unfold(h.core, i);
        const Matrix gram = flat * flat.transpose();
        for (std::size_t p = 0; p < gram.rows(); ++p)
            for (std::size_t q = 0; q < gram.cols(); ++q)
                if (p != q) r.orthogonality = std::max(r.orthogonality, std::abs(gram(p, q)) / (scale * scale));
        const Vector norms = slice_norms(h.core, i);
        for (std::size_t k = 0; k + 1 < norms.size(); ++k)
            r.ordering = std::max(r.ordering, (norms[k + 1] - norms[k]) / scale);
        const Matrix& u = h.factors[i];
        const Matrix dev = u.transpose() * u - Matrix::identity(u.cols());
        for (double v : dev.data()) r.factor_orthogonality = std::max(r.factor_orthogonality, std::abs(v));
    }
    return r;
}

}  // namespace tenspect
