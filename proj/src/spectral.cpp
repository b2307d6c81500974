#include "tenspect/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>

namespace tenspect {

namespace {

double off_diagonal_norm(const Matrix& s) {
    double sum = 0.0;
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j)
            if (i != j) sum += s(i, j) * s(i, j);
    return std::sqrt(sum);
}

// Applies the rotation that annihilates s(p,q) to both sides of s and to the columns of q.
void jacobi_rotate(Matrix& s, Matrix& q, std::size_t p, std::size_t r) {
    const double apq = s(p, r);
    if (apq == 0.0) return;
    const double theta = (s(r, r) - s(p, p)) / (2.0 * apq);
    const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double sn = t * c;
    const std::size_t n = s.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const double skp = s(k, p);
        const double skr = s(k, r);
        s(k, p) = c * skp - sn * skr;
        s(k, r) = sn * skp + c * skr;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double spk = s(p, k);
        const double srk = s(r, k);
        s(p, k) = c * spk - sn * srk;
        s(r, k) = sn * spk + c * srk;
    }
    s(p, r) = 0.0;
    s(r, p) = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double qkp = q(k, p);
        const double qkr = q(k, r);
        q(k, p) = c * qkp - sn * qkr;
        q(k, r) = sn * qkp + c * qkr;
    }
}

std::vector<std::size_t> descending_order(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] > values[b]; });
    return order;
}

Matrix permute_columns(const Matrix& m, std::span<const std::size_t> order) {
    Matrix out(m.rows(), order.size());
    for (std::size_t j = 0; j < order.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, order[j]);
    return out;
}

// One-sided Jacobi on the columns of b, accumulating the same rotations into v, until every
// column pair is orthogonal to working precision.
void orthogonalize_columns(Matrix& b, Matrix& v) {
    const std::size_t n = b.cols();
    const double eps = 1e-15;
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t r = p + 1; r < n; ++r) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t k = 0; k < b.rows(); ++k) {
                    alpha += b(k, p) * b(k, p);
                    beta += b(k, r) * b(k, r);
                    gamma += b(k, p) * b(k, r);
                }
                if (gamma == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = c * t;
                for (std::size_t k = 0; k < b.rows(); ++k) {
                    const double bp = b(k, p);
                    const double br = b(k, r);
                    b(k, p) = c * bp - sn * br;
                    b(k, r) = sn * bp + c * br;
                }
                for (std::size_t k = 0; k < v.rows(); ++k) {
                    const double vp = v(k, p);
                    const double vr = v(k, r);
                    v(k, p) = c * vp - sn * vr;
                    v(k, r) = sn * vp + c * vr;
                }
            }
        }
        if (!rotated) return;
    }
}

// Extends the first `filled` orthonormal columns of u to a full orthonormal basis, each time
// taking the canonical basis vector with the largest residual after projection.
void complete_basis(Matrix& u, std::size_t filled) {
    const std::size_t m = u.rows();
    for (std::size_t j = filled; j < m; ++j) {
        Vector best;
        double best_norm = -1.0;
        for (std::size_t k = 0; k < m; ++k) {
            Vector cand(m, 0.0);
            cand[k] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t c = 0; c < j; ++c) {
                    const Vector col = u.col(c);
                    const double proj = dot(col, cand);
                    for (std::size_t i = 0; i < m; ++i) cand[i] -= proj * col[i];
                }
            }
            const double nrm = norm(cand);
            if (nrm > best_norm) {
                best_norm = nrm;
                best = std::move(cand);
            }
        }
        for (auto& x : best) x /= best_norm;
        u.set_col(j, best);
    }
}

}  // namespace

SymEigen sym_eigen(const Matrix& s, const JacobiOptions& opts) {
    if (!s.is_square()) throw std::invalid_argument("sym_eigen: matrix is not square");
    const std::size_t n = s.rows();
    const double scale = s.norm();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(s(i, j) - s(j, i)) > 1e-12 * scale) {
                throw std::invalid_argument("sym_eigen: matrix is not symmetric");
            }

    Matrix work = s;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) work(i, j) = work(j, i) = 0.5 * (s(i, j) + s(j, i));
    Matrix q = Matrix::identity(n);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t r = p + 1; r < n; ++r) pairs.emplace_back(p, r);
    std::mt19937_64 rng(opts.shuffle_seed.value_or(0));

    int sweeps = 0;
    while (sweeps < opts.max_sweeps && off_diagonal_norm(work) > opts.tolerance * scale) {
        if (opts.shuffle_seed) std::shuffle(pairs.begin(), pairs.end(), rng);
        for (auto [p, r] : pairs) jacobi_rotate(work, q, p, r);
        ++sweeps;
    }
    if (off_diagonal_norm(work) > opts.tolerance * scale) {
        throw ConvergenceError("sym_eigen: Jacobi sweeps did not converge");
    }

    Vector diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = work(i, i);
    const auto order = descending_order(diag);
    SymEigen out;
    out.q = permute_columns(q, order);
    out.lambdas.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.lambdas[i] = diag[order[i]];
    out.sweeps = sweeps;
    return out;
}

Matrix Svd::sigma_matrix() const { return Matrix::diagonal(rows(), cols(), sigmas); }

Matrix Svd::reconstruct() const { return u * sigma_matrix() * v.transpose(); }

Matrix Svd::term(std::size_t i) const { return outer(u.col(i), v.col(i)) * sigmas.at(i); }

Svd svd(const Matrix& a, const SvdOptions& opts) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t k = std::min(m, n);
    Svd out;
    if (a.norm() == 0.0) {
        out.u = Matrix::identity(m);
        out.v = Matrix::identity(n);
        out.sigmas.assign(k, 0.0);
        return out;
    }

    const Matrix at = a.transpose();
    const SymEigen eig = sym_eigen(at * a, opts.jacobi);
    Matrix v = eig.q;
    Matrix b = a * v;
    orthogonalize_columns(b, v);

    // σ_i² = d_i = ||A v_i||².
    Vector col_norms(n);
    for (std::size_t j = 0; j < n; ++j) col_norms[j] = norm(b.col(j));
    const auto order = descending_order(col_norms);
    v = permute_columns(v, order);
    b = permute_columns(b, order);

    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(v(i, j)) > 1e-12) {
                if (v(i, j) < 0.0) {
                    for (std::size_t r = 0; r < n; ++r) v(r, j) = -v(r, j);
                    for (std::size_t r = 0; r < m; ++r) b(r, j) = -b(r, j);
                }
                break;
            }
        }
    }

    out.sigmas.resize(k);
    for (std::size_t i = 0; i < k; ++i) out.sigmas[i] = col_norms[order[i]];
    const double cutoff = opts.rank_tolerance * out.sigmas[0];
    out.rank = static_cast<std::size_t>(
        std::count_if(out.sigmas.begin(), out.sigmas.end(), [&](double s) { return s > cutoff; }));

    out.u = Matrix(m, m);
    for (std::size_t j = 0; j < out.rank; ++j)
        for (std::size_t i = 0; i < m; ++i) out.u(i, j) = b(i, j) / out.sigmas[j];
    complete_basis(out.u, out.rank);
    out.v = std::move(v);
    return out;
}

Matrix SpectralPart::recombine() const {
    Matrix f(rows, cols);
    for (const auto& p : parts) f += p.f * p.sigma;
    return f;
}

SpectralPart spectral_parts(const Svd& s, double group_tolerance) {
    SpectralPart out;
    out.rows = s.rows();
    out.cols = s.cols();
    if (s.rank == 0) return out;
    const double tol = group_tolerance * s.sigmas[0];
    std::size_t i = 0;
    while (i < s.rank) {
        std::size_t j = i + 1;
        while (j < s.rank && s.sigmas[i] - s.sigmas[j] <= tol) ++j;
        SpectralComponent c;
        c.f = Matrix(out.rows, out.cols);
        double sum = 0.0;
        for (std::size_t t = i; t < j; ++t) {
            c.f += outer(s.u.col(t), s.v.col(t));
            sum += s.sigmas[t];
        }
        c.sigma = sum / static_cast<double>(j - i);
        c.rank = j - i;
        out.parts.push_back(std::move(c));
        i = j;
    }
    return out;
}

SpectralPart spectral_parts(const Matrix& a, const SvdOptions& opts, double group_tolerance) {
    return spectral_parts(svd(a, opts), group_tolerance);
}

Matrix pseudoinverse(const Matrix& a, const SvdOptions& opts) {
    const auto sp = spectral_parts(a, opts);
    Matrix x(a.cols(), a.rows());
    for (const auto& p : sp.parts) x += p.f.transpose() * (1.0 / p.sigma);
    return x;
}

}  // namespace tenspect
