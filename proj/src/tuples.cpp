#include "tenspect/tuples.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <random>
#include <thread>

namespace tenspect {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Generator for start k, independent of scheduling.
std::mt19937_64 start_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t k) {
    return std::mt19937_64(splitmix64(splitmix64(seed ^ (stream << 56)) + k));
}

// Runs fn(k) for k in [0, count) on `threads` workers; results keep index order.
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t count, std::size_t threads, Fn&& fn) {
    std::vector<R> out(count);
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t k = 0; k < count; ++k) out[k] = fn(k);
        return out;
    }
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t k = t; k < count; k += threads) out[k] = fn(k);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

std::size_t resolve_threads(const SolverConfig& cfg) { return cfg.threads ? cfg.threads : default_thread_count(); }

void check_desk_scale(const Shape& shape, const SolverConfig& cfg) {
    if (cfg.allow_large) return;
    if (shape.size() > 4) throw std::invalid_argument("tensor has more than 4 modes; set allow_large to override");
    for (auto s : shape)
        if (s > 5) throw std::invalid_argument("mode size above 5; set allow_large to override");
}

// Contractions of A against xs: c[i] = A·(…x̂ⁱ…) and, when requested, the mixed second
// contractions m[i][j] = A·(…x̂ⁱ…x̂ʲ…) as s_i × s_j matrices.
struct Contractions {
    std::vector<VectorXcd> c;
    std::vector<std::vector<MatrixXcd>> m;
};

Contractions contract(const ComplexTensor& a, std::span<const ComplexVector> xs, bool second) {
    const auto& shape = a.shape();
    const std::size_t d = shape.size();
    Contractions out;
    out.c.resize(d);
    for (std::size_t i = 0; i < d; ++i) out.c[i] = VectorXcd::Zero(static_cast<Eigen::Index>(shape[i]));
    if (second) {
        out.m.assign(d, std::vector<MatrixXcd>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (i != j)
                    out.m[i][j] = MatrixXcd::Zero(static_cast<Eigen::Index>(shape[i]), static_cast<Eigen::Index>(shape[j]));
    }
    std::vector<std::size_t> idx(d, 0);
    std::vector<Complex> p(d);
    const auto data = a.data();
    for (std::size_t flat = 0; flat < data.size(); ++flat) {
        const Complex v = data[flat];
        if (v != Complex{}) {
            for (std::size_t k = 0; k < d; ++k) p[k] = xs[k][idx[k]];
            for (std::size_t i = 0; i < d; ++i) {
                Complex prod = v;
                for (std::size_t k = 0; k < d; ++k)
                    if (k != i) prod *= p[k];
                out.c[i][static_cast<Eigen::Index>(idx[i])] += prod;
                if (!second) continue;
                for (std::size_t j = i + 1; j < d; ++j) {
                    Complex q = v;
                    for (std::size_t k = 0; k < d; ++k)
                        if (k != i && k != j) q *= p[k];
                    out.m[i][j](static_cast<Eigen::Index>(idx[i]), static_cast<Eigen::Index>(idx[j])) += q;
                    out.m[j][i](static_cast<Eigen::Index>(idx[j]), static_cast<Eigen::Index>(idx[i])) += q;
                }
            }
        }
        for (std::size_t k = d; k-- > 0;) {
            if (++idx[k] < shape[k]) break;
            idx[k] = 0;
        }
    }
    return out;
}

// Square polynomial system for the singular tuples of a (normalized) tensor:
//   A·(…x̂ⁱ…) − λ_i xⁱ = 0 and xⁱᵀxⁱ − 1 = 0 for every mode i.
// Contracting the first block with xⁱ gives λ_i = A·(x¹⊗…⊗x^d), so the λ_i agree at every
// solution. Normalizing each factor keeps Newton away from the trivial family where two
// factors vanish.
struct TupleSystem {
    const ComplexTensor& a;
    std::vector<std::size_t> offsets;  // start of each factor in z; the d values λ_i follow
    std::size_t factor_unknowns = 0;
    std::size_t unknowns = 0;

    explicit TupleSystem(const ComplexTensor& t) : a(t) {
        for (auto s : a.shape()) {
            offsets.push_back(factor_unknowns);
            factor_unknowns += s;
        }
        unknowns = factor_unknowns + a.order();
    }

    [[nodiscard]] std::vector<ComplexVector> unpack(const VectorXcd& z) const {
        std::vector<ComplexVector> xs;
        for (std::size_t i = 0; i < offsets.size(); ++i) {
            const auto off = static_cast<Eigen::Index>(offsets[i]);
            xs.emplace_back(z.data() + off, z.data() + off + static_cast<Eigen::Index>(a.dim(i)));
        }
        return xs;
    }

    [[nodiscard]] Complex lambda(const VectorXcd& z, std::size_t i) const {
        return z[static_cast<Eigen::Index>(factor_unknowns + i)];
    }

    [[nodiscard]] VectorXcd pack(std::span<const ComplexVector> xs, Complex lambda) const {
        VectorXcd z(static_cast<Eigen::Index>(unknowns));
        for (std::size_t i = 0; i < xs.size(); ++i) {
            for (std::size_t q = 0; q < xs[i].size(); ++q) z[static_cast<Eigen::Index>(offsets[i] + q)] = xs[i][q];
            z[static_cast<Eigen::Index>(factor_unknowns + i)] = lambda;
        }
        return z;
    }

    void evaluate(const VectorXcd& z, VectorXcd& f, MatrixXcd* jac) const {
        const auto xs = unpack(z);
        const auto con = contract(a, xs, jac != nullptr);
        const auto n = static_cast<Eigen::Index>(unknowns);
        const auto nf = static_cast<Eigen::Index>(factor_unknowns);
        f.resize(n);
        if (jac) jac->setZero(n, n);
        const std::size_t d = xs.size();
        for (std::size_t i = 0; i < d; ++i) {
            const Complex li = lambda(z, i);
            const auto oi = static_cast<Eigen::Index>(offsets[i]);
            const auto si = static_cast<Eigen::Index>(xs[i].size());
            const auto row_norm = nf + static_cast<Eigen::Index>(i);
            Complex sq{};
            for (const auto& v : xs[i]) sq += v * v;
            f[row_norm] = sq - Complex{1.0};
            for (Eigen::Index q = 0; q < si; ++q) f[oi + q] = con.c[i][q] - li * xs[i][static_cast<std::size_t>(q)];
            if (!jac) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == i) continue;
                jac->block(oi, static_cast<Eigen::Index>(offsets[j]), si, static_cast<Eigen::Index>(xs[j].size())) = con.m[i][j];
            }
            for (Eigen::Index q = 0; q < si; ++q) {
                const Complex xq = xs[i][static_cast<std::size_t>(q)];
                (*jac)(oi + q, oi + q) = -li;
                (*jac)(oi + q, row_norm) = -xq;
                (*jac)(row_norm, oi + q) = 2.0 * xq;
            }
        }
    }
};

// Square system for eigenvectors of a symmetric tensor: A·x^{d−1} − λx = 0, xᵀx − 1 = 0.
struct EigenSystem {
    const ComplexTensor& a;
    std::size_t n;

    explicit EigenSystem(const ComplexTensor& t) : a(t), n(t.dim(0)) {}

    void evaluate(const VectorXcd& z, VectorXcd& f, MatrixXcd* jac) const {
        const auto dim = static_cast<Eigen::Index>(n);
        ComplexVector x(z.data(), z.data() + dim);
        const Complex lambda = z[dim];
        const std::size_t d = a.order();
        const std::vector<ComplexVector> xs(d, x);
        const auto con = contract(a, xs, jac != nullptr && d >= 2);
        f.resize(dim + 1);
        for (Eigen::Index q = 0; q < dim; ++q) f[q] = con.c[0][q] - lambda * x[static_cast<std::size_t>(q)];
        Complex nx{};
        for (const auto& v : x) nx += v * v;
        f[dim] = nx - Complex{1.0};
        if (!jac) return;
        jac->setZero(dim + 1, dim + 1);
        jac->topLeftCorner(dim, dim) = static_cast<double>(d - 1) * con.m[0][1];
        for (Eigen::Index q = 0; q < dim; ++q) {
            (*jac)(q, q) -= lambda;
            (*jac)(q, dim) = -x[static_cast<std::size_t>(q)];
            (*jac)(dim, q) = 2.0 * x[static_cast<std::size_t>(q)];
        }
    }
};

struct NewtonOutcome {
    VectorXcd z;
    double fnorm = 0.0;
    bool converged = false;
};

template <typename System>
NewtonOutcome damped_newton(const System& sys, VectorXcd z, const SolverConfig& cfg) {
    VectorXcd f;
    MatrixXcd jac;
    NewtonOutcome out;
    sys.evaluate(z, f, &jac);
    double fn = f.norm();
    int polish = 0;
    for (int it = 0; it < cfg.max_iters; ++it) {
        if (fn <= cfg.newton_tol) {
            // A couple of extra full steps bring the residual to working precision.
            if (++polish > 2) break;
        }
        Eigen::PartialPivLU<MatrixXcd> lu(jac);
        const VectorXcd dz = lu.solve(-f);
        if (!dz.allFinite()) break;
        double t = 1.0;
        bool accepted = false;
        VectorXcd trial;
        VectorXcd ftrial;
        while (t >= 1.0 / 4096.0) {
            trial = z + t * dz;
            sys.evaluate(trial, ftrial, nullptr);
            const double ftn = ftrial.norm();
            if (std::isfinite(ftn) && (ftn < (1.0 - 1e-4 * t) * fn || (fn <= cfg.newton_tol && ftn <= fn))) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) break;
        z = std::move(trial);
        if (z.norm() > 1e8) break;
        sys.evaluate(z, f, &jac);
        fn = f.norm();
    }
    out.fnorm = fn;
    out.converged = fn <= cfg.newton_tol;
    out.z = std::move(z);
    return out;
}

Complex bilinear_sqrt_norm(const ComplexVector& x) {
    Complex s{};
    for (const auto& v : x) s += v * v;
    return std::sqrt(s);
}

double max_abs(std::span<const Complex> x) {
    double m = 0.0;
    for (const auto& v : x) m = std::max(m, std::abs(v));
    return m;
}

// +1 or -1 making the first significant entry point into the right half plane.
double canonical_sign(std::span<const Complex> x) {
    const double scale = max_abs(x);
    for (const auto& v : x) {
        if (std::abs(v) <= 1e-8 * scale) continue;
        if (std::abs(v.real()) > 1e-10 * scale) return v.real() > 0 ? 1.0 : -1.0;
        return v.imag() > 0 ? 1.0 : -1.0;
    }
    return 1.0;
}

bool lambda_negative(Complex l) {
    const double scale = std::abs(l);
    if (std::abs(l.real()) > 1e-10 * scale) return l.real() < 0;
    return l.imag() < 0;
}

bool nearly_real(std::span<const Complex> x, double tol) {
    for (const auto& v : x)
        if (std::abs(v.imag()) > tol) return false;
    return true;
}

void drop_imaginary(ComplexVector& x) {
    for (auto& v : x) v = Complex{v.real(), 0.0};
}

ComplexTensor unit_representative(const ComplexTensor& t) {
    const double nrm = frobenius_norm(t);
    return nrm > 0 ? t * Complex{1.0 / nrm} : t;
}

// Distance between the projective classes of two unit-norm tensors, minimized over phase.
double projective_distance(const ComplexTensor& a, const ComplexTensor& b) {
    const double c = std::abs(inner_product(a, b));
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * c));
}

// Rounded, phase-fixed entries used as a deterministic tie-breaker when sorting.
std::vector<double> sort_key(const ComplexTensor& unit) {
    const auto data = unit.data();
    const double scale = max_abs(data);
    Complex phase{1.0};
    for (const auto& v : data) {
        if (std::abs(v) >= scale * (1.0 - 1e-9)) {
            phase = std::conj(v) / std::abs(v);
            break;
        }
    }
    std::vector<double> key;
    for (const auto& v : data) {
        const Complex w = v * phase;
        key.push_back(std::round(w.real() * 1e8) / 1e8);
        key.push_back(std::round(w.imag() * 1e8) / 1e8);
    }
    return key;
}

enum class StartStatus { Failed, Rejected, Accepted };

template <typename Candidate>
struct StartResult {
    StartStatus status = StartStatus::Failed;
    bool converged = false;
    Candidate candidate;
};

ComplexVector gaussian_complex(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g;
    ComplexVector v(n);
    for (auto& x : v) {
        const double re = g(rng);
        x = Complex{re, g(rng)};
    }
    return v;
}

ComplexVector gaussian_real(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g;
    ComplexVector v(n);
    for (auto& x : v) x = Complex{g(rng), 0.0};
    return v;
}

void normalize_hermitian(ComplexVector& x) {
    const double nrm = norm(x);
    if (nrm > 0)
        for (auto& v : x) v /= nrm;
}

void normalize_bilinear(ComplexVector& x) {
    const Complex s = bilinear_sqrt_norm(x);
    if (std::abs(s) > 1e-12)
        for (auto& v : x) v /= s;
}

struct TupleCandidate {
    SingularTuple tuple;
    ComplexTensor unit;
};

std::optional<TupleCandidate> finish_tuple(const ComplexTensor& a, double a_norm, const TupleSystem& sys,
                                           const VectorXcd& z, const SolverConfig& cfg) {
    auto xs = sys.unpack(z);
    Complex lambda = sys.lambda(z, 0) * a_norm;
    for (const auto& x : xs)
        if (norm(x) > 1e6) return std::nullopt;

    // Sign canonicalization: flips on a pair of factors keep λ; a flip of x¹ negates λ.
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (canonical_sign(xs[i]) < 0) {
            for (auto& v : xs[i]) v = -v;
            for (auto& v : xs[0]) v = -v;
        }
    }
    if (lambda_negative(lambda)) {
        lambda = -lambda;
        for (auto& v : xs[0]) v = -v;
    }

    SingularTuple t;
    bool real = std::abs(lambda.imag()) <= 1e-8 * std::max(1.0, std::abs(lambda));
    for (const auto& x : xs) real = real && nearly_real(x, 1e-8);
    if (real) {
        for (auto& x : xs) drop_imaginary(x);
        lambda = Complex{lambda.real(), 0.0};
    }
    t.xs = std::move(xs);
    t.lambda = lambda;
    t.is_real = real;
    t.residual = tuple_residual(a, t.xs, t.lambda);
    t.zero_lambda = std::abs(lambda) <= 1e-10 * std::max(1.0, a_norm);
    if (t.residual > cfg.accept_residual * std::max(1.0, a_norm)) return std::nullopt;
    TupleCandidate c;
    c.unit = unit_representative(t.rank_one());
    c.tuple = std::move(t);
    return c;
}

std::size_t count_real(auto const& items) {
    return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const auto& t) { return t.is_real; }));
}

}  // namespace

std::size_t default_thread_count() {
    if (const char* env = std::getenv("TENSPECT_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 1;
}

ComplexTensor SingularTuple::rank_one() const { return outer<Complex>(std::span<const ComplexVector>(xs)); }

ComplexTensor SingularTuple::scaled_rank_one() const { return rank_one() * lambda; }

std::vector<Vector> SingularTuple::real_factors() const {
    if (!is_real) throw std::logic_error("singular tuple is not real");
    std::vector<Vector> out;
    for (const auto& x : xs) {
        Vector r;
        for (const auto& v : x) r.push_back(v.real());
        out.push_back(std::move(r));
    }
    return out;
}

std::size_t TupleResult::real_count() const { return count_real(tuples); }
std::size_t EigenResult::real_count() const { return count_real(pairs); }

double tuple_residual(const ComplexTensor& a, std::span<const ComplexVector> xs, Complex lambda) {
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto w = contract_all_but(a, xs, i);
        double s = 0.0;
        for (std::size_t q = 0; q < w.size(); ++q) s += std::norm(w[q] - lambda * xs[i][q]);
        worst = std::max(worst, std::sqrt(s));
    }
    return worst;
}

TupleResult singular_tuples(const ComplexTensor& a, const SolverConfig& cfg) {
    if (a.order() < 2) throw std::invalid_argument("singular tuples need at least 2 modes");
    check_desk_scale(a.shape(), cfg);
    const double a_norm = frobenius_norm(a);
    TupleResult result;
    result.diagnostics.starts = cfg.real_starts + cfg.complex_starts;
    if (a_norm == 0.0) throw std::invalid_argument("singular tuples of the zero tensor are not isolated");

    const ComplexTensor scaled = a * Complex{1.0 / a_norm};
    const TupleSystem sys(scaled);
    const std::size_t d = a.order();
    const bool real_input = std::all_of(a.data().begin(), a.data().end(), [](Complex v) { return v.imag() == 0.0; });

    auto run = [&](std::size_t k) {
        StartResult<std::optional<TupleCandidate>> res;
        const bool real_start = k < cfg.real_starts && real_input;
        auto rng = start_rng(cfg.seed, real_start ? 1 : 2, k);
        std::vector<ComplexVector> xs;
        for (std::size_t i = 0; i < d; ++i) xs.push_back(real_start ? gaussian_real(rng, a.dim(i)) : gaussian_complex(rng, a.dim(i)));
        if (real_start) {
            // Alternating power iteration to move the start into a basin of a real tuple.
            for (auto& x : xs) normalize_hermitian(x);
            for (int sweep = 0; sweep < 50; ++sweep) {
                for (std::size_t i = 0; i < d; ++i) {
                    auto w = contract_all_but(scaled, std::span<const ComplexVector>(xs), i);
                    if (norm(w) < 1e-14) break;
                    normalize_hermitian(w);
                    xs[i] = std::move(w);
                }
            }
        } else {
            for (auto& x : xs) normalize_bilinear(x);
        }
        const Complex lambda0 = contract_all(scaled, std::span<const ComplexVector>(xs));
        const auto outcome = damped_newton(sys, sys.pack(xs, lambda0), cfg);
        res.converged = outcome.converged;
        if (!outcome.converged) return res;
        res.candidate = finish_tuple(a, a_norm, sys, outcome.z, cfg);
        res.status = res.candidate ? StartStatus::Accepted : StartStatus::Rejected;
        return res;
    };

    const std::size_t total = (real_input ? cfg.real_starts : 0) + cfg.complex_starts;
    auto starts = parallel_map<StartResult<std::optional<TupleCandidate>>>(total, resolve_threads(cfg), [&](std::size_t k) {
        // Complex starts are numbered after the real ones.
        return run(real_input ? k : k + cfg.real_starts);
    });

    std::vector<TupleCandidate> found;
    auto& diag = result.diagnostics;
    diag.starts = total;
    for (auto& s : starts) {
        if (s.converged) ++diag.converged;
        if (s.status == StartStatus::Failed) {
            ++diag.failed;
            continue;
        }
        if (s.status == StartStatus::Rejected) {
            ++diag.rejected;
            continue;
        }
        auto& cand = *s.candidate;
        const bool dup = std::any_of(found.begin(), found.end(),
                                     [&](const TupleCandidate& f) { return projective_distance(f.unit, cand.unit) <= 1e-6; });
        if (dup) {
            ++diag.duplicates;
            continue;
        }
        found.push_back(std::move(cand));
    }

    std::vector<std::pair<std::vector<double>, TupleCandidate>> keyed;
    for (auto& f : found) keyed.emplace_back(sort_key(f.unit), std::move(f));
    std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) {
        const double al = std::abs(l.second.tuple.lambda);
        const double ar = std::abs(r.second.tuple.lambda);
        if (std::abs(al - ar) > 1e-9 * std::max(1.0, std::max(al, ar))) return al > ar;
        return l.first < r.first;
    });
    for (auto& k : keyed) result.tuples.push_back(std::move(k.second.tuple));
    return result;
}

TupleResult singular_tuples(const Tensor& a, const SolverConfig& cfg) { return singular_tuples(to_complex(a), cfg); }

bool is_symmetric(const ComplexTensor& a, double tol) {
    const auto& shape = a.shape();
    for (auto s : shape)
        if (s != shape[0]) return false;
    const double scale = std::max(1.0, max_abs(a.data()));
    for (std::size_t flat = 0; flat < a.size(); ++flat) {
        auto idx = a.multi_index(flat);
        std::sort(idx.begin(), idx.end());
        if (std::abs(a.data()[flat] - a(idx)) > tol * scale) return false;
    }
    return true;
}

void require_symmetric(const ComplexTensor& a) {
    if (!is_symmetric(a)) throw std::invalid_argument("tensor is not symmetric");
}

double eigen_residual(const ComplexTensor& a, std::span<const Complex> x, Complex lambda) {
    const std::vector<ComplexVector> xs(a.order(), ComplexVector(x.begin(), x.end()));
    const auto w = contract_all_but(a, std::span<const ComplexVector>(xs), 0);
    double s = 0.0;
    for (std::size_t q = 0; q < w.size(); ++q) s += std::norm(w[q] - lambda * x[q]);
    return std::sqrt(s);
}

EigenResult eigenpairs(const ComplexTensor& a, const SolverConfig& cfg) {
    require_symmetric(a);
    check_desk_scale(a.shape(), cfg);
    if (a.order() < 2) throw std::invalid_argument("eigenpairs need at least 2 modes");
    const double a_norm = frobenius_norm(a);
    if (a_norm == 0.0) throw std::invalid_argument("eigenvectors of the zero tensor are not isolated");
    const ComplexTensor scaled = a * Complex{1.0 / a_norm};
    const EigenSystem sys(scaled);
    const std::size_t n = a.dim(0);
    const std::size_t d = a.order();
    const bool real_input = std::all_of(a.data().begin(), a.data().end(), [](Complex v) { return v.imag() == 0.0; });

    struct Candidate {
        Eigenpair pair;
        ComplexTensor unit;
    };

    auto run = [&](std::size_t k) {
        StartResult<std::optional<Candidate>> res;
        const bool real_start = k < cfg.real_starts;
        auto rng = start_rng(cfg.seed, real_start ? 3 : 4, k);
        ComplexVector x = real_start ? gaussian_real(rng, n) : gaussian_complex(rng, n);
        if (real_start) {
            // Shifted symmetric power iteration.
            normalize_hermitian(x);
            const double shift = static_cast<double>(d - 1);
            for (int it = 0; it < 100; ++it) {
                const std::vector<ComplexVector> xs(d, x);
                auto w = contract_all_but(scaled, std::span<const ComplexVector>(xs), 0);
                for (std::size_t q = 0; q < n; ++q) w[q] += shift * x[q];
                normalize_hermitian(w);
                x = std::move(w);
            }
        } else {
            normalize_bilinear(x);
        }
        const std::vector<ComplexVector> xs(d, x);
        const Complex lambda0 = contract_all(scaled, std::span<const ComplexVector>(xs));
        VectorXcd z(static_cast<Eigen::Index>(n + 1));
        for (std::size_t q = 0; q < n; ++q) z[static_cast<Eigen::Index>(q)] = x[q];
        z[static_cast<Eigen::Index>(n)] = lambda0;
        const auto outcome = damped_newton(sys, z, cfg);
        res.converged = outcome.converged;
        if (!outcome.converged) return res;

        Eigenpair p;
        p.x.assign(outcome.z.data(), outcome.z.data() + static_cast<Eigen::Index>(n));
        p.lambda = outcome.z[static_cast<Eigen::Index>(n)] * a_norm;
        if (norm(p.x) > 1e6) return res;
        // x and −x are the same eigenvector; λ changes by (−1)^d. Fix the sign on the
        // largest-modulus entry.
        std::size_t big = 0;
        for (std::size_t q = 1; q < n; ++q)
            if (std::abs(p.x[q]) > std::abs(p.x[big]) * (1.0 + 1e-9)) big = q;
        const Complex lead = p.x[big];
        const bool flip = std::abs(lead.real()) > 1e-10 * std::abs(lead) ? lead.real() < 0 : lead.imag() < 0;
        if (flip) {
            for (auto& v : p.x) v = -v;
            if (d % 2 == 1) p.lambda = -p.lambda;
        }
        p.is_real = nearly_real(p.x, 1e-8) && std::abs(p.lambda.imag()) <= 1e-8 * std::max(1.0, std::abs(p.lambda));
        if (p.is_real) {
            drop_imaginary(p.x);
            p.lambda = Complex{p.lambda.real(), 0.0};
        }
        p.residual = eigen_residual(a, p.x, p.lambda);
        if (p.residual > cfg.accept_residual * std::max(1.0, a_norm)) {
            res.status = StartStatus::Rejected;
            return res;
        }
        Candidate c;
        c.unit = ComplexTensor({n}, p.x);
        c.unit = unit_representative(c.unit);
        c.pair = std::move(p);
        res.candidate = std::move(c);
        res.status = StartStatus::Accepted;
        return res;
    };

    const std::size_t real_starts = real_input ? cfg.real_starts : 0;
    const std::size_t total = real_starts + cfg.complex_starts;
    auto starts = parallel_map<StartResult<std::optional<Candidate>>>(
        total, resolve_threads(cfg), [&](std::size_t k) { return run(real_input ? k : k + cfg.real_starts); });

    EigenResult result;
    auto& diag = result.diagnostics;
    diag.starts = total;
    std::vector<Candidate> found;
    for (auto& s : starts) {
        if (s.converged) ++diag.converged;
        if (s.status == StartStatus::Failed) {
            ++diag.failed;
            continue;
        }
        if (s.status == StartStatus::Rejected) {
            ++diag.rejected;
            continue;
        }
        auto& cand = *s.candidate;
        const bool dup = std::any_of(found.begin(), found.end(),
                                     [&](const Candidate& f) { return projective_distance(f.unit, cand.unit) <= 1e-6; });
        if (dup) {
            ++diag.duplicates;
            continue;
        }
        found.push_back(std::move(cand));
    }
    std::vector<std::pair<std::vector<double>, Candidate>> keyed;
    for (auto& f : found) keyed.emplace_back(sort_key(f.unit), std::move(f));
    std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) {
        const double al = std::abs(l.second.pair.lambda);
        const double ar = std::abs(r.second.pair.lambda);
        if (std::abs(al - ar) > 1e-9 * std::max(1.0, std::max(al, ar))) return al > ar;
        return l.first < r.first;
    });
    for (auto& k : keyed) result.pairs.push_back(std::move(k.second.pair));
    return result;
}

EigenResult eigenpairs(const Tensor& a, const SolverConfig& cfg) { return eigenpairs(to_complex(a), cfg); }

RankOneApproximation best_rank_one(const Tensor& a, const SolverConfig& cfg) {
    const auto res = singular_tuples(a, cfg);
    const SingularTuple* best = nullptr;
    for (const auto& t : res.tuples) {
        if (!t.is_real) continue;
        if (!best || std::abs(t.lambda) > std::abs(best->lambda)) best = &t;
    }
    if (!best) {
        throw ConvergenceError("no real singular tuple found (" + std::to_string(res.diagnostics.starts) + " starts, " +
                               std::to_string(res.diagnostics.failed) + " failed)");
    }
    RankOneApproximation out;
    const auto factors = best->real_factors();
    out.approximation = outer<double>(std::span<const Vector>(factors)) * best->lambda.real();
    out.distance = frobenius_norm(a - out.approximation);
    out.tuple = *best;
    out.diagnostics = res.diagnostics;
    return out;
}

}  // namespace tenspect
