#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace tenspect {

using Complex = std::complex<double>;
using Shape = std::vector<std::size_t>;
using Vector = std::vector<double>;
using ComplexVector = std::vector<Complex>;

enum class ScalarKind { Real, Complex };

template <typename T>
inline constexpr bool is_complex_v = false;
template <typename T>
inline constexpr bool is_complex_v<std::complex<T>> = true;

/// Raised by solvers that exhaust their iteration or restart budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline double conj_if(double v) { return v; }
inline Complex conj_if(Complex v) { return std::conj(v); }
inline double abs2(double v) { return v * v; }
inline double abs2(Complex v) { return std::norm(v); }

std::string shape_to_string(const Shape& shape);

/// Dense multi-way array, row-major with the last index fastest.
template <typename T>
class BasicTensor {
public:
    using value_type = T;
    static constexpr ScalarKind scalar_kind = is_complex_v<T> ? ScalarKind::Complex : ScalarKind::Real;

    BasicTensor() = default;

    explicit BasicTensor(Shape shape) : shape_(std::move(shape)) {
        validate_shape();
        data_.assign(element_count(shape_), T{});
    }

    BasicTensor(Shape shape, std::vector<T> data) : shape_(std::move(shape)), data_(std::move(data)) {
        validate_shape();
        if (data_.size() != element_count(shape_)) {
            throw std::invalid_argument("tensor data length " + std::to_string(data_.size()) +
                                        " does not match shape " + shape_to_string(shape_));
        }
    }

    static std::size_t element_count(const Shape& shape) {
        std::size_t n = 1;
        for (auto s : shape) n *= s;
        return n;
    }

    [[nodiscard]] const Shape& shape() const { return shape_; }
    [[nodiscard]] std::size_t order() const { return shape_.size(); }
    [[nodiscard]] std::size_t size() const { return data_.size(); }
    [[nodiscard]] std::size_t dim(std::size_t mode) const { return shape_.at(mode); }
    [[nodiscard]] std::span<const T> data() const { return data_; }
    [[nodiscard]] std::span<T> data() { return data_; }
    [[nodiscard]] const std::vector<T>& values() const { return data_; }

    [[nodiscard]] std::size_t offset(std::span<const std::size_t> index) const {
        if (index.size() != shape_.size()) throw std::out_of_range("tensor index has wrong arity");
        std::size_t off = 0;
        for (std::size_t k = 0; k < shape_.size(); ++k) {
            if (index[k] >= shape_[k]) throw std::out_of_range("tensor index out of range");
            off = off * shape_[k] + index[k];
        }
        return off;
    }

    [[nodiscard]] std::vector<std::size_t> multi_index(std::size_t flat) const {
        std::vector<std::size_t> index(shape_.size());
        for (std::size_t k = shape_.size(); k-- > 0;) {
            index[k] = flat % shape_[k];
            flat /= shape_[k];
        }
        return index;
    }

    T& operator()(std::span<const std::size_t> index) { return data_[offset(index)]; }
    const T& operator()(std::span<const std::size_t> index) const { return data_[offset(index)]; }
    T& at(std::initializer_list<std::size_t> index) { return (*this)(std::span(index.begin(), index.size())); }
    const T& at(std::initializer_list<std::size_t> index) const {
        return (*this)(std::span(index.begin(), index.size()));
    }

    BasicTensor& operator+=(const BasicTensor& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    BasicTensor& operator-=(const BasicTensor& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    BasicTensor& operator*=(T s) {
        for (auto& v : data_) v *= s;
        return *this;
    }
    friend BasicTensor operator+(BasicTensor a, const BasicTensor& b) { return a += b; }
    friend BasicTensor operator-(BasicTensor a, const BasicTensor& b) { return a -= b; }
    friend BasicTensor operator*(BasicTensor a, T s) { return a *= s; }
    friend BasicTensor operator*(T s, BasicTensor a) { return a *= s; }

    void require_same_shape(const BasicTensor& o) const {
        if (o.shape_ != shape_) {
            throw std::invalid_argument("shape mismatch: " + shape_to_string(shape_) + " vs " +
                                        shape_to_string(o.shape_));
        }
    }

private:
    void validate_shape() const {
        if (shape_.empty()) throw std::invalid_argument("tensor needs at least one mode");
        for (auto s : shape_) {
            if (s == 0) throw std::invalid_argument("tensor mode sizes must be positive");
        }
    }

    Shape shape_;
    std::vector<T> data_;
};

using Tensor = BasicTensor<double>;
using ComplexTensor = BasicTensor<Complex>;

ComplexTensor to_complex(const Tensor& t);

/// Real part, or throws if any imaginary part exceeds `tol` times the largest modulus.
Tensor to_real(const ComplexTensor& t, double tol = 1e-10);

/// Dense real matrix, row-major. Equivalent to a 2-mode Tensor.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> diag);
    static Matrix diagonal(std::size_t rows, std::size_t cols, std::span<const double> diag);
    static Matrix from_tensor(const Tensor& t);
    [[nodiscard]] Tensor to_tensor() const;

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool empty() const { return data_.empty(); }
    [[nodiscard]] std::span<const double> data() const { return data_; }
    [[nodiscard]] std::span<double> data() { return data_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] Vector col(std::size_t j) const;
    [[nodiscard]] Vector row(std::size_t i) const;
    void set_col(std::size_t j, std::span<const double> v);
    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] double norm() const;
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(double s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, double s) { return a *= s; }
    friend Matrix operator*(double s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, std::span<const double> x);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
double norm(std::span<const Complex> a);

/// Outer product u vᵗ.
Matrix outer(std::span<const double> u, std::span<const double> v);

/// Sum over all entries of conj(a)·b. Shapes must agree.
template <typename T>
T inner_product(const BasicTensor<T>& a, const BasicTensor<T>& b) {
    a.require_same_shape(b);
    T sum{};
    auto da = a.data();
    auto db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) sum += conj_if(da[i]) * db[i];
    return sum;
}

double inner_product(const Matrix& a, const Matrix& b);

template <typename T>
double frobenius_norm(const BasicTensor<T>& a) {
    double s = 0.0;
    for (const auto& v : a.data()) s += abs2(v);
    return std::sqrt(s);
}

/// Decomposable tensor x¹⊗…⊗x^d.
template <typename T>
BasicTensor<T> outer(std::span<const std::vector<T>> vectors) {
    if (vectors.empty()) throw std::invalid_argument("outer product needs at least one vector");
    Shape shape;
    for (const auto& v : vectors) {
        if (v.empty()) throw std::invalid_argument("outer product factors must be nonempty");
        shape.push_back(v.size());
    }
    std::vector<T> data{T{1}};
    for (const auto& v : vectors) {
        std::vector<T> next;
        next.reserve(data.size() * v.size());
        for (const auto& a : data) {
            for (const auto& b : v) next.push_back(a * b);
        }
        data = std::move(next);
    }
    return BasicTensor<T>(std::move(shape), std::move(data));
}

template <typename T>
BasicTensor<T> outer(std::initializer_list<std::vector<T>> vectors) {
    return outer<T>(std::span<const std::vector<T>>(vectors.begin(), vectors.size()));
}

/// Contracts `a` against every vector in `xs` except the one at mode `skip` and returns the
/// resulting vector along that mode. No conjugation is applied, so the map is multilinear for
/// complex input as well.
template <typename T>
std::vector<T> contract_all_but(const BasicTensor<T>& a, std::span<const std::vector<T>> xs, std::size_t skip) {
    const auto& shape = a.shape();
    const std::size_t d = shape.size();
    if (xs.size() != d) throw std::invalid_argument("contract_all_but: need one vector per mode");
    if (skip >= d) throw std::invalid_argument("contract_all_but: skip mode out of range");
    for (std::size_t k = 0; k < d; ++k) {
        if (k != skip && xs[k].size() != shape[k]) {
            throw std::invalid_argument("contract_all_but: vector " + std::to_string(k) + " has length " +
                                        std::to_string(xs[k].size()) + ", mode size is " +
                                        std::to_string(shape[k]));
        }
    }

    // Contract trailing modes first, keeping the skipped mode as a free index.
    std::vector<T> buf(a.data().begin(), a.data().end());
    std::size_t inner = 1;  // product of already-kept trailing sizes (only the skipped mode)
    for (std::size_t k = d; k-- > 0;) {
        if (k == skip) {
            inner *= shape[k];
            continue;
        }
        const std::size_t len = shape[k];
        const std::size_t outer_count = buf.size() / (len * inner);
        std::vector<T> next(outer_count * inner, T{});
        for (std::size_t o = 0; o < outer_count; ++o) {
            for (std::size_t j = 0; j < len; ++j) {
                const T c = xs[k][j];
                const T* src = buf.data() + (o * len + j) * inner;
                T* dst = next.data() + o * inner;
                for (std::size_t r = 0; r < inner; ++r) dst[r] += src[r] * c;
            }
        }
        buf = std::move(next);
    }
    return buf;
}

/// Full contraction A·(x¹⊗…⊗x^d).
template <typename T>
T contract_all(const BasicTensor<T>& a, std::span<const std::vector<T>> xs) {
    auto w = contract_all_but(a, xs, 0);
    T s{};
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * xs[0][i];
    return s;
}

}  // namespace tenspect
