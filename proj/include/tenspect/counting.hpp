#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <vector>

#include "tenspect/core.hpp"

namespace tenspect {

using BigInt = boost::multiprecision::cpp_int;
using Exponents = std::vector<unsigned>;

/// Multivariate polynomial with exact integer coefficients in variables t_1…t_d.
class CountPolynomial {
public:
    explicit CountPolynomial(std::size_t variables) : variables_(variables) {}

    static CountPolynomial constant(std::size_t variables, const BigInt& c);
    static CountPolynomial monomial(std::size_t variables, std::size_t var, unsigned power);

    [[nodiscard]] std::size_t variables() const { return variables_; }
    [[nodiscard]] const std::map<Exponents, BigInt>& terms() const { return terms_; }
    [[nodiscard]] BigInt coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const BigInt& c);
    CountPolynomial& operator+=(const CountPolynomial& o);

    /// Product; terms with an exponent above `caps[k]` in any variable are discarded
    /// (they cannot contribute to a coefficient bounded by caps).
    [[nodiscard]] CountPolynomial multiply(const CountPolynomial& o, const Exponents* caps = nullptr) const;

private:
    std::size_t variables_;
    std::map<Exponents, BigInt> terms_;
};

/// Maximum Σ n_i accepted by count_singular_tuples without override.
inline constexpr unsigned kCountDegreeGuard = 24;

/// Number of complex singular vector tuples of a general tensor with the given mode sizes
/// (n_i + 1): the coefficient of ∏ t_i^{n_i} in ∏ Σ_{j=0}^{n_i} t̂_i^j t_i^{n_i−j},
/// t̂_i = Σ_{k≠i} t_k.
BigInt count_singular_tuples(const Shape& sizes, bool allow_large = false);

/// Number of eigenvectors of a general symmetric tensor in Sym^d(C^{n+1}): Σ_{i=0}^{n} (d−1)^i.
BigInt count_eigentensors(unsigned n, unsigned d);

struct StabilizationProfile {
    Shape prefix;
    std::vector<std::size_t> last_sizes;
    std::vector<BigInt> counts;
    /// Mode size of the last factor at the boundary format n_d = Σ_{i<d} n_i.
    std::size_t boundary_size = 0;
    /// Every count from the boundary format onward equals the boundary count.
    bool stable_from_boundary = false;
};

/// Counts for last mode sizes from max(prefix) up to max_last.
StabilizationProfile stabilization_profile(const Shape& prefix, std::size_t max_last);

}  // namespace tenspect
