#pragma once

#include <map>
#include <string>
#include <vector>

#include "tenspect/core.hpp"

namespace tenspect {

/// Exponent vector of a monomial in n+1 variables.
using Monomial = std::vector<unsigned>;

/// All monomials of degree `degree` in `variables` variables, as sorted index multisets
/// (i_1 ≤ … ≤ i_d) in lexicographic order. There are C(variables + degree − 1, degree).
std::vector<std::vector<std::size_t>> monomial_multisets(std::size_t variables, std::size_t degree);

Monomial multiset_to_exponents(std::span<const std::size_t> multiset, std::size_t variables);

/// d!/∏ α_i!, the number of index sequences with exponent vector α.
double multinomial(const Monomial& exponents);

/// Symmetric tensor of the homogeneous polynomial Σ c_α x^α: each entry is c_α / multinomial(α).
Tensor symmetric_tensor_from_polynomial(std::size_t variables, std::size_t degree,
                                        const std::map<Monomial, double>& coefficients);

/// Inverse of symmetric_tensor_from_polynomial. The tensor must be symmetric.
std::map<Monomial, double> polynomial_from_symmetric_tensor(const Tensor& t);

/// Parses exponent strings such as "3,0,0" or "300" (single-digit exponents only in the
/// compact form).
Monomial parse_monomial(const std::string& text);
std::string format_monomial(const Monomial& m);

}  // namespace tenspect
