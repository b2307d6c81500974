#include "tenspect/counting.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace tenspect {

CountPolynomial CountPolynomial::constant(std::size_t variables, const BigInt& c) {
    CountPolynomial p(variables);
    p.add_term(Exponents(variables, 0), c);
    return p;
}

CountPolynomial CountPolynomial::monomial(std::size_t variables, std::size_t var, unsigned power) {
    CountPolynomial p(variables);
    Exponents e(variables, 0);
    e.at(var) = power;
    p.add_term(e, 1);
    return p;
}

BigInt CountPolynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void CountPolynomial::add_term(const Exponents& e, const BigInt& c) {
    if (e.size() != variables_) throw std::invalid_argument("exponent vector has wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CountPolynomial& CountPolynomial::operator+=(const CountPolynomial& o) {
    if (o.variables_ != variables_) throw std::invalid_argument("polynomials have different variables");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

CountPolynomial CountPolynomial::multiply(const CountPolynomial& o, const Exponents* caps) const {
    if (o.variables_ != variables_) throw std::invalid_argument("polynomials have different variables");
    CountPolynomial out(variables_);
    Exponents e(variables_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            bool keep = true;
            for (std::size_t k = 0; k < variables_; ++k) {
                e[k] = ea[k] + eb[k];
                if (caps && e[k] > (*caps)[k]) {
                    keep = false;
                    break;
                }
            }
            if (keep) out.add_term(e, ca * cb);
        }
    }
    return out;
}

BigInt count_singular_tuples(const Shape& sizes, bool allow_large) {
    if (sizes.empty()) throw std::invalid_argument("count_singular_tuples: need at least one mode");
    const std::size_t d = sizes.size();
    Exponents n(d);
    unsigned total = 0;
    for (std::size_t i = 0; i < d; ++i) {
        if (sizes[i] == 0) throw std::invalid_argument("count_singular_tuples: mode sizes must be positive");
        n[i] = static_cast<unsigned>(sizes[i] - 1);
        total += n[i];
    }
    if (total > kCountDegreeGuard && !allow_large) {
        throw std::invalid_argument("count_singular_tuples: total degree " + std::to_string(total) +
                                    " exceeds guard " + std::to_string(kCountDegreeGuard));
    }

    CountPolynomial product = CountPolynomial::constant(d, 1);
    for (std::size_t i = 0; i < d; ++i) {
        CountPolynomial hat(d);
        for (std::size_t k = 0; k < d; ++k)
            if (k != i) hat += CountPolynomial::monomial(d, k, 1);

        // Σ_j t̂^j t_i^{n_i−j}, the quotient (t̂^{n+1} − t^{n+1}) / (t̂ − t) written out.
        CountPolynomial factor(d);
        CountPolynomial hat_power = CountPolynomial::constant(d, 1);
        for (unsigned j = 0; j <= n[i]; ++j) {
            factor += hat_power.multiply(CountPolynomial::monomial(d, i, n[i] - j), &n);
            hat_power = hat_power.multiply(hat, &n);
        }
        product = product.multiply(factor, &n);
    }
    return product.coefficient(n);
}

BigInt count_eigentensors(unsigned n, unsigned d) {
    if (d < 2) throw std::invalid_argument("count_eigentensors: degree must be at least 2");
    BigInt sum = 0;
    BigInt power = 1;
    for (unsigned i = 0; i <= n; ++i) {
        sum += power;
        power *= (d - 1);
    }
    return sum;
}

StabilizationProfile stabilization_profile(const Shape& prefix, std::size_t max_last) {
    if (prefix.empty()) throw std::invalid_argument("stabilization_profile: empty prefix");
    StabilizationProfile out;
    out.prefix = prefix;
    std::size_t sum_n = 0;
    for (auto s : prefix) {
        if (s == 0) throw std::invalid_argument("stabilization_profile: mode sizes must be positive");
        sum_n += s - 1;
    }
    out.boundary_size = sum_n + 1;
    const std::size_t first = *std::max_element(prefix.begin(), prefix.end());
    for (std::size_t last = first; last <= max_last; ++last) {
        Shape shape = prefix;
        shape.push_back(last);
        out.last_sizes.push_back(last);
        out.counts.push_back(count_singular_tuples(shape));
    }
    out.stable_from_boundary = true;
    std::optional<BigInt> boundary_count;
    for (std::size_t k = 0; k < out.last_sizes.size(); ++k) {
        if (out.last_sizes[k] < out.boundary_size) continue;
        if (!boundary_count) boundary_count = out.counts[k];
        if (out.counts[k] != *boundary_count) out.stable_from_boundary = false;
    }
    return out;
}

}  // namespace tenspect
