#include "tenspect/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tenspect/tuples.hpp"

namespace tenspect {

std::vector<std::vector<std::size_t>> monomial_multisets(std::size_t variables, std::size_t degree) {
    std::vector<std::vector<std::size_t>> out;
    if (variables == 0) return out;
    std::vector<std::size_t> idx(degree, 0);
    while (true) {
        out.push_back(idx);
        std::size_t k = degree;
        while (k > 0 && idx[k - 1] == variables - 1) --k;
        if (k == 0) return out;
        ++idx[k - 1];
        for (std::size_t j = k; j < degree; ++j) idx[j] = idx[k - 1];
    }
}

Monomial multiset_to_exponents(std::span<const std::size_t> multiset, std::size_t variables) {
    Monomial e(variables, 0);
    for (auto i : multiset) ++e.at(i);
    return e;
}

double multinomial(const Monomial& exponents) {
    const unsigned d = std::accumulate(exponents.begin(), exponents.end(), 0U);
    double r = std::tgamma(d + 1.0);
    for (auto a : exponents) r /= std::tgamma(a + 1.0);
    return std::round(r);
}

Tensor symmetric_tensor_from_polynomial(std::size_t variables, std::size_t degree,
                                        const std::map<Monomial, double>& coefficients) {
    if (variables == 0 || degree == 0) throw std::invalid_argument("polynomial needs variables and positive degree");
    for (const auto& [m, c] : coefficients) {
        if (m.size() != variables) throw std::invalid_argument("monomial " + format_monomial(m) + " has wrong variable count");
        if (std::accumulate(m.begin(), m.end(), 0U) != degree) {
            throw std::invalid_argument("monomial " + format_monomial(m) + " is not of degree " + std::to_string(degree));
        }
    }
    Tensor t(Shape(degree, variables));
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        const auto e = multiset_to_exponents(t.multi_index(flat), variables);
        auto it = coefficients.find(e);
        if (it != coefficients.end()) t.data()[flat] = it->second / multinomial(e);
    }
    return t;
}

std::map<Monomial, double> polynomial_from_symmetric_tensor(const Tensor& t) {
    require_symmetric(to_complex(t));
    std::map<Monomial, double> out;
    for (const auto& ms : monomial_multisets(t.dim(0), t.order())) {
        const double v = t(ms);
        if (v == 0.0) continue;
        const auto e = multiset_to_exponents(ms, t.dim(0));
        out[e] = v * multinomial(e);
    }
    return out;
}

Monomial parse_monomial(const std::string& text) {
    Monomial m;
    if (text.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto next = text.find(',', pos);
            const auto piece = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            if (piece.empty() || !std::all_of(piece.begin(), piece.end(), ::isdigit)) {
                throw std::invalid_argument("bad monomial exponent string '" + text + "'");
            }
            m.push_back(static_cast<unsigned>(std::stoul(piece)));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    } else {
        if (text.empty()) throw std::invalid_argument("empty monomial exponent string");
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw std::invalid_argument("bad monomial exponent string '" + text + "'");
            }
            m.push_back(static_cast<unsigned>(c - '0'));
        }
    }
    return m;
}

std::string format_monomial(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(m[i]);
    }
    return s;
}

}  // namespace tenspect
