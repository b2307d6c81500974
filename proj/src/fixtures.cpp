#include "tenspect/fixtures.hpp"

namespace tenspect::fixtures {

std::array<double, 18> example_coefficients() {
    return {6, 2, 6, -2014, 121, -11, 48, -13, -40, -31, 93, 97, 63, 41, -94, -3, 47, 4};
}

Tensor example_tensor() {
    const auto c = example_coefficients();
    Tensor t({3, 3, 2});
    std::size_t n = 0;
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t i = 0; i < 3; ++i) t.at({i, j, k}) = c[n++];
    return t;
}

std::vector<RankOneTerm> example_kronecker_terms() {
    return {
        {{.450492, -1.43768, -1.40925}, {-.923877, -.986098, -.646584}, {.809777, 68.2814}},
        {{-.582772, .548689, 1.93447}, {.148851, -3.43755, -1.07165}, {18.6866, 28.1003}},
        {{1.06175, -.0802873, -.0580488}, {-.0125305, 3.22958, -.0575754}, {-598.154, 10.8017}},
    };
}

Tensor sum_of_terms(const std::vector<RankOneTerm>& terms) {
    if (terms.empty()) throw std::invalid_argument("sum_of_terms: no terms");
    Tensor sum({terms[0].x.size(), terms[0].y.size(), terms[0].z.size()});
    for (const auto& t : terms) sum += outer<double>({t.x, t.y, t.z});
    return sum;
}

RankOneTerm example_best_rank_one_factors() {
    return {{1.0, -.0595538, .00358519}, {1.0, -289.637, 6.98717}, {6.95378, -.2079687}};
}

Tensor identity(std::size_t n) { return Matrix::identity(n).to_tensor(); }

}  // namespace tenspect::fixtures
