#include "tenspect/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "tenspect/symmetric.hpp"

namespace tenspect::io {

using nlohmann::json;

namespace {

Shape parse_shape(const json& j) {
    if (!j.is_array() || j.empty()) throw InputError("shape", "expected a nonempty array of positive integers");
    Shape shape;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long long>() <= 0) {
            throw InputError("shape", "expected a nonempty array of positive integers");
        }
        shape.push_back(v.get<std::size_t>());
    }
    return shape;
}

double parse_number(const json& v, const std::string& field) {
    if (!v.is_number()) throw InputError(field, "expected a number");
    return v.get<double>();
}

}  // namespace

Tensor TensorFile::real() const {
    for (const auto& v : tensor.data())
        if (v.imag() != 0.0) throw InputError("complex", "this command needs a real tensor");
    std::vector<double> data;
    for (const auto& v : tensor.data()) data.push_back(v.real());
    return Tensor(tensor.shape(), std::move(data));
}

TensorFile parse_tensor(const json& j) {
    if (!j.is_object()) throw InputError("", "tensor file must be a JSON object");
    const int sources = static_cast<int>(j.contains("data")) + static_cast<int>(j.contains("complex")) +
                        static_cast<int>(j.contains("symmetric_poly"));
    if (sources == 0) throw InputError("data", "missing; provide one of data, complex, symmetric_poly");
    if (sources > 1) throw InputError("symmetric_poly", "data, complex and symmetric_poly are mutually exclusive");

    TensorFile out;
    if (j.contains("symmetric_poly")) {
        const auto& poly = j.at("symmetric_poly");
        if (!poly.is_object() || poly.empty()) throw InputError("symmetric_poly", "expected a nonempty object");
        std::map<Monomial, double> coeffs;
        std::size_t vars = 0;
        unsigned degree = 0;
        for (const auto& [key, value] : poly.items()) {
            Monomial m;
            try {
                m = parse_monomial(key);
            } catch (const std::invalid_argument& e) {
                throw InputError("symmetric_poly", e.what());
            }
            const unsigned deg = std::accumulate(m.begin(), m.end(), 0U);
            if (vars == 0) {
                vars = m.size();
                degree = deg;
            } else if (m.size() != vars || deg != degree) {
                throw InputError("symmetric_poly", "monomial '" + key + "' does not match the others in length or degree");
            }
            coeffs[m] += parse_number(value, "symmetric_poly");
        }
        if (degree == 0) throw InputError("symmetric_poly", "degree must be positive");
        if (j.contains("shape") && parse_shape(j.at("shape")) != Shape(degree, vars)) {
            throw InputError("shape", "does not match the polynomial's degree and variable count");
        }
        out.tensor = to_complex(symmetric_tensor_from_polynomial(vars, degree, coeffs));
        out.from_polynomial = true;
        return out;
    }

    if (!j.contains("shape")) throw InputError("shape", "missing");
    const Shape shape = parse_shape(j.at("shape"));
    const std::size_t expected = ComplexTensor::element_count(shape);
    std::vector<Complex> data;
    if (j.contains("data")) {
        const auto& d = j.at("data");
        if (!d.is_array()) throw InputError("data", "expected an array of numbers");
        for (const auto& v : d) data.emplace_back(parse_number(v, "data"), 0.0);
    } else {
        const auto& d = j.at("complex");
        if (!d.is_array()) throw InputError("complex", "expected an array of [re, im] pairs");
        for (const auto& v : d) {
            if (!v.is_array() || v.size() != 2) throw InputError("complex", "expected an array of [re, im] pairs");
            data.emplace_back(parse_number(v[0], "complex"), parse_number(v[1], "complex"));
        }
        out.is_complex = true;
    }
    if (data.size() != expected) {
        throw InputError(out.is_complex ? "complex" : "data", "has " + std::to_string(data.size()) +
                                                                  " entries but shape " + shape_to_string(shape) +
                                                                  " needs " + std::to_string(expected));
    }
    out.tensor = ComplexTensor(shape, std::move(data));
    return out;
}

TensorFile read_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("input", "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("input", std::string("malformed JSON: ") + e.what());
    }
    return parse_tensor(j);
}

json to_json(const Tensor& t) {
    return json{{"shape", t.shape()}, {"data", std::vector<double>(t.data().begin(), t.data().end())}};
}

json to_json(const ComplexTensor& t) {
    json data = json::array();
    for (const auto& v : t.data()) data.push_back({v.real(), v.imag()});
    return json{{"shape", t.shape()}, {"complex", data}};
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

json to_json(Complex c) { return json::array({c.real(), c.imag()}); }

json to_json(std::span<const Complex> v) {
    json out = json::array();
    for (const auto& c : v) out.push_back(to_json(c));
    return out;
}

}  // namespace tenspect::io
