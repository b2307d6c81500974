#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tenspect/core.hpp"

namespace tenspect::io {

/// Malformed or inconsistent input. `field` names the offending JSON field.
class InputError : public std::runtime_error {
public:
    InputError(std::string field, const std::string& message)
        : std::runtime_error(field.empty() ? message : "field '" + field + "': " + message), field_(std::move(field)) {}
    [[nodiscard]] const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Parsed tensor file:
///   {"shape": [..], "data": [..]}                 real, row-major
///   {"shape": [..], "complex": [[re, im], ..]}    complex
///   {"symmetric_poly": {"3,0,0": 1, ..}}          homogeneous polynomial, optional "shape"
/// Unknown fields are ignored, so reports carrying shape/data can be read back.
struct TensorFile {
    ComplexTensor tensor;
    bool is_complex = false;
    bool from_polynomial = false;

    /// Throws InputError if any entry has a nonzero imaginary part.
    [[nodiscard]] Tensor real() const;
};

TensorFile parse_tensor(const nlohmann::json& j);
TensorFile read_tensor_file(const std::string& path);

nlohmann::json to_json(const Tensor& t);
nlohmann::json to_json(const ComplexTensor& t);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(Complex c);
nlohmann::json to_json(std::span<const Complex> v);

}  // namespace tenspect::io
