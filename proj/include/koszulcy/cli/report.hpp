#pragma once

#include "koszulcy/graded.hpp"
#include "koszulcy/linear.hpp"
#include "koszulcy/tensor.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace koszulcy::cli {

using Json = nlohmann::ordered_json;

// 64-bit FNV-1a, printed as 16 hex digits.
std::uint64_t fnv1a(std::string_view bytes);
std::string hex_digest(std::string_view bytes);

Json to_json(const Scalar& s);
Json to_json(const std::vector<Scalar>& v);
Json to_json(const Matrix& m);
// [{"coeff": "p/q", "word": [...]}, …]
Json to_json(const Tensor& t, const std::vector<std::string>& names);
// Degree-k element of a graded algebra as {label: coeff} over its nonzero entries.
Json element_json(const GradedFDAlgebra& e, std::size_t degree, const Element& x);

// Everything except "timing" is a function of the input and flags alone.
struct Report {
  Json body = Json::object();
  double elapsed_ms = 0;

  [[nodiscard]] std::string verdict_body() const;
  [[nodiscard]] std::string render() const;
};

}  // namespace koszulcy::cli
