#pragma once

#include "koszulcy/pbw.hpp"
#include "koszulcy/quadratic.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace koszulcy::cli {

struct Term {
  Scalar coeff;
  std::vector<std::string> word;
  friend bool operator==(const Term&, const Term&) = default;
};

using Combination = std::vector<Term>;

struct DeformationSpec {
  std::vector<Combination> nu;  // one degree-1 combination per relation
  std::vector<Scalar> theta;
  friend bool operator==(const DeformationSpec&, const DeformationSpec&) = default;
};

// Input document. Relations are kept exactly as written so that
// parse(serialize(d)) == d.
struct AlgebraDescription {
  std::optional<std::string> name;
  std::vector<std::string> generators;
  std::vector<Combination> relations;
  std::optional<Matrix> sigma;  // row-vector convention (x_1,…,x_n)·P
  std::optional<DeformationSpec> deformation;
  bool domain = false;
  friend bool operator==(const AlgebraDescription&, const AlgebraDescription&) = default;
};

// Throws ParseError naming the line (for malformed JSON) or the field path.
AlgebraDescription parse_description(std::string_view document);

// Canonical JSON: sorted keys, two-space indent, rationals as strings.
std::string serialize(const AlgebraDescription& d);

QuadraticAlgebra to_algebra(const AlgebraDescription& d);
std::vector<Tensor> relation_tensors(const AlgebraDescription& d);
// Requires the deformation section.
PBWDeformation to_deformation(const AlgebraDescription& d, const QuadraticAlgebra& a);

// Relations written from the canonical basis of R.
AlgebraDescription describe(const QuadraticAlgebra& a);
Combination to_combination(const Tensor& t, const std::vector<std::string>& names);

}  // namespace koszulcy::cli
