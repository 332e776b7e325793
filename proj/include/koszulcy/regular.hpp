#pragma once

#include "koszulcy/graded.hpp"
#include "koszulcy/quadratic.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace koszulcy {

struct RegularityCertificate {
  std::size_t gldim = 0;
  QuadraticAlgebra dual;
  std::vector<std::size_t> dual_dims;  // degrees 0..bound
  TruncatedAlgebra dual_algebra;       // A^! in degrees 0..gldim
  FrobeniusStructure dual_frobenius;
  KoszulCertificate koszul;
  std::size_t koszul_bound = 0;
};

struct RegularityResult {
  std::optional<RegularityCertificate> certificate;
  std::string refutation;
  std::optional<std::size_t> witness_degree;
};

// AS-regularity through Koszulity (to the bound) plus the Frobenius property
// of A^!.
RegularityResult as_regular_certificate(const QuadraticAlgebra& a, std::size_t bound,
                                        std::size_t cap = kDefaultWordCap);
// Throws PreconditionError carrying the refutation when A is not certified.
RegularityCertificate require_regular(const QuadraticAlgebra& a, std::size_t bound,
                                      std::size_t cap = kDefaultWordCap);

// ξ = ε^{d+1} φ^{-1} restricted to V, where φ is the Nakayama automorphism of A^!.
Matrix nakayama_of_A(const QuadraticAlgebra& a, const RegularityCertificate& cert);

struct Dim2Form {
  Matrix m;   // the relation is (x_1,…,x_n) M (x_1,…,x_n)ᵗ
  Matrix xi;  // −MᵗM^{-1}
};

Dim2Form dim2_matrix_form(const QuadraticAlgebra& a, const RegularityCertificate& cert);

// M = k P M' Pᵗ
bool congruence_witness_check(const Matrix& m, const Matrix& m_prime, const Matrix& p,
                              const Scalar& k);

}  // namespace koszulcy
