#pragma once

#include "koszulcy/graded.hpp"
#include "koszulcy/quadratic.hpp"
#include "koszulcy/regular.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace koszulcy {

// A[z;σ] = T(V ⊕ kz)/(R ⊕ R̃), r̃_i = z⊗σ^{-1}(x_i) − x_i⊗z. z is the last generator.
struct SkewExtension {
  QuadraticAlgebra base;
  Matrix sigma;
  QuadraticAlgebra b;
  std::vector<Tensor> base_relations;  // canonical basis of R over V ⊕ kz
  std::vector<Tensor> rtilde;
};

// "z" unless taken, then "t", then "z1", "z2", …
std::string fresh_generator_name(const std::vector<std::string>& names);

SkewExtension skew_extend(const QuadraticAlgebra& a, const Matrix& sigma);

// Global dimension 2 presentation from the relation matrix:
// Mᵗ (z x_1, …, z x_n)ᵗ = −M (x_1 z, …, x_n z)ᵗ together with R.
QuadraticAlgebra matrix_form_skew_presentation(const QuadraticAlgebra& a, const Dim2Form& form);

// A^! as a finite-dimensional algebra; requires the Koszul certificate to pass
// and the dual to terminate within the bound.
TruncatedAlgebra finite_dual(const QuadraticAlgebra& a, std::size_t bound,
                             std::size_t cap = kDefaultWordCap);

// Γ(A^!, {}_ε A^!_ψ(−1)) with ψ = (σ^{-1})^!.
GradedFDAlgebra ext_algebra_of_skew(const QuadraticAlgebra& a, const Matrix& sigma,
                                    std::size_t bound, std::size_t cap = kDefaultWordCap);

struct ExtIsoReport {
  std::vector<std::size_t> gamma_dims;
  std::vector<std::size_t> dual_dims;  // of B^!, one degree past the top
  bool dims_match = false;
  bool g_invertible = false;
  bool square_commutes = false;
  std::optional<std::pair<std::size_t, std::size_t>> square_witness;  // degree-1 basis pair
  bool xz_identity = false;  // x_i*·z* = −r̃_i*
  bool zx_identity = false;  // z*·x_i* = Σ_j l_ij r̃_j*
  Matrix l;                  // σ^{-1}
  bool full_isomorphism = false;
  [[nodiscard]] bool pass() const {
    return dims_match && g_invertible && square_commutes && xz_identity && zx_identity &&
           full_isomorphism;
  }
};

ExtIsoReport verify_extalg_iso(const QuadraticAlgebra& a, const Matrix& sigma, std::size_t bound,
                               std::size_t cap = kDefaultWordCap);

struct CyVerdict {
  Matrix sigma;
  Matrix xi;
  bool sigma_is_nakayama = false;
  std::size_t dimension = 0;
  bool is_cy = false;
  // Graded symmetry read directly off B^! (must agree with is_cy).
  bool dual_route_symmetric = false;
  std::optional<std::pair<std::string, std::string>> witness;
  ExtIsoReport iso;
  std::size_t koszul_bound = 0;
};

// Calabi-Yau verdict for A[z;σ] through graded symmetry of its Ext algebra.
CyVerdict cy_check_with(const QuadraticAlgebra& a, const Matrix& sigma, std::size_t bound,
                        std::size_t cap = kDefaultWordCap);
// σ = ξ, the Nakayama automorphism of A.
CyVerdict calabi_yau_check(const QuadraticAlgebra& a, std::size_t bound,
                           std::size_t cap = kDefaultWordCap);

}  // namespace koszulcy
