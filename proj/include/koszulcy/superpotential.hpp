#pragma once

#include "koszulcy/quadratic.hpp"
#include "koszulcy/regular.hpp"
#include "koszulcy/tensor.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace koszulcy {

struct TwistCheck {
  bool pass = false;
  Tensor defect;  // w − (−1)^{d−1} τ_d^{d−1}(σ⊗1^{⊗d−1})(w)
};

TwistCheck is_twisted_superpotential(const Tensor& w, const Matrix& sigma);

struct SuperpotentialData {
  Tensor w;                    // canonical basis vector of C_{-d}
  Matrix sigma;                // ξ restricted to V
  std::vector<Tensor> theta;   // canonical basis of C_{-d+1}
  Matrix m;                    // w = (x) M (θ)ᵗ
  Matrix n;                    // w = (θ) N (x)ᵗ
  bool xi_matches_matrices = false;  // ξ = (−1)^{d+1} Nᵗ M^{-1}
};

SuperpotentialData extract_superpotential(const QuadraticAlgebra& a,
                                          const RegularityCertificate& cert,
                                          std::size_t cap = kDefaultWordCap);

// ŵ = Σ_i (−1)^i τ_{d+1}^i (1⊗σ^{⊗i}⊗1^{⊗d−i})(z⊗w), with z the new last generator.
Tensor symmetrize(const Tensor& w, const Matrix& sigma);

// T(V)/(span{[wΨ]}) over all dual words Ψ of length deg w − 2.
QuadraticAlgebra derivation_quotient(const Tensor& w, const std::vector<std::string>& names);
// The same with left contractions [Ψw].
QuadraticAlgebra derivation_quotient_left(const Tensor& w, const std::vector<std::string>& names);

struct Thm2Report {
  bool part_i = false;   // A ≅ A(w)
  bool part_ii = false;  // A[z;ξ] ≅ A(ŵ)
  Matrix l;              // w = (r) L (ϑ)ᵗ
  bool l_invertible = false;
  Tensor w_hat;
};

Thm2Report verify_thm2(const QuadraticAlgebra& a, const RegularityCertificate& cert,
                       std::size_t cap = kDefaultWordCap);

}  // namespace koszulcy
