#pragma once

#include "koszulcy/graded.hpp"
#include "koszulcy/quadratic.hpp"
#include "koszulcy/regular.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace koszulcy {

// U = T(V)/(r − ν(r) − θ(r) : r ∈ R), with ν and θ given on the canonical basis of R.
struct PBWDeformation {
  QuadraticAlgebra base;
  Matrix nu;                  // row r: coordinates of ν(r) in x_1, …, x_n
  std::vector<Scalar> theta;  // θ(r)

  static PBWDeformation trivial(const QuadraticAlgebra& base);
  // ν and θ given on an arbitrary basis of R.
  static PBWDeformation from_relations(const QuadraticAlgebra& base,
                                       const std::vector<Tensor>& relations,
                                       const std::vector<std::vector<Scalar>>& nu,
                                       const std::vector<Scalar>& theta);
  // ν and θ evaluated on elements of R (inverts from_relations on a basis).
  [[nodiscard]] std::vector<std::vector<Scalar>> nu_on(const std::vector<Tensor>& relations) const;
  [[nodiscard]] std::vector<Scalar> theta_on(const std::vector<Tensor>& relations) const;
};

// Graded algebra with a degree-one derivation and a curvature element.
struct Cdga {
  GradedFDAlgebra algebra;
  std::vector<Matrix> delta;  // delta[i] maps degree i to degree i + 1
  Element curvature;          // degree 2
};

Element apply_delta(const Cdga& c, std::size_t degree, const Element& x);

// The dual cdga (A^!, δ, θ) on the monomial model of A^!.
Cdga dual_cdga(const PBWDeformation& u, const TruncatedAlgebra& dual);

struct CdgaCheck {
  bool pass = true;
  std::string law;
  std::vector<std::pair<std::size_t, std::size_t>> witness;
};

CdgaCheck check_cdga_axioms(const Cdga& c);

struct LambdaData {
  Scalar varpi_scale = 1;  // ϖ as a multiple of the canonical top basis vector
  Matrix omegas;           // column j: coordinates of ω_j in degree d − 1
  std::vector<Scalar> lambdas;
};

// x_i* ω_j = δ_ij ϖ and δ(ω_i) = λ_i ϖ.
LambdaData lambda_data(const Cdga& c, const Scalar& varpi_scale = 1);

// Everything derived from a deformation over a certified AS-regular base.
struct DeformationContext {
  PBWDeformation u;
  RegularityCertificate cert;
  Matrix xi;
  Cdga cdga;
  CdgaCheck axioms;
  LambdaData lambda;
};

DeformationContext analyze_deformation(const PBWDeformation& u, std::size_t bound,
                                       std::size_t cap = kDefaultWordCap);

// ζ(x_i) = ξ(x_i) + λ_i
struct AffineMap {
  Matrix linear;
  std::vector<Scalar> constant;
};

AffineMap deformed_nakayama(const DeformationContext& ctx);

// U[z;ζ] as a deformation of A[z;ξ]: ν̂(r) = ν(r), ν̂(r̃_i) = λ_i z, θ̂(r) = θ(r), θ̂(r̃_i) = 0.
PBWDeformation skew_deformation(const DeformationContext& ctx);

// The cdga on Γ(A^!, {}_{ε^d}(A^!)*(−d−1)) transported from the dual cdga of U[z;ζ].
Cdga transported_gamma_cdga(const DeformationContext& ctx);

// Γ_cdg(E, E*(−d−1)) with the shifted dual bimodule's signs.
Cdga cdg_trivial_extension(const Cdga& e);

// ε^{d+1}φ commutes with δ and fixes θ.
bool prop4_condition(const DeformationContext& ctx);

struct DeformedCyVerdict {
  bool is_cy = false;
  std::optional<std::string> failing_element;  // basis element of degree d whose δ is nonzero
  bool b_dual_agrees = false;                  // δ_{B^!}(B^!_d) = 0 computed on B^! directly
  bool converse_applies = false;               // base recorded as a domain
  std::vector<Scalar> lambdas;
};

// Throws PreconditionError when the dual data violate the cdga axioms.
DeformedCyVerdict cy_criterion_deformed(const DeformationContext& ctx, bool domain = false,
                                        std::size_t cap = kDefaultWordCap);

struct Thm5Report {
  bool cond_i = false;
  bool cond_ii = false;
  bool cond_iii = false;
  bool equivalent = false;
  std::vector<Scalar> lambdas;
  std::vector<Scalar> lambda_m;
  std::vector<Scalar> minus_lambda_mt;
};

Thm5Report thm5_check(const DeformationContext& ctx, std::size_t cap = kDefaultWordCap);

}  // namespace koszulcy
