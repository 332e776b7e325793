#pragma once

#include "koszulcy/linear.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace koszulcy {

// Coordinates of a homogeneous element against the basis of its degree.
using Element = std::vector<Scalar>;

// Finite-dimensional connected graded algebra given by structure constants.
class GradedFDAlgebra {
 public:
  GradedFDAlgebra() = default;
  // dims[0] must be 1. Basis element 0 of degree 0 is the unit; its products
  // are filled in automatically.
  GradedFDAlgebra(std::vector<std::size_t> dims, std::vector<std::vector<std::string>> labels);

  // Highest degree with a nonzero component.
  [[nodiscard]] std::size_t length() const;
  [[nodiscard]] std::size_t max_degree() const { return dims_.size() - 1; }
  [[nodiscard]] std::size_t dim(std::size_t degree) const;
  [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }
  [[nodiscard]] const std::vector<std::string>& labels(std::size_t degree) const;
  [[nodiscard]] std::size_t total_dim() const;

  void set_product(std::size_t i, std::size_t a, std::size_t j, std::size_t b, SparseVector value);
  // Product of basis elements; empty when i + j exceeds max_degree().
  [[nodiscard]] const SparseVector& product(std::size_t i, std::size_t a, std::size_t j,
                                            std::size_t b) const;
  [[nodiscard]] Element multiply(std::size_t i, const Element& x, std::size_t j,
                                 const Element& y) const;
  [[nodiscard]] Element basis_element(std::size_t degree, std::size_t index) const;
  [[nodiscard]] Element zero(std::size_t degree) const { return Element(dim(degree)); }

  friend bool operator==(const GradedFDAlgebra&, const GradedFDAlgebra&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::vector<std::string>> labels_;
  // products_[i][j][a * dim(j) + b]
  std::vector<std::vector<std::vector<SparseVector>>> products_;
};

// Where an algebra law fails: basis indices (degree, index) of the operands.
struct LawViolation {
  std::string law;
  std::vector<std::pair<std::size_t, std::size_t>> operands;
};

std::optional<LawViolation> check_unit(const GradedFDAlgebra& e);
std::optional<LawViolation> check_associative(const GradedFDAlgebra& e);

// Degree-preserving linear map, one matrix per degree; column b holds the
// image of basis element b.
using GradedMap = std::vector<Matrix>;

GradedMap identity_map(const GradedFDAlgebra& e);
// ε^k: multiplication by (−1)^{ik} on degree i.
GradedMap epsilon_power(const GradedFDAlgebra& e, long k);
GradedMap compose(const GradedMap& f, const GradedMap& g);  // f ∘ g
GradedMap inverse(const GradedMap& f);
Element apply(const GradedMap& f, std::size_t degree, const Element& x);
// Multiplicative, unital and invertible in every degree.
std::optional<LawViolation> check_automorphism(const GradedFDAlgebra& e, const GradedMap& f);

struct FrobeniusStructure {
  // pairing[i](a, b) = ⟨e_{i,a}, e_{d−i,b}⟩ = coefficient of the top basis vector in the product.
  std::vector<Matrix> pairing;
  // ⟨x, y⟩ = ⟨y, φ(x)⟩
  GradedMap nakayama;
};

struct FrobeniusResult {
  std::optional<FrobeniusStructure> structure;
  std::optional<std::size_t> degenerate_degree;
  std::string reason;
};

FrobeniusResult frobenius_structure(const GradedFDAlgebra& e);

struct SymmetryResult {
  bool symmetric = false;
  // The second route: φ = ε^{d−1}.
  bool nakayama_is_epsilon = false;
  // A pair (x in degree i, y in degree d−i) violating the sign identity.
  std::optional<std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>>
      witness;
};

// Throws PreconditionError when e is not Frobenius, and Error when the two
// routes disagree.
SymmetryResult is_graded_symmetric(const GradedFDAlgebra& e);

// Γ(E, {}_λ E*_ρ(−n)): E ⊕ E* with E*_{n−k}'s dual sitting in degree k.
// (x1, f1)(x2, f2) = (x1 x2, λ(x1)·f2 + f1·ρ(x2)) for the actions
// (x·f)(m) = f(m x) and (f·y)(m) = f(y m).
GradedFDAlgebra dual_trivial_extension(const GradedFDAlgebra& e, const GradedMap& left,
                                       const GradedMap& right, std::size_t n);

// Γ(E, σ, n) = Γ(E, E*_σ(−n)).
GradedFDAlgebra trivial_extension(const GradedFDAlgebra& e, const GradedMap& sigma, std::size_t n);

// Γ(E, {}_λ E_ρ(shift)) with shift ≤ −1: m in E_j sits in degree j − shift and
// (x1, m1)(x2, m2) = (x1 x2, λ(x1) m2 + m1 ρ(x2)).
GradedFDAlgebra twisted_bimodule_trivial_extension(const GradedFDAlgebra& e, const GradedMap& left,
                                                   const GradedMap& right, long shift);

}  // namespace koszulcy
