#pragma once

#include "koszulcy/graded.hpp"
#include "koszulcy/linear.hpp"
#include "koszulcy/tensor.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace koszulcy {

inline constexpr std::size_t kDefaultWordCap = 10'000;

// T(V)/(R) with R ⊆ V⊗V in coordinates ordered lexicographically by (i, j).
class QuadraticAlgebra {
 public:
  QuadraticAlgebra() = default;
  QuadraticAlgebra(std::vector<std::string> names, Subspace relations);

  static QuadraticAlgebra from_relations(std::vector<std::string> names,
                                         const std::vector<Tensor>& relations);
  static QuadraticAlgebra free(std::vector<std::string> names);

  [[nodiscard]] std::size_t n() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] const Subspace& relations() const { return relations_; }
  // Canonical relation basis as degree-2 tensors.
  [[nodiscard]] std::vector<Tensor> relation_tensors() const;

  friend bool operator==(const QuadraticAlgebra&, const QuadraticAlgebra&) = default;

 private:
  std::vector<std::string> names_;
  Subspace relations_;
};

// T(V*)/(R^⊥) under (f⊗g)(x⊗y) = f(x)g(y). Generator names gain or lose a
// trailing '*'.
QuadraticAlgebra quadratic_dual(const QuadraticAlgebra& a);

// Σ_i V^{⊗i}⊗R⊗V^{⊗(k−i−2)} inside V^{⊗k}.
Subspace relation_degree_subspace(const QuadraticAlgebra& a, std::size_t k,
                                  std::size_t cap = kDefaultWordCap);
RowEchelon relation_degree_echelon(const QuadraticAlgebra& a, std::size_t k,
                                   std::size_t cap = kDefaultWordCap);

std::vector<std::size_t> graded_dims(const QuadraticAlgebra& a, std::size_t max_degree,
                                     std::size_t cap = kDefaultWordCap);

// C_{-m} = ⋂_i V^{⊗i}⊗R⊗V^{⊗(m−i−2)}.
Subspace koszul_coalgebra(const QuadraticAlgebra& a, std::size_t m,
                          std::size_t cap = kDefaultWordCap);

struct KoszulDegree {
  std::size_t degree = 0;
  std::size_t coalgebra_dim = 0;  // dim C_{-m}
  std::size_t dual_dim = 0;       // dim (A^!)_m
  long long euler_sum = 0;        // Σ_{i+j=m} (−1)^j dim A_i dim (A^!)_j
  bool pass = false;
};

// Necessary conditions for Koszulity checked degree by degree. Passing is a
// bounded-degree certificate only.
struct KoszulCertificate {
  std::size_t bound = 0;
  std::vector<KoszulDegree> degrees;  // degrees 1..bound
  [[nodiscard]] bool pass() const;
  // Largest m such that every degree up to m passes.
  [[nodiscard]] std::size_t passed_to() const;
};

KoszulCertificate numeric_koszul_certificate(const QuadraticAlgebra& a, std::size_t max_degree,
                                             std::size_t cap = kDefaultWordCap);

// (φ⊗φ)(R) = R.
bool preserves_relations(const QuadraticAlgebra& a, const Matrix& phi);

// The automorphism of A^! dual to φ: its matrix is φᵗ. Contravariant:
// (φψ)^! = ψ^!φ^!.
Matrix dual_automorphism(const QuadraticAlgebra& a, const Matrix& phi);

// Monomial model of A in degrees 0..N: the basis of degree k is the set of
// words that are not pivots of relation_degree_subspace(A, k).
class TruncatedAlgebra {
 public:
  TruncatedAlgebra(const QuadraticAlgebra& a, std::size_t max_degree,
                   std::size_t cap = kDefaultWordCap);

  [[nodiscard]] const QuadraticAlgebra& presentation() const { return presentation_; }
  [[nodiscard]] const GradedFDAlgebra& algebra() const { return algebra_; }
  [[nodiscard]] std::size_t max_degree() const { return basis_.size() - 1; }
  [[nodiscard]] const std::vector<Word>& basis_words(std::size_t degree) const;

  // Class of a tensor of degree ≤ N in the monomial basis.
  [[nodiscard]] Element reduce(const Tensor& t) const;
  [[nodiscard]] Element reduce_word(const Word& w) const;
  // Sum of basis words with the given coordinates.
  [[nodiscard]] Tensor lift(std::size_t degree, const Element& x) const;

  // Extension of a degree-one map preserving R to all degrees.
  [[nodiscard]] GradedMap extend(const Matrix& degree_one) const;

 private:
  QuadraticAlgebra presentation_;
  std::vector<RowEchelon> relations_;
  std::vector<std::vector<Word>> basis_;
  std::vector<std::vector<std::size_t>> position_;  // word index -> basis position or npos
  GradedFDAlgebra algebra_;
};

TruncatedAlgebra truncated_structure(const QuadraticAlgebra& a, std::size_t max_degree,
                                     std::size_t cap = kDefaultWordCap);

std::string word_label(const QuadraticAlgebra& a, const Word& w);

}  // namespace koszulcy
