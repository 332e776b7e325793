#pragma once

#include "koszulcy/linear.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace koszulcy {

using Word = std::vector<std::size_t>;

// Coordinate of a word in the lexicographically ordered basis of V^{⊗d}.
std::size_t word_index(const Word& word, std::size_t n);
Word word_at(std::size_t index, std::size_t degree, std::size_t n);
// n^degree, throwing ResourceGuardError past `cap`.
std::size_t word_count(std::size_t n, std::size_t degree, std::size_t cap = 1'000'000);

// Homogeneous element of V^{⊗d} (or of (V*)^{⊗d}: same representation).
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::size_t degree, std::size_t ambient) : degree_(degree), ambient_(ambient) {}

  static Tensor word(const Word& w, std::size_t ambient, const Scalar& coeff = 1);
  static Tensor from_sparse(const SparseVector& v, std::size_t degree, std::size_t ambient);

  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] std::size_t ambient() const { return ambient_; }
  [[nodiscard]] const std::map<Word, Scalar>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Scalar coeff(const Word& w) const;

  void add_term(const Word& w, const Scalar& coeff);
  [[nodiscard]] SparseVector to_sparse() const;
  // Same words regarded in a larger generator set.
  [[nodiscard]] Tensor with_ambient(std::size_t ambient) const;

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Scalar& k, const Tensor& t);
  friend Tensor operator-(const Tensor& t) { return Scalar(-1) * t; }
  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  void check_compatible(const Tensor& other) const;

  std::size_t degree_ = 0;
  std::size_t ambient_ = 0;
  std::map<Word, Scalar> terms_;
};

Tensor tensor_product(const Tensor& a, const Tensor& b);

// τ_d^k: moves the first tensor factor to position k+1.
Tensor tau(std::size_t d, std::size_t k, const Tensor& t);
// Swaps the factors in positions pos and pos+1.
Tensor swap_adjacent(std::size_t pos, const Tensor& t);

// One linear map per slot (nullopt = identity). A map's matrix has one column
// per source generator holding the coordinates of its image, so
// σ(x_1,…,x_n) = (x_1,…,x_n)·P means σ(x_j) = Σ_i P(i,j) x_i.
Tensor apply_slotwise(const std::vector<std::optional<Matrix>>& maps, const Tensor& t);
Tensor apply_all_slots(const Matrix& map, const Tensor& t);

// [Ψu]: Ψ evaluated on the first k factors of u.
Tensor contract_left(const Tensor& psi, const Tensor& u);
// [uΨ]: Ψ evaluated on the last k factors of u.
Tensor contract_right(const Tensor& u, const Tensor& psi);

}  // namespace koszulcy
