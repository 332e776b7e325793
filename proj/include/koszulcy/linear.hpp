#pragma once

#include "koszulcy/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace koszulcy {

// Sparse coordinate vector: strictly increasing indices, no zero entries.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVector() = default;
  // Accepts entries in any order; duplicates are summed and zeros dropped.
  explicit SparseVector(std::vector<Entry> entries);

  static SparseVector unit(std::size_t index, const Scalar& coeff = 1);
  static SparseVector from_dense(const std::vector<Scalar>& dense);

  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t nonzeros() const { return entries_.size(); }
  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
  [[nodiscard]] std::size_t leading_index() const { return entries_.front().first; }
  [[nodiscard]] const Scalar& leading_coeff() const { return entries_.front().second; }
  [[nodiscard]] Scalar at(std::size_t index) const;
  [[nodiscard]] std::vector<Scalar> to_dense(std::size_t size) const;

  // this += coeff * other
  void add_scaled(const SparseVector& other, const Scalar& coeff);
  void scale(const Scalar& coeff);
  [[nodiscard]] SparseVector scaled(const Scalar& coeff) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

Scalar dot(const SparseVector& a, const SparseVector& b);

// Dense matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Scalar>& entries);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::vector<Scalar> row(std::size_t r) const;
  [[nodiscard]] std::vector<Scalar> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<Scalar>& values);

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& k, const Matrix& m);
  friend Matrix operator-(const Matrix& m);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Row vector times matrix.
std::vector<Scalar> row_times(const std::vector<Scalar>& v, const Matrix& m);

struct RrefResult {
  Matrix matrix;  // nonzero rows only
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

// Reduced row-echelon form. The returned matrix drops zero rows.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> try_inverse(const Matrix& m);
// Throws PreconditionError when singular.
Matrix inverse(const Matrix& m);

// Incrementally maintained reduced echelon basis of sparse rows.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t ambient) : ambient_(ambient) {}

  // Adds v to the span; returns true when the dimension grew.
  bool insert(SparseVector v);
  // Reduces v against the current rows (leaves only non-pivot coordinates).
  [[nodiscard]] SparseVector reduce(SparseVector v) const;

  [[nodiscard]] std::size_t ambient() const { return ambient_; }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] const std::map<std::size_t, SparseVector>& rows() const { return rows_; }

 private:
  std::size_t ambient_;
  std::map<std::size_t, SparseVector> rows_;  // keyed by pivot
};

// Subspace of a coordinate space, stored as its unique RREF row basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<SparseVector>& vectors);
  static Subspace row_space(const Matrix& m);
  static Subspace from_echelon(const RowEchelon& echelon);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<SparseVector>& basis() const { return basis_; }
  [[nodiscard]] std::vector<std::size_t> pivots() const;
  [[nodiscard]] Matrix basis_matrix() const;

  [[nodiscard]] bool contains(const SparseVector& v) const;
  // Coordinates against the canonical basis, or nullopt when v is outside.
  [[nodiscard]] std::optional<std::vector<Scalar>> coordinates(const SparseVector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<SparseVector> basis_;  // sorted by pivot
};

Subspace kernel(const Matrix& m);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// {f : f(v) = 0 for all v in a} under the coordinate dot-product pairing.
Subspace annihilator(const Subspace& a);

// Solves m x = b; nullopt when inconsistent. Returns one solution (free variables zero).
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

}  // namespace koszulcy
