#include "koszulcy/linear.hpp"

#include "koszulcy/errors.hpp"

#include <algorithm>

namespace koszulcy {

// ---------------------------------------------------------------------------
// SparseVector

SparseVector::SparseVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& [index, coeff] : entries) {
    if (!entries_.empty() && entries_.back().first == index) {
      entries_.back().second += coeff;
      if (entries_.back().second == 0) {
        entries_.pop_back();
      }
    } else if (coeff != 0) {
      entries_.emplace_back(index, std::move(coeff));
    }
  }
}

SparseVector SparseVector::unit(std::size_t index, const Scalar& coeff) {
  SparseVector v;
  if (coeff != 0) {
    v.entries_.emplace_back(index, coeff);
  }
  return v;
}

SparseVector SparseVector::from_dense(const std::vector<Scalar>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) {
      v.entries_.emplace_back(i, dense[i]);
    }
  }
  return v;
}

Scalar SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) {
    return it->second;
  }
  return 0;
}

std::vector<Scalar> SparseVector::to_dense(std::size_t size) const {
  std::vector<Scalar> out(size);
  for (const auto& [index, coeff] : entries_) {
    if (index >= size) {
      throw DimensionError("sparse vector index exceeds dense size");
    }
    out[index] = coeff;
  }
  return out;
}

void SparseVector::add_scaled(const SparseVector& other, const Scalar& coeff) {
  if (coeff == 0 || other.empty()) {
    return;
  }
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, coeff * b->second);
      ++b;
    } else {
      Scalar value = a->second + coeff * b->second;
      if (value != 0) {
        merged.emplace_back(a->first, std::move(value));
      }
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Scalar& coeff) {
  if (coeff == 0) {
    entries_.clear();
    return;
  }
  for (auto& entry : entries_) {
    entry.second *= coeff;
  }
}

SparseVector SparseVector::scaled(const Scalar& coeff) const {
  SparseVector out = *this;
  out.scale(coeff);
  return out;
}

Scalar dot(const SparseVector& a, const SparseVector& b) {
  Scalar total = 0;
  auto i = a.entries().begin();
  auto j = b.entries().begin();
  while (i != a.entries().end() && j != b.entries().end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      total += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    m(i, i) = entries[i];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) {
    return {};
  }
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw DimensionError("ragged matrix rows");
    }
    for (std::size_t c = 0; c < m.cols_; ++c) {
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r] = (*this)(r, c);
  }
  return out;
}

void Matrix::set_column(std::size_t c, const std::vector<Scalar>& values) {
  if (values.size() != rows_) {
    throw DimensionError("column length mismatch");
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    (*this)(r, c) = values[r];
  }
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s == 0; });
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) {
    throw DimensionError("matrix-vector size mismatch");
  }
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] != 0) {
        out[r] += (*this)(r, c) * v[c];
      }
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw DimensionError("matrix product size mismatch");
  }
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw DimensionError("matrix sum size mismatch");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) {
    out.data_[i] += b.data_[i];
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Scalar& k, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.data_) {
    x *= k;
  }
  return out;
}

Matrix operator-(const Matrix& m) { return Scalar(-1) * m; }

std::vector<Scalar> row_times(const std::vector<Scalar>& v, const Matrix& m) {
  return m.transpose().apply(v);
}

// ---------------------------------------------------------------------------
// Dense elimination

RrefResult rref(const Matrix& m) {
  Matrix work = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < work.cols() && lead_row < work.rows(); ++col) {
    std::size_t pick = lead_row;
    while (pick < work.rows() && work(pick, col) == 0) {
      ++pick;
    }
    if (pick == work.rows()) {
      continue;
    }
    if (pick != lead_row) {
      for (std::size_t c = 0; c < work.cols(); ++c) {
        std::swap(work(pick, c), work(lead_row, c));
      }
    }
    const Scalar inv = 1 / work(lead_row, col);
    for (std::size_t c = col; c < work.cols(); ++c) {
      work(lead_row, c) *= inv;
    }
    for (std::size_t r = 0; r < work.rows(); ++r) {
      if (r == lead_row || work(r, col) == 0) {
        continue;
      }
      const Scalar factor = work(r, col);
      for (std::size_t c = col; c < work.cols(); ++c) {
        work(r, c) -= factor * work(lead_row, c);
      }
    }
    pivots.push_back(col);
    ++lead_row;
  }
  RrefResult result;
  result.rank = pivots.size();
  result.pivots = std::move(pivots);
  result.matrix = Matrix(result.rank, m.cols());
  for (std::size_t r = 0; r < result.rank; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      result.matrix(r, c) = work(r, c);
    }
  }
  return result;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Matrix> try_inverse(const Matrix& m) {
  if (!m.is_square()) {
    return std::nullopt;
  }
  const std::size_t n = m.rows();
  if (n == 0) {
    return Matrix();
  }
  Matrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      augmented(r, c) = m(r, c);
    }
    augmented(r, n + r) = 1;
  }
  RrefResult reduced = rref(augmented);
  if (reduced.rank < n || reduced.pivots[n - 1] != n - 1) {
    return std::nullopt;
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      inv(r, c) = reduced.matrix(r, n + c);
    }
  }
  return inv;
}

Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) {
    throw PreconditionError("matrix is singular");
  }
  return *inv;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
  if (b.size() != m.rows()) {
    throw DimensionError("right-hand side length mismatch");
  }
  Matrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      augmented(r, c) = m(r, c);
    }
    augmented(r, m.cols()) = b[r];
  }
  RrefResult reduced = rref(augmented);
  if (!reduced.pivots.empty() && reduced.pivots.back() == m.cols()) {
    return std::nullopt;
  }
  std::vector<Scalar> x(m.cols());
  for (std::size_t r = 0; r < reduced.rank; ++r) {
    x[reduced.pivots[r]] = reduced.matrix(r, m.cols());
  }
  return x;
}

// ---------------------------------------------------------------------------
// Sparse echelon

SparseVector RowEchelon::reduce(SparseVector v) const {
  std::vector<SparseVector::Entry> hits;
  for (const auto& entry : v.entries()) {
    if (rows_.contains(entry.first)) {
      hits.push_back(entry);
    }
  }
  // Rows vanish on every other pivot, so the pivot coefficients of v are
  // unaffected by eliminating one another.
  for (const auto& [pivot, coeff] : hits) {
    v.add_scaled(rows_.at(pivot), -coeff);
  }
  return v;
}

bool RowEchelon::insert(SparseVector v) {
  for (const auto& entry : v.entries()) {
    if (entry.first >= ambient_) {
      throw DimensionError("vector index exceeds ambient dimension");
    }
  }
  v = reduce(std::move(v));
  if (v.empty()) {
    return false;
  }
  v.scale(1 / v.leading_coeff());
  const std::size_t pivot = v.leading_index();
  for (auto& [p, row] : rows_) {
    const Scalar c = row.at(pivot);
    if (c != 0) {
      row.add_scaled(v, -c);
    }
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(SparseVector::unit(i));
  }
  return s;
}

Subspace Subspace::from_echelon(const RowEchelon& echelon) {
  Subspace s(echelon.ambient());
  s.basis_.reserve(echelon.rank());
  for (const auto& [pivot, row] : echelon.rows()) {
    s.basis_.push_back(row);
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<SparseVector>& vectors) {
  RowEchelon echelon(ambient);
  for (const auto& v : vectors) {
    echelon.insert(v);
  }
  return from_echelon(echelon);
}

Subspace Subspace::row_space(const Matrix& m) {
  std::vector<SparseVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows.push_back(SparseVector::from_dense(m.row(r)));
  }
  return span(m.cols(), rows);
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(basis_.size());
  for (const auto& row : basis_) {
    out.push_back(row.leading_index());
  }
  return out;
}

Matrix Subspace::basis_matrix() const {
  Matrix m(basis_.size(), ambient_);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    for (const auto& [c, value] : basis_[r].entries()) {
      m(r, c) = value;
    }
  }
  return m;
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const SparseVector& v) const {
  std::vector<Scalar> coords(basis_.size());
  SparseVector rebuilt;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    coords[i] = v.at(basis_[i].leading_index());
    rebuilt.add_scaled(basis_[i], coords[i]);
  }
  if (!(rebuilt == v)) {
    return std::nullopt;
  }
  return coords;
}

bool Subspace::contains(const SparseVector& v) const { return coordinates(v).has_value(); }

Subspace kernel(const Matrix& m) { return annihilator(Subspace::row_space(m)); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionError("subspace sum: ambient dimensions differ");
  }
  std::vector<SparseVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

Subspace annihilator(const Subspace& a) {
  const std::size_t n = a.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : a.pivots()) {
    is_pivot[p] = true;
  }
  std::vector<SparseVector> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) {
      continue;
    }
    std::vector<SparseVector::Entry> entries{{j, Scalar(1)}};
    for (const auto& row : a.basis()) {
      const Scalar c = row.at(j);
      if (c != 0) {
        entries.emplace_back(row.leading_index(), -c);
      }
    }
    out.emplace_back(std::move(entries));
  }
  return Subspace::span(n, out);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionError("subspace intersection: ambient dimensions differ");
  }
  return annihilator(sum(annihilator(a), annihilator(b)));
}

}  // namespace koszulcy
