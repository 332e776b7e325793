#include "koszulcy/quadratic.hpp"

#include "koszulcy/errors.hpp"

#include <limits>
#include <set>

namespace koszulcy {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

std::string dual_name(const std::string& name) {
  if (!name.empty() && name.back() == '*') {
    return name.substr(0, name.size() - 1);
  }
  return name + "*";
}

// V^{⊗i} ⊗ S ⊗ V^{⊗j} for S given by basis vectors in n^s coordinates.
void embed_into(RowEchelon& echelon, const std::vector<SparseVector>& basis, std::size_t n,
                std::size_t s, std::size_t i, std::size_t j) {
  std::size_t left = 1;
  for (std::size_t t = 0; t < i; ++t) {
    left *= n;
  }
  std::size_t right = 1;
  for (std::size_t t = 0; t < j; ++t) {
    right *= n;
  }
  std::size_t middle = 1;
  for (std::size_t t = 0; t < s; ++t) {
    middle *= n;
  }
  for (std::size_t u = 0; u < left; ++u) {
    for (std::size_t v = 0; v < right; ++v) {
      for (const auto& r : basis) {
        std::vector<SparseVector::Entry> entries;
        entries.reserve(r.nonzeros());
        for (const auto& [idx, c] : r.entries()) {
          entries.emplace_back((u * middle + idx) * right + v, c);
        }
        echelon.insert(SparseVector(std::move(entries)));
      }
    }
  }
}

}  // namespace

QuadraticAlgebra::QuadraticAlgebra(std::vector<std::string> names, Subspace relations)
    : names_(std::move(names)), relations_(std::move(relations)) {
  if (relations_.ambient_dim() != n() * n()) {
    throw DimensionError("relation space must live in V⊗V");
  }
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (!seen.insert(name).second) {
      throw PreconditionError("duplicate generator name '" + name + "'");
    }
  }
}

QuadraticAlgebra QuadraticAlgebra::from_relations(std::vector<std::string> names,
                                                  const std::vector<Tensor>& relations) {
  const std::size_t n = names.size();
  std::vector<SparseVector> rows;
  for (const auto& r : relations) {
    if (r.degree() != 2) {
      throw PreconditionError("relations must be quadratic");
    }
    if (r.ambient() != n) {
      throw DimensionError("relation uses a different generator set");
    }
    rows.push_back(r.to_sparse());
  }
  return {std::move(names), Subspace::span(n * n, rows)};
}

QuadraticAlgebra QuadraticAlgebra::free(std::vector<std::string> names) {
  const std::size_t n = names.size();
  return {std::move(names), Subspace(n * n)};
}

std::vector<Tensor> QuadraticAlgebra::relation_tensors() const {
  std::vector<Tensor> out;
  for (const auto& row : relations_.basis()) {
    out.push_back(Tensor::from_sparse(row, 2, n()));
  }
  return out;
}

QuadraticAlgebra quadratic_dual(const QuadraticAlgebra& a) {
  std::vector<std::string> names;
  for (const auto& name : a.names()) {
    names.push_back(dual_name(name));
  }
  return {std::move(names), annihilator(a.relations())};
}

RowEchelon relation_degree_echelon(const QuadraticAlgebra& a, std::size_t k, std::size_t cap) {
  if (k < 2) {
    throw PreconditionError("relation_degree_subspace needs k >= 2");
  }
  const std::size_t n = a.n();
  RowEchelon echelon(word_count(n, k, cap));
  for (std::size_t i = 0; i + 2 <= k; ++i) {
    embed_into(echelon, a.relations().basis(), n, 2, i, k - i - 2);
  }
  return echelon;
}

Subspace relation_degree_subspace(const QuadraticAlgebra& a, std::size_t k, std::size_t cap) {
  return Subspace::from_echelon(relation_degree_echelon(a, k, cap));
}

std::vector<std::size_t> graded_dims(const QuadraticAlgebra& a, std::size_t max_degree,
                                     std::size_t cap) {
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    const std::size_t words = word_count(a.n(), k, cap);
    dims.push_back(k < 2 ? words : words - relation_degree_echelon(a, k, cap).rank());
  }
  return dims;
}

Subspace koszul_coalgebra(const QuadraticAlgebra& a, std::size_t m, std::size_t cap) {
  const std::size_t n = a.n();
  if (m < 2) {
    return Subspace::full(word_count(n, m, cap));
  }
  Subspace current = a.relations();
  for (std::size_t k = 3; k <= m; ++k) {
    const std::size_t ambient = word_count(n, k, cap);
    // C_{-k} = (C_{-(k−1)} ⊗ V) ∩ (V^{⊗(k−2)} ⊗ R)
    RowEchelon left(ambient);
    embed_into(left, current.basis(), n, k - 1, 0, 1);
    RowEchelon right(ambient);
    embed_into(right, a.relations().basis(), n, 2, k - 2, 0);
    current = intersect(Subspace::from_echelon(left), Subspace::from_echelon(right));
    if (current.dim() == 0) {
      // Every higher component vanishes as well.
      return Subspace(word_count(n, m, cap));
    }
  }
  return current;
}

bool KoszulCertificate::pass() const {
  for (const auto& d : degrees) {
    if (!d.pass) {
      return false;
    }
  }
  return true;
}

std::size_t KoszulCertificate::passed_to() const {
  std::size_t reached = 0;
  for (const auto& d : degrees) {
    if (!d.pass) {
      break;
    }
    reached = d.degree;
  }
  return reached;
}

KoszulCertificate numeric_koszul_certificate(const QuadraticAlgebra& a, std::size_t max_degree,
                                             std::size_t cap) {
  if (max_degree < 2) {
    throw PreconditionError("Koszul certificate needs a bound of at least 2");
  }
  const auto dims = graded_dims(a, max_degree, cap);
  const auto dual_dims = graded_dims(quadratic_dual(a), max_degree, cap);
  KoszulCertificate cert;
  cert.bound = max_degree;
  for (std::size_t m = 1; m <= max_degree; ++m) {
    KoszulDegree d;
    d.degree = m;
    d.coalgebra_dim = koszul_coalgebra(a, m, cap).dim();
    d.dual_dim = dual_dims[m];
    for (std::size_t j = 0; j <= m; ++j) {
      const long long term =
          static_cast<long long>(dims[m - j]) * static_cast<long long>(dual_dims[j]);
      d.euler_sum += (j % 2 == 0) ? term : -term;
    }
    d.pass = d.coalgebra_dim == d.dual_dim && d.euler_sum == 0;
    cert.degrees.push_back(d);
  }
  return cert;
}

bool preserves_relations(const QuadraticAlgebra& a, const Matrix& phi) {
  if (phi.rows() != a.n() || phi.cols() != a.n()) {
    throw DimensionError("degree-one map has the wrong size");
  }
  std::vector<SparseVector> images;
  for (const auto& r : a.relation_tensors()) {
    images.push_back(apply_all_slots(phi, r).to_sparse());
  }
  return Subspace::span(a.n() * a.n(), images) == a.relations();
}

Matrix dual_automorphism(const QuadraticAlgebra& a, const Matrix& phi) {
  if (!try_inverse(phi)) {
    throw PreconditionError("degree-one map is not invertible");
  }
  if (!preserves_relations(a, phi)) {
    throw PreconditionError("map does not preserve the relations");
  }
  return phi.transpose();
}

std::string word_label(const QuadraticAlgebra& a, const Word& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t letter : w) {
    out += a.names().at(letter);
  }
  return out;
}

TruncatedAlgebra::TruncatedAlgebra(const QuadraticAlgebra& a, std::size_t max_degree,
                                   std::size_t cap)
    : presentation_(a) {
  if (max_degree < 1) {
    throw PreconditionError("truncated structure needs N >= 1");
  }
  const std::size_t n = a.n();
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::string>> labels;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    const std::size_t words = word_count(n, k, cap);
    relations_.push_back(k < 2 ? RowEchelon(words) : relation_degree_echelon(a, k, cap));
    std::vector<Word> basis;
    std::vector<std::size_t> position(words, npos);
    for (std::size_t idx = 0; idx < words; ++idx) {
      if (!relations_.back().rows().contains(idx)) {
        position[idx] = basis.size();
        basis.push_back(word_at(idx, k, n));
      }
    }
    dims.push_back(basis.size());
    std::vector<std::string> l;
    for (const auto& w : basis) {
      l.push_back(word_label(a, w));
    }
    labels.push_back(std::move(l));
    basis_.push_back(std::move(basis));
    position_.push_back(std::move(position));
  }
  algebra_ = GradedFDAlgebra(dims, labels);
  for (std::size_t i = 1; i <= max_degree; ++i) {
    for (std::size_t j = 1; i + j <= max_degree; ++j) {
      for (std::size_t p = 0; p < basis_[i].size(); ++p) {
        for (std::size_t q = 0; q < basis_[j].size(); ++q) {
          Word w = basis_[i][p];
          w.insert(w.end(), basis_[j][q].begin(), basis_[j][q].end());
          algebra_.set_product(i, p, j, q, SparseVector::from_dense(reduce_word(w)));
        }
      }
    }
  }
}

const std::vector<Word>& TruncatedAlgebra::basis_words(std::size_t degree) const {
  return basis_.at(degree);
}

Element TruncatedAlgebra::reduce_word(const Word& w) const {
  return reduce(Tensor::word(w, presentation_.n()));
}

Element TruncatedAlgebra::reduce(const Tensor& t) const {
  const std::size_t k = t.degree();
  if (k > max_degree()) {
    throw DimensionError("tensor degree exceeds the truncation");
  }
  if (t.ambient() != presentation_.n()) {
    throw DimensionError("tensor uses a different generator set");
  }
  const SparseVector reduced = relations_[k].reduce(t.to_sparse());
  Element out(basis_[k].size());
  for (const auto& [idx, c] : reduced.entries()) {
    out[position_[k][idx]] = c;
  }
  return out;
}

Tensor TruncatedAlgebra::lift(std::size_t degree, const Element& x) const {
  if (x.size() != basis_.at(degree).size()) {
    throw DimensionError("element size differs from component dimension");
  }
  Tensor t(degree, presentation_.n());
  for (std::size_t p = 0; p < x.size(); ++p) {
    t.add_term(basis_[degree][p], x[p]);
  }
  return t;
}

GradedMap TruncatedAlgebra::extend(const Matrix& degree_one) const {
  if (!preserves_relations(presentation_, degree_one)) {
    throw PreconditionError("map does not preserve the relations");
  }
  GradedMap f{Matrix::identity(1)};
  for (std::size_t k = 1; k <= max_degree(); ++k) {
    Matrix m(basis_[k].size(), basis_[k].size());
    for (std::size_t p = 0; p < basis_[k].size(); ++p) {
      m.set_column(p, reduce(apply_all_slots(degree_one, Tensor::word(basis_[k][p], presentation_.n()))));
    }
    f.push_back(std::move(m));
  }
  return f;
}

TruncatedAlgebra truncated_structure(const QuadraticAlgebra& a, std::size_t max_degree,
                                     std::size_t cap) {
  return TruncatedAlgebra(a, max_degree, cap);
}

}  // namespace koszulcy
