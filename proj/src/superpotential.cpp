#include "koszulcy/superpotential.hpp"

#include "koszulcy/errors.hpp"
#include "koszulcy/skew.hpp"

namespace koszulcy {

namespace {

std::vector<Tensor> basis_tensors(const Subspace& s, std::size_t degree, std::size_t n) {
  std::vector<Tensor> out;
  for (const auto& row : s.basis()) {
    out.push_back(Tensor::from_sparse(row, degree, n));
  }
  return out;
}

Element coordinates_or_throw(const Subspace& s, const Tensor& t, const char* what) {
  auto c = s.coordinates(t.to_sparse());
  if (!c) {
    throw Error(std::string("superpotential does not decompose: ") + what);
  }
  return *c;
}

QuadraticAlgebra quotient_by_contractions(const Tensor& w, const std::vector<std::string>& names,
                                          bool right) {
  if (w.degree() < 2) {
    throw DimensionError("derivation quotient needs a tensor of degree at least 2");
  }
  if (names.size() != w.ambient()) {
    throw DimensionError("one name per generator required");
  }
  const std::size_t n = w.ambient();
  const std::size_t k = w.degree() - 2;
  std::vector<SparseVector> rows;
  const std::size_t words = word_count(n, k);
  for (std::size_t idx = 0; idx < words; ++idx) {
    const Tensor psi = Tensor::word(word_at(idx, k, n), n);
    rows.push_back((right ? contract_right(w, psi) : contract_left(psi, w)).to_sparse());
  }
  return {names, Subspace::span(n * n, rows)};
}

}  // namespace

TwistCheck is_twisted_superpotential(const Tensor& w, const Matrix& sigma) {
  const std::size_t d = w.degree();
  if (d < 2) {
    throw DimensionError("twisted superpotential needs degree at least 2");
  }
  std::vector<std::optional<Matrix>> maps(d);
  maps[0] = sigma;
  Tensor rhs = tau(d, d - 1, apply_slotwise(maps, w));
  if (d % 2 == 0) {
    rhs = -rhs;
  }
  TwistCheck check;
  check.defect = w - rhs;
  check.pass = check.defect.is_zero();
  return check;
}

SuperpotentialData extract_superpotential(const QuadraticAlgebra& a,
                                          const RegularityCertificate& cert, std::size_t cap) {
  const std::size_t d = cert.gldim;
  const std::size_t n = a.n();
  if (d < 2) {
    throw PreconditionError("superpotentials need global dimension at least 2");
  }
  const Subspace top = koszul_coalgebra(a, d, cap);
  if (top.dim() != 1) {
    throw PreconditionError("C_{-d} is not one-dimensional");
  }
  SuperpotentialData data;
  data.w = Tensor::from_sparse(top.basis().front(), d, n);
  data.sigma = nakayama_of_A(a, cert);
  const Subspace below = koszul_coalgebra(a, d - 1, cap);
  data.theta = basis_tensors(below, d - 1, n);

  data.m = Matrix(n, below.dim());
  data.n = Matrix(below.dim(), n);
  for (std::size_t i = 0; i < n; ++i) {
    const Tensor xi_star = Tensor::word({i}, n);
    const Element row = coordinates_or_throw(below, contract_left(xi_star, data.w), "V ⊗ C");
    for (std::size_t j = 0; j < row.size(); ++j) {
      data.m(i, j) = row[j];
    }
    const Element col = coordinates_or_throw(below, contract_right(data.w, xi_star), "C ⊗ V");
    for (std::size_t j = 0; j < col.size(); ++j) {
      data.n(j, i) = col[j];
    }
  }
  auto m_inv = try_inverse(data.m);
  if (!m_inv || !try_inverse(data.n)) {
    throw PreconditionError("superpotential matrices are singular");
  }
  const Scalar s = (d % 2 == 1) ? Scalar(1) : Scalar(-1);
  data.xi_matches_matrices = (s * (data.n.transpose() * *m_inv)) == data.sigma;

  if (!is_twisted_superpotential(data.w, data.sigma).pass) {
    throw Error("extracted tensor is not twisted by the Nakayama automorphism");
  }
  return data;
}

Tensor symmetrize(const Tensor& w, const Matrix& sigma) {
  const std::size_t d = w.degree();
  const std::size_t n = w.ambient();
  if (w.is_zero()) {
    throw PreconditionError("cannot symmetrize the zero tensor");
  }
  if (!is_twisted_superpotential(w, sigma).pass) {
    throw PreconditionError("tensor is not a twisted superpotential for this twist");
  }
  if (!(apply_all_slots(sigma, w) == w)) {
    throw PreconditionError("twisted superpotential is not invariant under the twist");
  }
  Matrix extended(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      extended(i, j) = sigma(i, j);
    }
  }
  extended(n, n) = 1;

  const Tensor zw = tensor_product(Tensor::word({n}, n + 1), w.with_ambient(n + 1));
  Tensor out(d + 1, n + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    std::vector<std::optional<Matrix>> maps(d + 1);
    for (std::size_t slot = 1; slot <= i; ++slot) {
      maps[slot] = extended;
    }
    const Tensor term = tau(d + 1, i, apply_slotwise(maps, zw));
    out += (i % 2 == 0) ? term : -term;
  }
  return out;
}

QuadraticAlgebra derivation_quotient(const Tensor& w, const std::vector<std::string>& names) {
  return quotient_by_contractions(w, names, true);
}

QuadraticAlgebra derivation_quotient_left(const Tensor& w, const std::vector<std::string>& names) {
  return quotient_by_contractions(w, names, false);
}

Thm2Report verify_thm2(const QuadraticAlgebra& a, const RegularityCertificate& cert,
                       std::size_t cap) {
  const SuperpotentialData data = extract_superpotential(a, cert, cap);
  const std::size_t d = cert.gldim;
  const std::size_t n = a.n();
  Thm2Report report;
  report.part_i = derivation_quotient(data.w, a.names()).relations() == a.relations();

  const SkewExtension skew = skew_extend(a, data.sigma);
  report.w_hat = symmetrize(data.w, data.sigma);
  report.part_ii = derivation_quotient(report.w_hat, skew.b.names()).relations() ==
                   skew.b.relations();

  const std::vector<Tensor> r = a.relation_tensors();
  const std::vector<Tensor> vartheta = basis_tensors(koszul_coalgebra(a, d - 2, cap), d - 2, n);
  const std::size_t ambient = word_count(n, d, cap);
  Matrix system(ambient, r.size() * vartheta.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < vartheta.size(); ++j) {
      system.set_column(i * vartheta.size() + j,
                        tensor_product(r[i], vartheta[j]).to_sparse().to_dense(ambient));
    }
  }
  auto solution = solve(system, data.w.to_sparse().to_dense(ambient));
  if (!solution) {
    throw Error("superpotential does not lie in R ⊗ C_{-d+2}");
  }
  report.l = Matrix(r.size(), vartheta.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < vartheta.size(); ++j) {
      report.l(i, j) = (*solution)[i * vartheta.size() + j];
    }
  }
  report.l_invertible = try_inverse(report.l).has_value();
  return report;
}

}  // namespace koszulcy
