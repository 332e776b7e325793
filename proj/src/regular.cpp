#include "koszulcy/regular.hpp"

#include "koszulcy/errors.hpp"

namespace koszulcy {

RegularityResult as_regular_certificate(const QuadraticAlgebra& a, std::size_t bound,
                                        std::size_t cap) {
  RegularityResult result;
  if (a.n() == 0) {
    result.refutation = "no generators";
    return result;
  }
  QuadraticAlgebra dual = quadratic_dual(a);
  std::vector<std::size_t> dual_dims = graded_dims(dual, bound, cap);

  std::optional<std::size_t> first_zero;
  for (std::size_t k = 1; k < dual_dims.size(); ++k) {
    if (dual_dims[k] == 0) {
      first_zero = k;
      break;
    }
  }
  if (!first_zero) {
    result.refutation = "dual algebra does not terminate by degree " + std::to_string(bound);
    return result;
  }
  const std::size_t d = *first_zero - 1;
  for (std::size_t k = *first_zero; k < dual_dims.size(); ++k) {
    if (dual_dims[k] != 0) {
      result.refutation = "dual algebra is nonzero in degree " + std::to_string(k);
      result.witness_degree = k;
      return result;
    }
  }
  if (dual_dims[d] != 1) {
    result.refutation = "top component of the dual has dimension " + std::to_string(dual_dims[d]);
    result.witness_degree = d;
    return result;
  }

  TruncatedAlgebra truncated(dual, d, cap);
  FrobeniusResult frob = frobenius_structure(truncated.algebra());
  if (!frob.structure) {
    result.refutation = "dual algebra is not Frobenius: " + frob.reason;
    result.witness_degree = frob.degenerate_degree;
    return result;
  }

  KoszulCertificate koszul = numeric_koszul_certificate(a, bound, cap);
  if (!koszul.pass()) {
    result.refutation = "Koszul certificate fails in degree " + std::to_string(koszul.passed_to() + 1);
    result.witness_degree = koszul.passed_to() + 1;
    return result;
  }

  const std::size_t reached = koszul.passed_to();
  result.certificate = RegularityCertificate{d,
                                             std::move(dual),
                                             std::move(dual_dims),
                                             std::move(truncated),
                                             std::move(*frob.structure),
                                             std::move(koszul),
                                             reached};
  return result;
}

RegularityCertificate require_regular(const QuadraticAlgebra& a, std::size_t bound,
                                      std::size_t cap) {
  RegularityResult r = as_regular_certificate(a, bound, cap);
  if (!r.certificate) {
    throw PreconditionError("algebra is not certified AS-regular: " + r.refutation);
  }
  return std::move(*r.certificate);
}

Matrix nakayama_of_A(const QuadraticAlgebra& a, const RegularityCertificate& cert) {
  const Matrix& phi = cert.dual_frobenius.nakayama.at(1);
  if (phi.rows() != a.n()) {
    throw PreconditionError("certificate does not belong to this algebra");
  }
  const Scalar s = (cert.gldim % 2 == 1) ? Scalar(1) : Scalar(-1);
  Matrix xi = s * dual_automorphism(cert.dual, inverse(phi));
  if (!preserves_relations(a, xi)) {
    throw Error("Nakayama automorphism does not preserve the relations");
  }
  return xi;
}

Dim2Form dim2_matrix_form(const QuadraticAlgebra& a, const RegularityCertificate& cert) {
  if (a.relations().dim() != 1) {
    throw PreconditionError("matrix form needs exactly one relation");
  }
  if (a.n() < 2 || cert.gldim != 2) {
    throw PreconditionError("matrix form needs an AS-regular algebra of global dimension 2");
  }
  const std::size_t n = a.n();
  const SparseVector& r = a.relations().basis().front();
  Matrix m(n, n);
  for (const auto& [idx, c] : r.entries()) {
    m(idx / n, idx % n) = c;
  }
  auto inv = try_inverse(m);
  if (!inv) {
    throw PreconditionError("relation matrix is singular");
  }
  Matrix xi = -(m.transpose() * *inv);
  return {std::move(m), std::move(xi)};
}

bool congruence_witness_check(const Matrix& m, const Matrix& m_prime, const Matrix& p,
                              const Scalar& k) {
  const std::size_t n = m.rows();
  for (const Matrix* x : {&m, &m_prime, &p}) {
    if (x->rows() != n || x->cols() != n) {
      throw DimensionError("congruence check needs square matrices of one size");
    }
  }
  if (k == 0 || !try_inverse(p)) {
    throw PreconditionError("congruence witness needs invertible P and nonzero k");
  }
  return m == k * (p * m_prime * p.transpose());
}

}  // namespace koszulcy
