#include "koszulcy/skew.hpp"

#include "koszulcy/errors.hpp"

#include <algorithm>

namespace koszulcy {

namespace {

bool taken(const std::vector<std::string>& names, const std::string& candidate) {
  return std::find(names.begin(), names.end(), candidate) != names.end();
}

// Value of each degree-2 word class on a fixed list of quadratic tensors.
Matrix evaluation_matrix(const TruncatedAlgebra& t, const std::vector<Tensor>& against) {
  const auto& words = t.basis_words(2);
  Matrix ev(against.size(), words.size());
  for (std::size_t r = 0; r < against.size(); ++r) {
    for (std::size_t w = 0; w < words.size(); ++w) {
      ev(r, w) = against[r].coeff(words[w]);
    }
  }
  return ev;
}

bool rows_equal(const Matrix& a, const Matrix& b) {
  return Subspace::row_space(a) == Subspace::row_space(b);
}

}  // namespace

std::string fresh_generator_name(const std::vector<std::string>& names) {
  for (const char* candidate : {"z", "t"}) {
    if (!taken(names, candidate)) {
      return candidate;
    }
  }
  for (std::size_t k = 1;; ++k) {
    std::string candidate = "z" + std::to_string(k);
    if (!taken(names, candidate)) {
      return candidate;
    }
  }
}

SkewExtension skew_extend(const QuadraticAlgebra& a, const Matrix& sigma) {
  const std::size_t n = a.n();
  if (sigma.rows() != n || sigma.cols() != n) {
    throw DimensionError("twist has the wrong size");
  }
  auto inv = try_inverse(sigma);
  if (!inv) {
    throw PreconditionError("twist is not invertible");
  }
  if (!preserves_relations(a, sigma)) {
    throw PreconditionError("twist does not preserve the relations");
  }
  SkewExtension s;
  s.base = a;
  s.sigma = sigma;
  const std::size_t z = n;
  for (const auto& r : a.relation_tensors()) {
    s.base_relations.push_back(r.with_ambient(n + 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Tensor r(2, n + 1);
    for (std::size_t k = 0; k < n; ++k) {
      r.add_term({z, k}, (*inv)(k, i));
    }
    r.add_term({i, z}, -1);
    s.rtilde.push_back(std::move(r));
  }
  std::vector<std::string> names = a.names();
  names.push_back(fresh_generator_name(names));
  std::vector<Tensor> all = s.base_relations;
  all.insert(all.end(), s.rtilde.begin(), s.rtilde.end());
  s.b = QuadraticAlgebra::from_relations(std::move(names), all);
  return s;
}

QuadraticAlgebra matrix_form_skew_presentation(const QuadraticAlgebra& a, const Dim2Form& form) {
  const std::size_t n = a.n();
  const std::size_t z = n;
  std::vector<Tensor> relations;
  for (const auto& r : a.relation_tensors()) {
    relations.push_back(r.with_ambient(n + 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Tensor r(2, n + 1);
    for (std::size_t j = 0; j < n; ++j) {
      r.add_term({z, j}, form.m(j, i));
      r.add_term({j, z}, form.m(i, j));
    }
    relations.push_back(std::move(r));
  }
  std::vector<std::string> names = a.names();
  names.push_back(fresh_generator_name(names));
  return QuadraticAlgebra::from_relations(std::move(names), relations);
}

TruncatedAlgebra finite_dual(const QuadraticAlgebra& a, std::size_t bound, std::size_t cap) {
  const KoszulCertificate koszul = numeric_koszul_certificate(a, bound, cap);
  if (!koszul.pass()) {
    throw PreconditionError("Koszul certificate fails in degree " +
                            std::to_string(koszul.passed_to() + 1));
  }
  const QuadraticAlgebra dual = quadratic_dual(a);
  const auto dims = graded_dims(dual, bound, cap);
  for (std::size_t k = 1; k < dims.size(); ++k) {
    if (dims[k] == 0) {
      return TruncatedAlgebra(dual, std::max<std::size_t>(k - 1, 1), cap);
    }
  }
  throw PreconditionError("dual algebra does not terminate by degree " + std::to_string(bound));
}

GradedFDAlgebra ext_algebra_of_skew(const QuadraticAlgebra& a, const Matrix& sigma,
                                    std::size_t bound, std::size_t cap) {
  const TruncatedAlgebra dual = finite_dual(a, bound, cap);
  const GradedFDAlgebra& e = dual.algebra();
  const GradedMap psi = dual.extend(dual_automorphism(a, inverse(sigma)));
  return twisted_bimodule_trivial_extension(e, epsilon_power(e, 1), psi, -1);
}

ExtIsoReport verify_extalg_iso(const QuadraticAlgebra& a, const Matrix& sigma, std::size_t bound,
                               std::size_t cap) {
  const std::size_t n = a.n();
  const std::size_t z = n;
  const SkewExtension skew = skew_extend(a, sigma);
  const TruncatedAlgebra dual = finite_dual(a, bound, cap);
  const GradedFDAlgebra gamma = ext_algebra_of_skew(a, sigma, bound, cap);
  const std::size_t top = gamma.length();
  const TruncatedAlgebra bdual(quadratic_dual(skew.b), top, cap);

  ExtIsoReport report;
  report.l = inverse(sigma);
  report.gamma_dims = gamma.dims();
  report.dual_dims = graded_dims(quadratic_dual(skew.b), top + 1, cap);
  std::vector<std::size_t> padded = report.gamma_dims;
  padded.push_back(0);
  report.dims_match = padded == report.dual_dims;
  if (!report.dims_match) {
    return report;
  }

  // B^!_2 ≅ R̂* by evaluation on the basis R ∪ R̃.
  std::vector<Tensor> rhat = skew.base_relations;
  rhat.insert(rhat.end(), skew.rtilde.begin(), skew.rtilde.end());
  const std::size_t m = skew.base_relations.size();
  const Matrix ev = evaluation_matrix(bdual, rhat);

  // g: (α, 0) ↦ α|_R and (0, x_i*) ↦ r̃_i*.
  const std::vector<Word> alpha_words =
      dual.algebra().length() >= 2 ? dual.basis_words(2) : std::vector<Word>{};
  Matrix g(m + n, gamma.dim(2));
  for (std::size_t w = 0; w < alpha_words.size(); ++w) {
    for (std::size_t r = 0; r < m; ++r) {
      g(r, w) = skew.base_relations[r].coeff(alpha_words[w]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    g(m + i, alpha_words.size() + i) = 1;
  }
  report.g_invertible = try_inverse(g).has_value();

  // f sends the i-th degree-one basis element of Γ to the i-th generator of
  // B^! (x_1*, …, x_n*, then z*).
  report.square_commutes = true;
  for (std::size_t p = 0; p <= n && report.square_commutes; ++p) {
    for (std::size_t q = 0; q <= n; ++q) {
      const Element in_b = ev.apply(bdual.reduce_word({p, q}));
      const Element in_gamma =
          g.apply(gamma.product(1, p, 1, q).to_dense(gamma.dim(2)));
      if (in_b != in_gamma) {
        report.square_commutes = false;
        report.square_witness = {p, q};
        break;
      }
    }
  }

  report.xz_identity = true;
  report.zx_identity = true;
  for (std::size_t i = 0; i < n; ++i) {
    Element expected_xz(m + n);
    expected_xz[m + i] = -1;
    if (ev.apply(bdual.reduce_word({i, z})) != expected_xz) {
      report.xz_identity = false;
    }
    Element expected_zx(m + n);
    for (std::size_t j = 0; j < n; ++j) {
      expected_zx[m + j] = report.l(i, j);
    }
    if (ev.apply(bdual.reduce_word({z, i})) != expected_zx) {
      report.zx_identity = false;
    }
  }

  // Words in the generators map onto both algebras with the same kernel in
  // every degree, so f extends to an isomorphism.
  report.full_isomorphism = true;
  for (std::size_t k = 1; k <= top && report.full_isomorphism; ++k) {
    const std::size_t words = word_count(n + 1, k, cap);
    Matrix x(gamma.dim(k), words);
    Matrix y(bdual.algebra().dim(k), words);
    for (std::size_t idx = 0; idx < words; ++idx) {
      const Word w = word_at(idx, k, n + 1);
      Element acc = gamma.basis_element(1, w[0]);
      for (std::size_t s = 1; s < k; ++s) {
        acc = gamma.multiply(s, acc, 1, gamma.basis_element(1, w[s]));
      }
      x.set_column(idx, acc);
      y.set_column(idx, bdual.reduce_word(w));
    }
    report.full_isomorphism = rank(x) == gamma.dim(k) && rank(y) == bdual.algebra().dim(k) &&
                              rows_equal(x, y);
  }
  return report;
}

CyVerdict cy_check_with(const QuadraticAlgebra& a, const Matrix& sigma, std::size_t bound,
                        std::size_t cap) {
  const RegularityCertificate cert = require_regular(a, bound, cap);
  CyVerdict v;
  v.sigma = sigma;
  v.xi = nakayama_of_A(a, cert);
  v.sigma_is_nakayama = sigma == v.xi;
  v.dimension = cert.gldim + 1;
  v.koszul_bound = cert.koszul_bound;

  const GradedFDAlgebra gamma = ext_algebra_of_skew(a, sigma, bound, cap);
  const SymmetryResult sym = is_graded_symmetric(gamma);
  v.is_cy = sym.symmetric;
  if (sym.witness) {
    const auto& [x, y] = *sym.witness;
    v.witness = {gamma.labels(x.first).at(x.second), gamma.labels(y.first).at(y.second)};
  }

  const SkewExtension skew = skew_extend(a, sigma);
  const TruncatedAlgebra bdual(quadratic_dual(skew.b), cert.gldim + 1, cap);
  v.dual_route_symmetric = is_graded_symmetric(bdual.algebra()).symmetric;
  if (v.dual_route_symmetric != v.is_cy) {
    throw Error("graded symmetry of the extension and of the dual of A[z;σ] disagree");
  }
  v.iso = verify_extalg_iso(a, sigma, bound, cap);
  return v;
}

CyVerdict calabi_yau_check(const QuadraticAlgebra& a, std::size_t bound, std::size_t cap) {
  const RegularityCertificate cert = require_regular(a, bound, cap);
  return cy_check_with(a, nakayama_of_A(a, cert), bound, cap);
}

}  // namespace koszulcy
