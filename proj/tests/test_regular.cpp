#include "fixtures.hpp"

#include "koszulcy/errors.hpp"

#include <gtest/gtest.h>

using namespace koszulcy;
using fixtures::rel;

namespace {

// −MᵗM^{-1}
Matrix matrix_route(const Matrix& m) { return -(m.transpose() * inverse(m)); }

}  // namespace

TEST(Regularity, Certificates) {
  for (const auto& [name, a] : fixtures::d2_bases()) {
    const auto r = as_regular_certificate(a, 5);
    ASSERT_TRUE(r.certificate) << name << ": " << r.refutation;
    EXPECT_EQ(r.certificate->gldim, 2u);
    EXPECT_EQ(r.certificate->dual_dims, (std::vector<std::size_t>{1, 2, 1, 0, 0, 0}));
    EXPECT_EQ(r.certificate->koszul_bound, 5u);
  }
  for (const auto& [name, a] : fixtures::d3_bases()) {
    const auto r = as_regular_certificate(a, 5);
    ASSERT_TRUE(r.certificate) << name << ": " << r.refutation;
    EXPECT_EQ(r.certificate->gldim, 3u);
    EXPECT_EQ(r.certificate->dual_dims, (std::vector<std::size_t>{1, 3, 3, 1, 0, 0}));
  }
}

TEST(Regularity, MonomialRefutation) {
  // T(x,y)/(xy): A^! = T(x*,y*)/(x*x*, y*x*, y*y*) has dims (1,2,1,0,…) with
  // top x*y*, but x* pairs to zero with every degree-1 element.
  const auto a = QuadraticAlgebra::from_relations({"x", "y"}, {Tensor::word({0, 1}, 2)});
  EXPECT_EQ(graded_dims(quadratic_dual(a), 4), (std::vector<std::size_t>{1, 2, 1, 0, 0}));
  const auto r = as_regular_certificate(a, 5);
  EXPECT_FALSE(r.certificate);
  EXPECT_EQ(r.witness_degree, std::optional<std::size_t>(1));
  EXPECT_FALSE(r.refutation.empty());
  EXPECT_THROW(require_regular(a, 5), PreconditionError);
}

TEST(Regularity, NonTerminatingDual) {
  const auto free = QuadraticAlgebra::free({"x", "y"});
  const auto r = as_regular_certificate(free, 4);
  // The free algebra has A^! = k ⊕ V*: length 1 but a 2-dimensional top.
  EXPECT_FALSE(r.certificate);
  const auto poly = QuadraticAlgebra::from_relations({"x", "y"}, {Tensor::word({0, 0}, 2)});
  EXPECT_FALSE(as_regular_certificate(poly, 4).certificate);
}

TEST(Nakayama, Examples) {
  const auto check = [](const QuadraticAlgebra& a, const Matrix& expected) {
    const auto cert = require_regular(a, 5);
    const Matrix xi = nakayama_of_A(a, cert);
    EXPECT_EQ(xi, expected);
    EXPECT_TRUE(preserves_relations(a, xi));
  };
  check(fixtures::kxy(), Matrix::identity(2));
  check(fixtures::quantum_plane(2), Matrix::diagonal({2, Scalar(1, 2)}));
  check(fixtures::jordan(), Matrix::from_rows({{1, -2}, {0, 1}}));
}

TEST(Dim2Form, Examples) {
  auto form = dim2_matrix_form(fixtures::kxy(), require_regular(fixtures::kxy(), 5));
  EXPECT_EQ(form.m, Matrix::from_rows({{0, 1}, {-1, 0}}));
  EXPECT_EQ(form.xi, Matrix::identity(2));

  const auto qp = fixtures::quantum_plane(2);
  form = dim2_matrix_form(qp, require_regular(qp, 5));
  EXPECT_EQ(form.m, Matrix::from_rows({{0, 1}, {-2, 0}}));
  EXPECT_EQ(form.xi, Matrix::diagonal({2, Scalar(1, 2)}));

  const auto sq = fixtures::two_gen({{1, {0, 0}}, {1, {1, 1}}});
  form = dim2_matrix_form(sq, require_regular(sq, 5));
  EXPECT_EQ(form.m, Matrix::identity(2));
  EXPECT_EQ(form.xi, -Matrix::identity(2));

  // The Jordan matrix is stored against the canonical relation xx − xy + yx.
  const auto j = fixtures::jordan();
  form = dim2_matrix_form(j, require_regular(j, 5));
  EXPECT_EQ(matrix_route(Matrix::from_rows({{-1, 1}, {-1, 0}})), form.xi);

  const auto d3 = fixtures::d3_bases()[0].a;
  EXPECT_THROW(dim2_matrix_form(d3, require_regular(d3, 5)), PreconditionError);
}

TEST(Nakayama, TwoRoutesAgree) {
  for (const auto& [name, a] : fixtures::d2_bases()) {
    const auto cert = require_regular(a, 5);
    const auto form = dim2_matrix_form(a, cert);
    EXPECT_EQ(form.xi, matrix_route(form.m)) << name;
    EXPECT_EQ(form.xi, nakayama_of_A(a, cert)) << name;
  }
}

TEST(Nakayama, CorpusProperties) {
  for (const auto& [name, a] : fixtures::regular_corpus()) {
    const auto cert = require_regular(a, 5);
    const Matrix xi = nakayama_of_A(a, cert);
    EXPECT_TRUE(preserves_relations(a, xi)) << name;
    const auto& e = cert.dual_algebra.algebra();
    const GradedMap eps = epsilon_power(e, 1);
    const GradedMap& phi = cert.dual_frobenius.nakayama;
    EXPECT_EQ(compose(phi, eps), compose(eps, phi)) << name;
    // ξ = id forces A^! to be graded symmetric, and conversely here.
    EXPECT_EQ(xi == Matrix::identity(a.n()), is_graded_symmetric(e).symmetric) << name;
  }
}

TEST(Nakayama, ScaleInvariance) {
  // Rescaling the relation changes M but not ξ.
  const auto a = fixtures::two_gen({{3, {0, 1}}, {-6, {1, 0}}});
  EXPECT_EQ(nakayama_of_A(a, require_regular(a, 5)), Matrix::diagonal({2, Scalar(1, 2)}));
}

TEST(Congruence, Examples) {
  const Matrix m = Matrix::from_rows({{0, 1}, {-1, 0}});
  const Matrix m2 = Matrix::from_rows({{0, 1}, {-2, 0}});
  EXPECT_TRUE(congruence_witness_check(m, m, Matrix::identity(2), 1));
  EXPECT_TRUE(congruence_witness_check(2 * m, m, Matrix::identity(2), 2));
  EXPECT_FALSE(congruence_witness_check(m, m2, Matrix::identity(2), 1));
  EXPECT_THROW(congruence_witness_check(m, Matrix::identity(3), Matrix::identity(2), 1),
               DimensionError);
  // A base change P sends the relation of k[x,y] to a multiple of itself.
  const Matrix p = Matrix::from_rows({{1, 1}, {0, 1}});
  EXPECT_TRUE(congruence_witness_check(m, m, p, 1));
}
