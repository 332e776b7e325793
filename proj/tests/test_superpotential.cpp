#include "fixtures.hpp"

#include "koszulcy/errors.hpp"

#include <gtest/gtest.h>

using namespace koszulcy;
using fixtures::rel;

namespace {

Tensor three(const std::vector<std::pair<Scalar, Word>>& terms, std::size_t n) {
  Tensor t(3, n);
  for (const auto& [c, w] : terms) {
    t.add_term(w, c);
  }
  return t;
}

}  // namespace

TEST(TwistedSuperpotential, Examples) {
  const Tensor w = rel(2, {{1, {0, 1}}, {-1, {1, 0}}});
  EXPECT_TRUE(is_twisted_superpotential(w, Matrix::identity(2)).pass);

  const Tensor wq = rel(2, {{1, {0, 1}}, {-2, {1, 0}}});
  EXPECT_TRUE(is_twisted_superpotential(wq, Matrix::diagonal({2, Scalar(1, 2)})).pass);
  EXPECT_FALSE(is_twisted_superpotential(wq, Matrix::identity(2)).pass);

  const auto fail = is_twisted_superpotential(Tensor::word({0, 1}, 2), Matrix::identity(2));
  EXPECT_FALSE(fail.pass);
  EXPECT_EQ(fail.defect, rel(2, {{1, {0, 1}}, {1, {1, 0}}}));

  EXPECT_THROW(is_twisted_superpotential(Tensor::word({0}, 2), Matrix::identity(2)),
               DimensionError);
}

TEST(ExtractSuperpotential, Examples) {
  const auto kxy = fixtures::kxy();
  auto data = extract_superpotential(kxy, require_regular(kxy, 5));
  EXPECT_EQ(data.w, rel(2, {{1, {0, 1}}, {-1, {1, 0}}}));
  EXPECT_EQ(data.m, Matrix::from_rows({{0, 1}, {-1, 0}}));
  EXPECT_TRUE(data.xi_matches_matrices);

  const auto qp = fixtures::quantum_plane(2);
  data = extract_superpotential(qp, require_regular(qp, 5));
  EXPECT_EQ(data.w, rel(2, {{1, {0, 1}}, {-2, {1, 0}}}));
  EXPECT_EQ(data.sigma, Matrix::diagonal({2, Scalar(1, 2)}));
  EXPECT_TRUE(data.xi_matches_matrices);

  const auto j = fixtures::jordan();
  data = extract_superpotential(j, require_regular(j, 5));
  // Canonical scalar: −(xy − yx − xx).
  EXPECT_EQ(data.w, rel(2, {{1, {0, 0}}, {-1, {0, 1}}, {1, {1, 0}}}));
  EXPECT_TRUE(is_twisted_superpotential(data.w, Matrix::from_rows({{1, -2}, {0, 1}})).pass);
}

TEST(ExtractSuperpotential, CorpusInvariants) {
  for (const auto& [name, a] : fixtures::regular_corpus()) {
    const auto data = extract_superpotential(a, require_regular(a, 5));
    EXPECT_TRUE(data.xi_matches_matrices) << name;
    EXPECT_TRUE(try_inverse(data.m)) << name;
    EXPECT_TRUE(try_inverse(data.n)) << name;
    EXPECT_TRUE(koszul_coalgebra(a, data.w.degree()).contains(data.w.to_sparse())) << name;
    EXPECT_EQ(apply_all_slots(data.sigma, data.w), data.w) << name;
  }
}

TEST(Symmetrize, PolynomialRing) {
  const Tensor w = rel(2, {{1, {0, 1}}, {-1, {1, 0}}});
  const Tensor w_hat = symmetrize(w, Matrix::identity(2));
  const Tensor expected = three({{1, {2, 0, 1}},
                                 {-1, {2, 1, 0}},
                                 {-1, {0, 2, 1}},
                                 {1, {1, 2, 0}},
                                 {1, {0, 1, 2}},
                                 {-1, {1, 0, 2}}},
                                3);
  EXPECT_EQ(w_hat, expected);
  EXPECT_TRUE(is_twisted_superpotential(w_hat, Matrix::identity(3)).pass);
}

TEST(Symmetrize, QuantumPlane) {
  const Tensor w = rel(2, {{1, {0, 1}}, {-2, {1, 0}}});
  const Matrix sigma = Matrix::diagonal({2, Scalar(1, 2)});
  const Tensor w_hat = symmetrize(w, sigma);
  EXPECT_EQ(w_hat.terms().size(), 6u);
  EXPECT_TRUE(is_twisted_superpotential(w_hat, Matrix::identity(3)).pass);
  // z⊗w − τ_3^1(z⊗σ(·)⊗1)(w) + τ_3^2(z⊗w), using (σ⊗σ)(w) = w.
  const Tensor expected = three({{1, {2, 0, 1}},
                                 {-2, {2, 1, 0}},
                                 {-2, {0, 2, 1}},
                                 {1, {1, 2, 0}},
                                 {1, {0, 1, 2}},
                                 {-2, {1, 0, 2}}},
                                3);
  EXPECT_EQ(w_hat, expected);
}

TEST(Symmetrize, Preconditions) {
  EXPECT_THROW(symmetrize(Tensor(2, 2), Matrix::identity(2)), PreconditionError);
  EXPECT_THROW(symmetrize(Tensor::word({0, 1}, 2), Matrix::identity(2)), PreconditionError);
}

TEST(DerivationQuotient, Examples) {
  const Tensor w = rel(2, {{1, {0, 1}}, {-1, {1, 0}}});
  EXPECT_EQ(derivation_quotient(w, {"x", "y"}).relations(), fixtures::kxy().relations());

  const Tensor w_hat = symmetrize(w, Matrix::identity(2));
  const auto poly3 = QuadraticAlgebra::from_relations(
      {"x", "y", "z"}, {rel(3, {{1, {0, 1}}, {-1, {1, 0}}}), rel(3, {{1, {2, 0}}, {-1, {0, 2}}}),
                        rel(3, {{1, {2, 1}}, {-1, {1, 2}}})});
  EXPECT_EQ(derivation_quotient(w_hat, {"x", "y", "z"}).relations(), poly3.relations());

  const auto qp = fixtures::quantum_plane(2);
  const Matrix xi = Matrix::diagonal({2, Scalar(1, 2)});
  const auto b = QuadraticAlgebra::from_relations(
      {"x", "y", "z"},
      {rel(3, {{1, {0, 1}}, {-2, {1, 0}}}), rel(3, {{1, {2, 0}}, {-2, {0, 2}}}),
       rel(3, {{1, {2, 1}}, {Scalar(-1, 2), {1, 2}}})});
  const Tensor wq_hat = symmetrize(rel(2, {{1, {0, 1}}, {-2, {1, 0}}}), xi);
  EXPECT_EQ(derivation_quotient(wq_hat, {"x", "y", "z"}).relations(), b.relations());
  EXPECT_EQ(skew_extend(qp, xi).b.relations(), b.relations());

  EXPECT_THROW(derivation_quotient(Tensor::word({0}, 2), {"x", "y"}), DimensionError);
}

TEST(DerivationQuotient, LeftAndRightAgreeForSuperpotentials) {
  for (const auto& [name, a] : fixtures::regular_corpus()) {
    const auto data = extract_superpotential(a, require_regular(a, 5));
    const Tensor w_hat = symmetrize(data.w, data.sigma);
    std::vector<std::string> names = a.names();
    names.push_back(fresh_generator_name(names));
    const auto right = derivation_quotient(w_hat, names);
    EXPECT_EQ(right.relations(), derivation_quotient_left(w_hat, names).relations()) << name;
    // R ⊕ span of the z-relations.
    const SkewExtension skew = skew_extend(a, data.sigma);
    std::vector<SparseVector> base;
    for (const auto& r : skew.base_relations) {
      base.push_back(r.to_sparse());
    }
    std::vector<SparseVector> tilde;
    for (const auto& r : skew.rtilde) {
      tilde.push_back(r.to_sparse());
    }
    const std::size_t ambient = (a.n() + 1) * (a.n() + 1);
    const Subspace rs = Subspace::span(ambient, base);
    const Subspace ts = Subspace::span(ambient, tilde);
    EXPECT_EQ(intersect(rs, ts).dim(), 0u) << name;
    EXPECT_EQ(sum(rs, ts), right.relations()) << name;
  }
}

TEST(SuperpotentialPresentation, Examples) {
  const auto kxy = fixtures::kxy();
  auto report = verify_thm2(kxy, require_regular(kxy, 5));
  EXPECT_TRUE(report.part_i);
  EXPECT_TRUE(report.part_ii);
  EXPECT_EQ(report.l, Matrix::from_rows({{1}}));
  EXPECT_TRUE(report.l_invertible);

  for (const auto& [name, a] : fixtures::regular_corpus()) {
    report = verify_thm2(a, require_regular(a, 5));
    EXPECT_TRUE(report.part_i) << name;
    EXPECT_TRUE(report.part_ii) << name;
    EXPECT_TRUE(report.l_invertible) << name;
  }
}

TEST(SuperpotentialProperties, TwistInvarianceAndSymmetrization) {
  std::mt19937_64 rng(51);
  const auto pool = fixtures::superpotential_pool();
  for (int trial = 0; trial < 40; ++trial) {
    const auto [w, sigma] = fixtures::random_twisted(rng, pool);
    ASSERT_TRUE(is_twisted_superpotential(w, sigma).pass);
    EXPECT_EQ(apply_all_slots(sigma, w), w);
    EXPECT_TRUE(is_twisted_superpotential(symmetrize(w, sigma), Matrix::identity(w.ambient() + 1)).pass);
  }
}

TEST(SuperpotentialProperties, VerdictsAreScaleInvariant) {
  const auto qp = fixtures::quantum_plane(3);
  const auto data = extract_superpotential(qp, require_regular(qp, 5));
  for (const Scalar k : {Scalar(2), Scalar(-1, 3)}) {
    const Tensor w = k * data.w;
    EXPECT_TRUE(is_twisted_superpotential(w, data.sigma).pass);
    EXPECT_EQ(derivation_quotient(w, qp.names()).relations(), qp.relations());
    EXPECT_EQ(derivation_quotient(symmetrize(w, data.sigma), {"x", "y", "z"}).relations(),
              skew_extend(qp, data.sigma).b.relations());
  }
}
