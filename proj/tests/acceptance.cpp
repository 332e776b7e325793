// One line per acceptance criterion. Exit status is nonzero if any line fails.
#include "fixtures.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace koszulcy;
using fixtures::rel;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) {
        detail << what;
      }
      pass = false;
    }
  }
};

std::string show(const std::vector<Scalar>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? "," : "") + to_string(v[i]);
  }
  return s + ")";
}

std::string affine(const std::string& var, const Scalar& coeff, const Scalar& constant) {
  std::string s = coeff == 1 ? var : to_string(coeff) + var;
  if (constant > 0) {
    s += " + " + to_string(constant);
  } else if (constant < 0) {
    s += " - " + to_string(-constant);
  }
  return s;
}

Matrix matrix_route(const Matrix& m) { return -(m.transpose() * inverse(m)); }

PBWDeformation single(const QuadraticAlgebra& a, std::vector<Scalar> nu, const Scalar& theta) {
  return PBWDeformation::from_relations(a, a.relation_tensors(), {std::move(nu)}, {theta});
}

void nakayama_two_routes(Outcome& o) {
  const std::vector<std::pair<std::string, Matrix>> expected{
      {"kxy", Matrix::identity(2)},
      {"qplane2", Matrix::diagonal({2, Scalar(1, 2)})},
      {"jordan", Matrix::from_rows({{1, -2}, {0, 1}})}};
  for (const auto& [name, a] : fixtures::d2_bases()) {
    const auto cert = require_regular(a, 5);
    const Matrix xi = nakayama_of_A(a, cert);
    o.require(xi == matrix_route(dim2_matrix_form(a, cert).m), name + ": routes disagree");
    for (const auto& [ename, m] : expected) {
      if (ename == name) {
        o.require(xi == m, name + ": unexpected ξ");
      }
    }
  }
}

void thm1_suite(Outcome& o) {
  for (const auto& [name, a] : fixtures::regular_corpus()) {
    const Matrix xi = nakayama_of_A(a, require_regular(a, 5));
    o.require(cy_check_with(a, xi, 5).is_cy, name + ": A[z;ξ] not CY");
  }
  const auto v = cy_check_with(fixtures::quantum_plane(2), Matrix::identity(2), 5);
  o.require(!v.is_cy && v.witness.has_value(), "qplane2 with id: expected a witness pair");
  if (v.witness) {
    o.detail << "witness (" << v.witness->first << ", " << v.witness->second << ")";
  }
}

void extalg_suite(Outcome& o) {
  std::size_t pairs = 0;
  for (const auto& [name, a] : fixtures::regular_corpus()) {
    const Matrix xi = nakayama_of_A(a, require_regular(a, 5));
    for (const Matrix& sigma : {Matrix::identity(a.n()), xi, inverse(xi)}) {
      const auto r = verify_extalg_iso(a, sigma, 5);
      o.require(r.xz_identity, name + ": x*z* = -r~* fails");
      o.require(r.zx_identity, name + ": z*x* = sum l r~* fails");
      o.require(r.pass(), name + ": not an isomorphism");
      ++pairs;
    }
  }
  o.detail << pairs << " pairs";
}

void thm2_suite(Outcome& o) {
  for (const auto& [name, a] : fixtures::regular_corpus()) {
    const auto cert = require_regular(a, 5);
    const auto data = extract_superpotential(a, cert);
    o.require(derivation_quotient(data.w, a.names()).relations() == a.relations(),
              name + ": A != A(w)");
    const auto skew = skew_extend(a, nakayama_of_A(a, cert));
    const Tensor w_hat = symmetrize(data.w, data.sigma);
    o.require(derivation_quotient(w_hat, skew.b.names()).relations() == skew.b.relations(),
              name + ": A[z;ξ] != A(ŵ)");
    const auto report = verify_thm2(a, cert);
    o.require(report.part_i && report.part_ii, name + ": thm2 report");
  }
  Tensor six(3, 3);
  for (const auto& [c, w] : std::vector<std::pair<int, Word>>{
           {1, {2, 0, 1}}, {-1, {2, 1, 0}}, {-1, {0, 2, 1}},
           {1, {1, 2, 0}}, {1, {0, 1, 2}}, {-1, {1, 0, 2}}}) {
    six.add_term(w, c);
  }
  const Tensor w = rel(2, {{1, {0, 1}}, {-1, {1, 0}}});
  o.require(symmetrize(w, Matrix::identity(2)) == six, "kxy: ŵ is not the antisymmetrizer");
}

void symmetrization_suite(Outcome& o) {
  std::mt19937_64 rng(2024);
  const auto pool = fixtures::superpotential_pool();
  for (int trial = 0; trial < 100; ++trial) {
    const auto [w, sigma] = fixtures::random_twisted(rng, pool);
    o.require(w.degree() <= 4, "pool degree");
    o.require(is_twisted_superpotential(w, sigma).pass, "input not twisted");
    const Tensor s = symmetrize(w, sigma);
    o.require(is_twisted_superpotential(s, Matrix::identity(w.ambient() + 1)).pass,
              "trial " + std::to_string(trial) + ": symmetrization not cyclic");
  }
  for (std::size_t d = 1; d <= 6; ++d) {
    Tensor t(d, 2);
    for (int k = 0; k < 6; ++k) {
      Word word(d);
      for (auto& letter : word) {
        letter = rng() % 2;
      }
      t.add_term(word, fixtures::random_scalar(rng));
    }
    Tensor u = t;
    for (std::size_t k = 0; k < d; ++k) {
      u = tau(d, d - 1, u);
    }
    o.require(u == t, "τ composite at d = " + std::to_string(d));
  }
  o.detail << "100 superpotentials, d <= 6";
}

void trivial_extension_suite(Outcome& o) {
  std::mt19937_64 rng(2025);
  const auto bases = fixtures::regular_corpus();
  for (int trial = 0; trial < 50; ++trial) {
    const auto& base = bases[rng() % bases.size()].a;
    const TruncatedAlgebra dual = finite_dual(base, 5);
    const auto& e = dual.algebra();
    const std::size_t d = e.length();
    const std::size_t n = d + 1 + rng() % 3;
    const GradedMap sigma =
        dual.extend(fixtures::random_relation_preserving(rng, dual.presentation()));
    const auto g = trivial_extension(e, sigma, n);
    const auto frob = frobenius_structure(g);
    const std::string tag = "trial " + std::to_string(trial);
    o.require(frob.structure.has_value(), tag + ": not Frobenius");
    if (!frob.structure) {
      continue;
    }
    const GradedMap sigma_inv = inverse(sigma);
    for (std::size_t k = 0; k <= n; ++k) {
      const Matrix lower = k <= d ? sigma_inv[k] : Matrix(0, 0);
      const Matrix upper = n - k <= d ? sigma[n - k].transpose() : Matrix(0, 0);
      o.require(frob.structure->nakayama[k] == fixtures::block_diagonal(lower, upper),
                tag + ": Nakayama");
    }
    const auto sym = trivial_extension(e, epsilon_power(e, static_cast<long>(n) - 1), n);
    o.require(is_graded_symmetric(sym).symmetric, tag + ": not graded symmetric");
  }
  o.detail << "50 triples";
}

void thm5_suite(Outcome& o) {
  std::mt19937_64 rng(2026);
  std::size_t held = 0;
  for (const auto& [name, a] : fixtures::d2_bases()) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto r = thm5_check(analyze_deformation(fixtures::random_deformation(a, rng), 5));
      o.require(r.cond_i == r.cond_ii && r.cond_ii == r.cond_iii && r.equivalent,
                name + ": conditions disagree");
      held += r.cond_i ? 1 : 0;
    }
  }
  const auto qp = fixtures::quantum_plane(2);
  const auto weyl = thm5_check(analyze_deformation(single(qp, {0, 0}, 1), 5));
  o.require(weyl.cond_i && weyl.cond_ii && weyl.cond_iii, "quantum Weyl");
  const auto bad = thm5_check(analyze_deformation(single(qp, {1, 0}, 0), 5));
  o.require(!bad.cond_i && !bad.cond_ii && !bad.cond_iii, "xy-2yx-x should fail all three");
  o.require(bad.lambdas == std::vector<Scalar>{0, Scalar(-1, 2)}, "λ = " + show(bad.lambdas));
  o.require(bad.lambda_m == std::vector<Scalar>{1, 0}, "λM = " + show(bad.lambda_m));
  o.require(bad.minus_lambda_mt == std::vector<Scalar>{Scalar(1, 2), 0},
            "-λMᵗ = " + show(bad.minus_lambda_mt));
  o.detail << "250 deformations, " << held << " CY";
}

void thm4_suite(Outcome& o) {
  std::mt19937_64 rng(2027);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ctx = analyze_deformation(fixtures::random_deformation(fixtures::kxy(), rng), 5);
    o.require(cy_criterion_deformed(ctx).is_cy, "trial " + std::to_string(trial));
  }
  o.detail << "50 deformations";
}

void thm4_example(Outcome& o) {
  const auto kxy = fixtures::kxy();
  const auto ctx = analyze_deformation(single(kxy, {1, 0}, 0), 5);
  const auto zeta = deformed_nakayama(ctx);
  const std::string zx = affine("x", zeta.linear(0, 0), zeta.constant[0]);
  const std::string zy = affine("y", zeta.linear(1, 1), zeta.constant[1]);
  o.detail << "r = xy - yx: ζ(x) = " << zx << ", ζ(y) = " << zy;
  const auto flipped = PBWDeformation::from_relations(
      kxy, {Scalar(-1) * kxy.relation_tensors()[0]}, {{1, 0}}, {0});
  const auto other = deformed_nakayama(analyze_deformation(flipped, 5));
  o.detail << "; r = yx - xy: ζ(y) = " << affine("y", other.linear(1, 1), other.constant[1]);
  o.require(zeta.linear == Matrix::identity(2), "");
  o.require(zeta.constant == std::vector<Scalar>{0, 1}, "");
}

void sanity_suite(Outcome& o) {
  const auto qp = fixtures::quantum_plane(2);
  const auto b = skew_extend(qp, nakayama_of_A(qp, require_regular(qp, 5))).b;
  o.require(graded_dims(b, 4) == std::vector<std::size_t>{1, 3, 6, 10, 15}, "A[z;ξ] dims");
  for (const auto& [name, a] : fixtures::regular_corpus()) {
    o.require(numeric_koszul_certificate(a, 5).pass(), name + ": Koszul certificate");
    const auto cert = require_regular(a, 5);
    const auto& e = cert.dual_algebra.algebra();
    const std::size_t d = cert.gldim;
    const Cdga c = dual_cdga(PBWDeformation::trivial(a), cert.dual_algebra);
    o.require(cdg_trivial_extension(c).algebra ==
                  dual_trivial_extension(e, epsilon_power(e, static_cast<long>(d)),
                                         identity_map(e), d + 1),
              name + ": structure constants");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"1 Nakayama two-route agreement (d = 2)", nakayama_two_routes},
      {"2 A[z;ξ] Calabi-Yau on the corpus, qplane2 with id refuted", thm1_suite},
      {"3 Ext algebra of A[z;σ] equals B^! under the Φ maps", extalg_suite},
      {"4 A = A(w) and A[z;ξ] = A(ŵ)", thm2_suite},
      {"5 symmetrization cyclic, τ composite identity", symmetrization_suite},
      {"6 trivial extension Nakayama and graded symmetry", trivial_extension_suite},
      {"7 three-way equivalence for deformations of d = 2 bases", thm5_suite},
      {"8a deformations of k[x,y] give CY U[z;ζ]", thm4_suite},
      {"8b k[x,y] with ν(r) = x: ζ(x) = x, ζ(y) = y + 1", thm4_example},
      {"9 Hilbert dims, Koszul certificates, cdg trivial extension", sanity_suite},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s  (%s) %.2fs\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.str().c_str(), secs);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
