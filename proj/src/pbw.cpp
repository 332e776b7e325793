#include "koszulcy/pbw.hpp"

#include "koszulcy/errors.hpp"
#include "koszulcy/skew.hpp"

namespace koszulcy {

namespace {

Scalar sign(long exponent) { return (exponent % 2 == 0) ? Scalar(1) : Scalar(-1); }

// Rows: coordinates of each given relation against the canonical basis of R.
Matrix relation_coordinates(const QuadraticAlgebra& base, const std::vector<Tensor>& relations) {
  const std::size_t m = base.relations().dim();
  Matrix c(relations.size(), m);
  for (std::size_t k = 0; k < relations.size(); ++k) {
    auto coords = base.relations().coordinates(relations[k].to_sparse());
    if (!coords) {
      throw PreconditionError("deformation relation does not lie in R");
    }
    for (std::size_t r = 0; r < m; ++r) {
      c(k, r) = (*coords)[r];
    }
  }
  return c;
}

Element concat(const Element& a, const Element& b) {
  Element out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Element subtract(const Element& a, const Element& b) {
  Element out = a;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] -= b.at(i);
  }
  return out;
}

}  // namespace

PBWDeformation PBWDeformation::trivial(const QuadraticAlgebra& base) {
  return {base, Matrix(base.relations().dim(), base.n()),
          std::vector<Scalar>(base.relations().dim())};
}

PBWDeformation PBWDeformation::from_relations(const QuadraticAlgebra& base,
                                              const std::vector<Tensor>& relations,
                                              const std::vector<std::vector<Scalar>>& nu,
                                              const std::vector<Scalar>& theta) {
  const Matrix c = relation_coordinates(base, relations);
  if (c.rows() != c.cols() || !try_inverse(c)) {
    throw PreconditionError("deformation data must be given on a basis of the relations");
  }
  if (nu.size() != relations.size() || theta.size() != relations.size()) {
    throw DimensionError("one ν and θ value per relation required");
  }
  Matrix given(nu.size(), base.n());
  for (std::size_t k = 0; k < nu.size(); ++k) {
    if (nu[k].size() != base.n()) {
      throw DimensionError("ν(r) must have one coordinate per generator");
    }
    for (std::size_t i = 0; i < base.n(); ++i) {
      given(k, i) = nu[k][i];
    }
  }
  const Matrix c_inv = inverse(c);
  return {base, c_inv * given, c_inv.apply(theta)};
}

std::vector<std::vector<Scalar>> PBWDeformation::nu_on(const std::vector<Tensor>& relations) const {
  const Matrix given = relation_coordinates(base, relations) * nu;
  std::vector<std::vector<Scalar>> out;
  for (std::size_t k = 0; k < given.rows(); ++k) {
    out.push_back(given.row(k));
  }
  return out;
}

std::vector<Scalar> PBWDeformation::theta_on(const std::vector<Tensor>& relations) const {
  return relation_coordinates(base, relations).apply(theta);
}

Element apply_delta(const Cdga& c, std::size_t degree, const Element& x) {
  if (degree >= c.delta.size()) {
    throw DimensionError("derivation does not cover this degree");
  }
  return c.delta[degree].apply(x);
}

Cdga dual_cdga(const PBWDeformation& u, const TruncatedAlgebra& dual) {
  const GradedFDAlgebra& e = dual.algebra();
  const std::size_t n = u.base.n();
  const std::size_t m = u.base.relations().dim();
  const std::size_t top = e.max_degree();
  if (u.nu.rows() != m || u.nu.cols() != n || u.theta.size() != m) {
    throw DimensionError("deformation data has the wrong shape");
  }
  if (e.dim(1) != n || e.dim(2) != m) {
    throw DimensionError("dual algebra does not match the deformation's base");
  }

  // (A^!)_2 ≅ R*: a class of words evaluates on r by reading coefficients.
  const std::vector<Tensor> rels = u.base.relation_tensors();
  Matrix ev(m, m);
  if (top >= 2) {
    const auto& words = dual.basis_words(2);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t w = 0; w < words.size(); ++w) {
        ev(r, w) = rels[r].coeff(words[w]);
      }
    }
  }
  const Matrix ev_inv = inverse(ev);

  Cdga c;
  c.algebra = e;
  for (std::size_t i = 0; i <= top; ++i) {
    c.delta.emplace_back(e.dim(i + 1), e.dim(i));
  }
  for (std::size_t a = 0; a < n && top >= 2; ++a) {
    c.delta[1].set_column(a, ev_inv.apply(u.nu.column(a)));
  }
  for (std::size_t k = 2; k < top; ++k) {
    const auto& words = dual.basis_words(k);
    for (std::size_t p = 0; p < words.size(); ++p) {
      const Word& w = words[p];
      Element total(e.dim(k + 1));
      for (std::size_t i = 0; i < k; ++i) {
        const Element prefix = dual.reduce_word(Word(w.begin(), w.begin() + static_cast<long>(i)));
        const Element suffix =
            dual.reduce_word(Word(w.begin() + static_cast<long>(i) + 1, w.end()));
        const Element left = e.multiply(i, prefix, 2, c.delta[1].column(w[i]));
        const Element term = e.multiply(i + 2, left, k - i - 1, suffix);
        const Scalar s = sign(static_cast<long>(i));
        for (std::size_t t = 0; t < total.size(); ++t) {
          total[t] += s * term[t];
        }
      }
      c.delta[k].set_column(p, total);
    }
  }
  c.curvature = top >= 2 ? ev_inv.apply(u.theta) : Element{};
  return c;
}

CdgaCheck check_cdga_axioms(const Cdga& c) {
  const GradedFDAlgebra& e = c.algebra;
  const std::size_t top = e.max_degree();
  CdgaCheck check;
  for (std::size_t i = 0; i <= top; ++i) {
    for (std::size_t j = 0; i + j + 1 <= top; ++j) {
      for (std::size_t a = 0; a < e.dim(i); ++a) {
        for (std::size_t b = 0; b < e.dim(j); ++b) {
          const Element x = e.basis_element(i, a);
          const Element y = e.basis_element(j, b);
          const Element lhs = apply_delta(c, i + j, e.multiply(i, x, j, y));
          Element rhs = e.multiply(i + 1, apply_delta(c, i, x), j, y);
          const Element second = e.multiply(i, x, j + 1, apply_delta(c, j, y));
          const Scalar s = sign(static_cast<long>(i));
          for (std::size_t t = 0; t < rhs.size(); ++t) {
            rhs[t] += s * second[t];
          }
          if (lhs != rhs) {
            return {false, "Leibniz", {{i, a}, {j, b}}};
          }
        }
      }
    }
  }
  if (top >= 3) {
    const Element dtheta = apply_delta(c, 2, c.curvature);
    if (dtheta != e.zero(3)) {
      return {false, "curvature is not closed", {}};
    }
  }
  for (std::size_t i = 0; i + 2 <= top; ++i) {
    for (std::size_t a = 0; a < e.dim(i); ++a) {
      const Element x = e.basis_element(i, a);
      const Element lhs = apply_delta(c, i + 1, apply_delta(c, i, x));
      const Element rhs = subtract(e.multiply(2, c.curvature, i, x), e.multiply(i, x, 2, c.curvature));
      if (lhs != rhs) {
        return {false, "square of the derivation", {{i, a}}};
      }
    }
  }
  return check;
}

LambdaData lambda_data(const Cdga& c, const Scalar& varpi_scale) {
  const GradedFDAlgebra& e = c.algebra;
  const std::size_t d = e.length();
  if (d < 1 || e.dim(d) != 1) {
    throw PreconditionError("λ needs a one-dimensional top component");
  }
  if (varpi_scale == 0) {
    throw PreconditionError("ϖ must be nonzero");
  }
  const std::size_t n = e.dim(1);
  Matrix g(n, e.dim(d - 1));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < e.dim(d - 1); ++b) {
      g(a, b) = e.product(1, a, d - 1, b).at(0);
    }
  }
  auto g_inv = try_inverse(g);
  if (!g_inv) {
    throw PreconditionError("pairing between degrees 1 and d-1 is degenerate");
  }
  LambdaData data;
  data.varpi_scale = varpi_scale;
  data.omegas = varpi_scale * *g_inv;
  for (std::size_t i = 0; i < n; ++i) {
    data.lambdas.push_back(apply_delta(c, d - 1, data.omegas.column(i)).at(0) / varpi_scale);
  }
  return data;
}

DeformationContext analyze_deformation(const PBWDeformation& u, std::size_t bound,
                                       std::size_t cap) {
  RegularityCertificate cert = require_regular(u.base, bound, cap);
  Matrix xi = nakayama_of_A(u.base, cert);
  Cdga cdga = dual_cdga(u, cert.dual_algebra);
  CdgaCheck axioms = check_cdga_axioms(cdga);
  LambdaData lambda = lambda_data(cdga);
  return {u, std::move(cert), std::move(xi), std::move(cdga), std::move(axioms), std::move(lambda)};
}

AffineMap deformed_nakayama(const DeformationContext& ctx) {
  return {ctx.xi, ctx.lambda.lambdas};
}

PBWDeformation skew_deformation(const DeformationContext& ctx) {
  const std::size_t n = ctx.u.base.n();
  const SkewExtension skew = skew_extend(ctx.u.base, ctx.xi);
  std::vector<Tensor> relations = skew.base_relations;
  relations.insert(relations.end(), skew.rtilde.begin(), skew.rtilde.end());
  std::vector<std::vector<Scalar>> nu;
  std::vector<Scalar> theta;
  for (std::size_t r = 0; r < skew.base_relations.size(); ++r) {
    std::vector<Scalar> row = ctx.u.nu.row(r);
    row.emplace_back(0);
    nu.push_back(std::move(row));
    theta.push_back(ctx.u.theta[r]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> row(n + 1);
    row[n] = ctx.lambda.lambdas[i];
    nu.push_back(std::move(row));
    theta.emplace_back(0);
  }
  return PBWDeformation::from_relations(skew.b, relations, nu, theta);
}

Cdga transported_gamma_cdga(const DeformationContext& ctx) {
  const GradedFDAlgebra& e = ctx.cdga.algebra;
  const std::size_t d = ctx.cert.gldim;
  const auto& pairing = ctx.cert.dual_frobenius.pairing;
  Cdga c;
  c.algebra = dual_trivial_extension(e, epsilon_power(e, static_cast<long>(d)), identity_map(e), d + 1);
  const GradedFDAlgebra& g = c.algebra;

  // δ(0, ϖ*) = (0, X) with X = Σ_i μ_i ω_i*, μ = λP.
  const Element mu = row_times(ctx.lambda.lambdas, ctx.xi);
  const Element x_dual = inverse(ctx.lambda.omegas).transpose().apply(mu);
  Element x_el = concat(e.zero(2), x_dual);
  Element varpi_star = e.zero(1);
  varpi_star.resize(g.dim(1));
  varpi_star[e.dim(1)] = 1;

  for (std::size_t k = 0; k <= d + 1; ++k) {
    Matrix dk(g.dim(k + 1), g.dim(k));
    if (k <= d) {
      for (std::size_t a = 0; a < e.dim(k); ++a) {
        Element image = apply_delta(ctx.cdga, k, e.basis_element(k, a));
        image.resize(g.dim(k + 1));
        dk.set_column(a, image);
      }
      // Module elements are ϖ*·α for α of degree k − 1.
      for (std::size_t b = 0; k >= 1 && b < e.dim(d + 1 - k); ++b) {
        Element unit(e.dim(d + 1 - k));
        unit[b] = 1;
        const Element alpha = inverse(pairing[k - 1].transpose()).apply(unit);
        Element alpha_el = alpha;
        alpha_el.resize(g.dim(k - 1));
        Element dalpha_el = apply_delta(ctx.cdga, k - 1, alpha);
        dalpha_el.resize(g.dim(k));
        const Element first = g.multiply(2, x_el, k - 1, alpha_el);
        const Element second = g.multiply(1, varpi_star, k, dalpha_el);
        dk.set_column(e.dim(k) + b, subtract(first, second));
      }
    }
    c.delta.push_back(std::move(dk));
  }
  c.curvature = ctx.cdga.curvature;
  c.curvature.resize(g.dim(2));
  return c;
}

Cdga cdg_trivial_extension(const Cdga& src) {
  const GradedFDAlgebra& e = src.algebra;
  const std::size_t d = e.length();
  const std::size_t n = d + 1;
  const long shift = -static_cast<long>(d) - 1;

  std::vector<std::size_t> dims;
  std::vector<std::vector<std::string>> labels;
  for (std::size_t k = 0; k <= n; ++k) {
    dims.push_back(e.dim(k) + e.dim(n - k));
    std::vector<std::string> l;
    for (const auto& name : e.labels(k)) {
      l.push_back("(" + name + ",0)");
    }
    for (const auto& name : e.labels(n - k)) {
      l.push_back("(0," + name + "^)");
    }
    labels.push_back(std::move(l));
  }
  Cdga c;
  c.algebra = GradedFDAlgebra(dims, labels);
  GradedFDAlgebra& g = c.algebra;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; i + j <= n; ++j) {
      const std::size_t k = i + j;
      for (std::size_t a = 0; a < e.dim(i); ++a) {
        for (std::size_t b = 0; b < e.dim(j); ++b) {
          g.set_product(i, a, j, b, e.product(i, a, j, b));
        }
        // x ⋄ f(−d−1) = (−1)^{(−d−1)|x|} (x ⇀ f)(−d−1), (x ⇀ f)(m) = (−1)^{|x|(|f|+|m|)} f(m x)
        for (std::size_t b = 0; b < e.dim(n - j); ++b) {
          const long f_degree = -static_cast<long>(n - j);
          const long m_degree = static_cast<long>(n - k);
          const Scalar s = sign(static_cast<long>(i) * (f_degree + m_degree)) *
                           sign(shift * static_cast<long>(i));
          std::vector<SparseVector::Entry> entries;
          for (std::size_t cidx = 0; cidx < e.dim(n - k); ++cidx) {
            const Scalar v = e.product(n - k, cidx, i, a).at(b);
            if (v != 0) {
              entries.emplace_back(e.dim(k) + cidx, s * v);
            }
          }
          g.set_product(i, a, j, e.dim(j) + b, SparseVector(std::move(entries)));
        }
      }
      // (f ↼ y)(m) = f(y m), unchanged by the shift.
      for (std::size_t b = 0; b < e.dim(j); ++b) {
        for (std::size_t a = 0; a < e.dim(n - i); ++a) {
          std::vector<SparseVector::Entry> entries;
          for (std::size_t cidx = 0; cidx < e.dim(n - k); ++cidx) {
            const Scalar v = e.product(j, b, n - k, cidx).at(a);
            if (v != 0) {
              entries.emplace_back(e.dim(k) + cidx, v);
            }
          }
          g.set_product(i, e.dim(i) + a, j, b, SparseVector(std::move(entries)));
        }
      }
    }
  }

  // δ(x, f) = (δx, δf) with δ_{M(−d−1)} = (−1)^{−d−1} δ_M and δ_M(f) = (−1)^{|f|+1} f∘δ.
  for (std::size_t k = 0; k <= n; ++k) {
    Matrix dk(g.dim(k + 1), g.dim(k));
    for (std::size_t a = 0; a < e.dim(k); ++a) {
      Element image = apply_delta(src, k, e.basis_element(k, a));
      image.resize(g.dim(k + 1));
      dk.set_column(a, image);
    }
    const std::size_t j = n - k;  // f ∈ (E_j)*
    if (k < n && j >= 1) {
      const long f_degree = -static_cast<long>(j);
      const Scalar s = sign(shift) * sign(f_degree + 1);
      const Matrix& dprev = src.delta[j - 1];  // E_{j−1} → E_j
      for (std::size_t b = 0; b < e.dim(j); ++b) {
        Element image(g.dim(k + 1));
        for (std::size_t cidx = 0; cidx < e.dim(j - 1); ++cidx) {
          image[e.dim(k + 1) + cidx] = s * dprev(b, cidx);
        }
        dk.set_column(e.dim(k) + b, image);
      }
    }
    c.delta.push_back(std::move(dk));
  }
  c.curvature = src.curvature;
  c.curvature.resize(g.dim(2));
  return c;
}

bool prop4_condition(const DeformationContext& ctx) {
  const std::size_t d = ctx.cert.gldim;
  const GradedFDAlgebra& e = ctx.cdga.algebra;
  const GradedMap psi =
      compose(epsilon_power(e, static_cast<long>(d) + 1), ctx.cert.dual_frobenius.nakayama);
  for (std::size_t i = 0; i < d; ++i) {
    if (!(ctx.cdga.delta[i] * psi[i] == psi[i + 1] * ctx.cdga.delta[i])) {
      return false;
    }
  }
  return d < 2 || psi[2].apply(ctx.cdga.curvature) == ctx.cdga.curvature;
}

DeformedCyVerdict cy_criterion_deformed(const DeformationContext& ctx, bool domain,
                                        std::size_t cap) {
  if (!ctx.axioms.pass) {
    throw PreconditionError("dual data violate the cdga axioms (" + ctx.axioms.law +
                            "); not a PBW deformation");
  }
  const std::size_t d = ctx.cert.gldim;
  DeformedCyVerdict v;
  v.lambdas = ctx.lambda.lambdas;
  v.converse_applies = domain;

  const Cdga gamma = transported_gamma_cdga(ctx);
  const Matrix& top_delta = gamma.delta.at(d);
  v.is_cy = top_delta.is_zero();
  for (std::size_t col = 0; col < top_delta.cols() && !v.is_cy; ++col) {
    bool nonzero = false;
    for (std::size_t row = 0; row < top_delta.rows(); ++row) {
      nonzero = nonzero || top_delta(row, col) != 0;
    }
    if (nonzero) {
      v.failing_element = gamma.algebra.labels(d).at(col);
      break;
    }
  }

  const PBWDeformation lifted = skew_deformation(ctx);
  const TruncatedAlgebra bdual(quadratic_dual(lifted.base), d + 1, cap);
  const Cdga bcdga = dual_cdga(lifted, bdual);
  v.b_dual_agrees = bcdga.delta.at(d).is_zero() == v.is_cy;
  return v;
}

Thm5Report thm5_check(const DeformationContext& ctx, std::size_t cap) {
  const Dim2Form form = dim2_matrix_form(ctx.u.base, ctx.cert);
  Thm5Report report;
  report.lambdas = ctx.lambda.lambdas;
  report.cond_i = prop4_condition(ctx);
  report.cond_ii = cy_criterion_deformed(ctx, true, cap).is_cy;
  report.lambda_m = row_times(report.lambdas, form.m);
  report.minus_lambda_mt = row_times(report.lambdas, -form.m.transpose());
  report.cond_iii = report.lambda_m == report.minus_lambda_mt;
  report.equivalent = report.cond_i == report.cond_ii && report.cond_ii == report.cond_iii;
  return report;
}

}  // namespace koszulcy
