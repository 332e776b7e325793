#include "koszulcy/graded.hpp"

#include "koszulcy/errors.hpp"

namespace koszulcy {

namespace {

const SparseVector kEmpty;

Scalar sign(long exponent) { return (exponent % 2 == 0) ? Scalar(1) : Scalar(-1); }

}  // namespace

GradedFDAlgebra::GradedFDAlgebra(std::vector<std::size_t> dims,
                                 std::vector<std::vector<std::string>> labels)
    : dims_(std::move(dims)), labels_(std::move(labels)) {
  if (dims_.empty() || dims_[0] != 1) {
    throw PreconditionError("graded algebra must be connected (dim of degree 0 is 1)");
  }
  if (labels_.size() != dims_.size()) {
    throw DimensionError("one label list per degree required");
  }
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (labels_[i].size() != dims_[i]) {
      throw DimensionError("label count differs from dimension in degree " + std::to_string(i));
    }
  }
  const std::size_t top = dims_.size() - 1;
  products_.resize(dims_.size());
  for (std::size_t i = 0; i <= top; ++i) {
    products_[i].resize(top - i + 1);
    for (std::size_t j = 0; i + j <= top; ++j) {
      products_[i][j].resize(dims_[i] * dims_[j]);
    }
  }
  for (std::size_t j = 0; j <= top; ++j) {
    for (std::size_t b = 0; b < dims_[j]; ++b) {
      products_[0][j][b] = SparseVector::unit(b);
      products_[j][0][b] = SparseVector::unit(b);
    }
  }
}

std::size_t GradedFDAlgebra::length() const {
  std::size_t top = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] != 0) {
      top = i;
    }
  }
  return top;
}

std::size_t GradedFDAlgebra::dim(std::size_t degree) const {
  return degree < dims_.size() ? dims_[degree] : 0;
}

const std::vector<std::string>& GradedFDAlgebra::labels(std::size_t degree) const {
  static const std::vector<std::string> none;
  return degree < labels_.size() ? labels_[degree] : none;
}

std::size_t GradedFDAlgebra::total_dim() const {
  std::size_t total = 0;
  for (std::size_t d : dims_) {
    total += d;
  }
  return total;
}

void GradedFDAlgebra::set_product(std::size_t i, std::size_t a, std::size_t j, std::size_t b,
                                  SparseVector value) {
  if (i + j >= dims_.size()) {
    if (!value.empty()) {
      throw DimensionError("product lands above the top degree");
    }
    return;
  }
  if (a >= dim(i) || b >= dim(j)) {
    throw DimensionError("basis index out of range");
  }
  if (!value.empty() && value.entries().back().first >= dim(i + j)) {
    throw DimensionError("product coordinates exceed target dimension");
  }
  products_[i][j][a * dims_[j] + b] = std::move(value);
}

const SparseVector& GradedFDAlgebra::product(std::size_t i, std::size_t a, std::size_t j,
                                             std::size_t b) const {
  if (i + j >= dims_.size()) {
    return kEmpty;
  }
  if (a >= dim(i) || b >= dim(j)) {
    throw DimensionError("basis index out of range");
  }
  return products_[i][j][a * dims_[j] + b];
}

Element GradedFDAlgebra::multiply(std::size_t i, const Element& x, std::size_t j,
                                  const Element& y) const {
  if (x.size() != dim(i) || y.size() != dim(j)) {
    throw DimensionError("element size differs from component dimension");
  }
  Element out(dim(i + j));
  if (i + j >= dims_.size()) {
    return out;
  }
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] == 0) {
      continue;
    }
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (y[b] == 0) {
        continue;
      }
      const Scalar c = x[a] * y[b];
      for (const auto& [k, v] : product(i, a, j, b).entries()) {
        out[k] += c * v;
      }
    }
  }
  return out;
}

Element GradedFDAlgebra::basis_element(std::size_t degree, std::size_t index) const {
  Element e(dim(degree));
  e.at(index) = 1;
  return e;
}

std::optional<LawViolation> check_unit(const GradedFDAlgebra& e) {
  for (std::size_t j = 0; j <= e.max_degree(); ++j) {
    for (std::size_t b = 0; b < e.dim(j); ++b) {
      if (!(e.product(0, 0, j, b) == SparseVector::unit(b)) ||
          !(e.product(j, b, 0, 0) == SparseVector::unit(b))) {
        return LawViolation{"unit", {{j, b}}};
      }
    }
  }
  return std::nullopt;
}

std::optional<LawViolation> check_associative(const GradedFDAlgebra& e) {
  const std::size_t top = e.max_degree();
  for (std::size_t i = 1; i <= top; ++i) {
    for (std::size_t j = 1; i + j <= top; ++j) {
      for (std::size_t k = 1; i + j + k <= top; ++k) {
        for (std::size_t a = 0; a < e.dim(i); ++a) {
          for (std::size_t b = 0; b < e.dim(j); ++b) {
            const Element ab = e.multiply(i, e.basis_element(i, a), j, e.basis_element(j, b));
            for (std::size_t c = 0; c < e.dim(k); ++c) {
              const Element bc = e.multiply(j, e.basis_element(j, b), k, e.basis_element(k, c));
              if (e.multiply(i + j, ab, k, e.basis_element(k, c)) !=
                  e.multiply(i, e.basis_element(i, a), j + k, bc)) {
                return LawViolation{"associativity", {{i, a}, {j, b}, {k, c}}};
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

GradedMap identity_map(const GradedFDAlgebra& e) {
  GradedMap f;
  for (std::size_t i = 0; i <= e.max_degree(); ++i) {
    f.push_back(Matrix::identity(e.dim(i)));
  }
  return f;
}

GradedMap epsilon_power(const GradedFDAlgebra& e, long k) {
  GradedMap f;
  for (std::size_t i = 0; i <= e.max_degree(); ++i) {
    f.push_back(sign(static_cast<long>(i) * k) * Matrix::identity(e.dim(i)));
  }
  return f;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (f.size() != g.size()) {
    throw DimensionError("graded maps cover different degrees");
  }
  GradedMap out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    out.push_back(f[i] * g[i]);
  }
  return out;
}

GradedMap inverse(const GradedMap& f) {
  GradedMap out;
  for (const auto& m : f) {
    out.push_back(inverse(m));
  }
  return out;
}

Element apply(const GradedMap& f, std::size_t degree, const Element& x) {
  if (degree >= f.size()) {
    if (!x.empty()) {
      throw DimensionError("graded map does not cover this degree");
    }
    return x;
  }
  return f[degree].apply(x);
}

std::optional<LawViolation> check_automorphism(const GradedFDAlgebra& e, const GradedMap& f) {
  if (f.size() != e.max_degree() + 1) {
    throw DimensionError("graded map covers the wrong number of degrees");
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].rows() != e.dim(i) || f[i].cols() != e.dim(i)) {
      throw DimensionError("graded map block has the wrong size in degree " + std::to_string(i));
    }
    if (!try_inverse(f[i])) {
      return LawViolation{"invertibility", {{i, 0}}};
    }
  }
  if (!(f[0] == Matrix::identity(1))) {
    return LawViolation{"unit", {{0, 0}}};
  }
  for (std::size_t i = 1; i < f.size(); ++i) {
    for (std::size_t j = 1; i + j < f.size(); ++j) {
      for (std::size_t a = 0; a < e.dim(i); ++a) {
        for (std::size_t b = 0; b < e.dim(j); ++b) {
          const Element lhs =
              apply(f, i + j, e.product(i, a, j, b).to_dense(e.dim(i + j)));
          const Element rhs = e.multiply(i, f[i].column(a), j, f[j].column(b));
          if (lhs != rhs) {
            return LawViolation{"multiplicativity", {{i, a}, {j, b}}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

FrobeniusResult frobenius_structure(const GradedFDAlgebra& e) {
  for (std::size_t i = 0; i <= e.max_degree(); ++i) {
    for (std::size_t j = 0; i + j <= e.max_degree(); ++j) {
      for (std::size_t a = 0; a < e.dim(i); ++a) {
        for (std::size_t b = 0; b < e.dim(j); ++b) {
          const auto& p = e.product(i, a, j, b);
          if (!p.empty() && p.entries().back().first >= e.dim(i + j)) {
            throw DimensionError("ill-formed structure constants");
          }
        }
      }
    }
  }
  FrobeniusResult result;
  const std::size_t d = e.length();
  if (e.dim(d) != 1) {
    // E_d × E_0 → k cannot be nondegenerate.
    result.degenerate_degree = d;
    result.reason = "top degree " + std::to_string(d) + " has dimension " +
                    std::to_string(e.dim(d)) + " but degree 0 has dimension 1";
    return result;
  }
  FrobeniusStructure s;
  for (std::size_t i = 0; i <= d; ++i) {
    Matrix g(e.dim(i), e.dim(d - i));
    for (std::size_t a = 0; a < e.dim(i); ++a) {
      for (std::size_t b = 0; b < e.dim(d - i); ++b) {
        g(a, b) = e.product(i, a, d - i, b).at(0);
      }
    }
    if (e.dim(i) != e.dim(d - i) || rank(g) < e.dim(i)) {
      result.degenerate_degree = i;
      result.reason = "pairing is degenerate in degree " + std::to_string(i);
      return result;
    }
    s.pairing.push_back(std::move(g));
  }
  for (std::size_t i = 0; i <= d; ++i) {
    s.nakayama.push_back(inverse(s.pairing[d - i]) * s.pairing[i].transpose());
  }
  // Degrees above the top are zero.
  for (std::size_t i = d + 1; i <= e.max_degree(); ++i) {
    s.nakayama.emplace_back(0, 0);
  }
  result.structure = std::move(s);
  return result;
}

SymmetryResult is_graded_symmetric(const GradedFDAlgebra& e) {
  const FrobeniusResult frob = frobenius_structure(e);
  if (!frob.structure) {
    throw PreconditionError("algebra is not Frobenius: " + frob.reason);
  }
  const auto& g = frob.structure->pairing;
  const std::size_t d = e.length();
  SymmetryResult result;
  result.symmetric = true;
  for (std::size_t i = 0; i <= d && result.symmetric; ++i) {
    const Scalar s = sign(static_cast<long>(i * (d - i)));
    for (std::size_t a = 0; a < e.dim(i) && result.symmetric; ++a) {
      for (std::size_t b = 0; b < e.dim(d - i); ++b) {
        if (g[i](a, b) != s * g[d - i](b, a)) {
          result.symmetric = false;
          result.witness = {{i, a}, {d - i, b}};
          break;
        }
      }
    }
  }
  result.nakayama_is_epsilon = (frob.structure->nakayama == epsilon_power(e, static_cast<long>(d) - 1));
  if (result.symmetric != result.nakayama_is_epsilon) {
    throw Error("graded symmetry and Nakayama routes disagree");
  }
  return result;
}

GradedFDAlgebra dual_trivial_extension(const GradedFDAlgebra& e, const GradedMap& left,
                                       const GradedMap& right, std::size_t n) {
  const std::size_t d = e.length();
  if (n <= d) {
    throw PreconditionError("trivial extension requires n greater than the length");
  }
  for (const GradedMap* f : {&left, &right}) {
    if (auto bad = check_automorphism(e, *f)) {
      throw PreconditionError("twist is not a graded automorphism (" + bad->law + ")");
    }
  }
  auto dual_dim = [&](std::size_t k) { return e.dim(n - k); };
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::string>> labels;
  for (std::size_t k = 0; k <= n; ++k) {
    dims.push_back(e.dim(k) + dual_dim(k));
    std::vector<std::string> l;
    for (const auto& name : e.labels(k)) {
      l.push_back("(" + name + ",0)");
    }
    for (const auto& name : e.labels(n - k)) {
      l.push_back("(0," + name + "^)");
    }
    labels.push_back(std::move(l));
  }
  GradedFDAlgebra g(dims, labels);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; i + j <= n; ++j) {
      const std::size_t k = i + j;
      const std::size_t off_i = e.dim(i);
      const std::size_t off_j = e.dim(j);
      const std::size_t off_k = e.dim(k);
      for (std::size_t a = 0; a < e.dim(i); ++a) {
        for (std::size_t b = 0; b < e.dim(j); ++b) {
          g.set_product(i, a, j, b, e.product(i, a, j, b));
        }
        // λ(e_a)·f_b evaluated on e_c equals f_b(e_c λ(e_a)).
        const Element la = left[i].column(a);
        for (std::size_t b = 0; b < dual_dim(j); ++b) {
          std::vector<SparseVector::Entry> entries;
          for (std::size_t c = 0; c < dual_dim(k); ++c) {
            const Element prod = e.multiply(n - k, e.basis_element(n - k, c), i, la);
            if (prod.at(b) != 0) {
              entries.emplace_back(off_k + c, prod[b]);
            }
          }
          g.set_product(i, a, j, off_j + b, SparseVector(std::move(entries)));
        }
      }
      // f_a·ρ(e_b) evaluated on e_c equals f_a(ρ(e_b) e_c).
      for (std::size_t b = 0; b < e.dim(j); ++b) {
        const Element rb = right[j].column(b);
        for (std::size_t a = 0; a < dual_dim(i); ++a) {
          std::vector<SparseVector::Entry> entries;
          for (std::size_t c = 0; c < dual_dim(k); ++c) {
            const Element prod = e.multiply(j, rb, n - k, e.basis_element(n - k, c));
            if (prod.at(a) != 0) {
              entries.emplace_back(off_k + c, prod[a]);
            }
          }
          g.set_product(i, off_i + a, j, b, SparseVector(std::move(entries)));
        }
      }
    }
  }
  return g;
}

GradedFDAlgebra trivial_extension(const GradedFDAlgebra& e, const GradedMap& sigma, std::size_t n) {
  return dual_trivial_extension(e, identity_map(e), sigma, n);
}

GradedFDAlgebra twisted_bimodule_trivial_extension(const GradedFDAlgebra& e, const GradedMap& left,
                                                   const GradedMap& right, long shift) {
  if (shift > -1) {
    throw PreconditionError("module shift must be at most -1 for a connected extension");
  }
  for (const GradedMap* f : {&left, &right}) {
    if (auto bad = check_automorphism(e, *f)) {
      throw PreconditionError("twist is not a graded automorphism (" + bad->law + ")");
    }
  }
  const std::size_t s = static_cast<std::size_t>(-shift);
  const std::size_t top = e.length() + s;
  auto module_dim = [&](std::size_t k) { return k >= s ? e.dim(k - s) : std::size_t{0}; };
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::string>> labels;
  for (std::size_t k = 0; k <= top; ++k) {
    dims.push_back(e.dim(k) + module_dim(k));
    std::vector<std::string> l;
    for (const auto& name : e.labels(k)) {
      l.push_back("(" + name + ",0)");
    }
    if (k >= s) {
      for (const auto& name : e.labels(k - s)) {
        l.push_back("(0," + name + ")");
      }
    }
    labels.push_back(std::move(l));
  }
  GradedFDAlgebra g(dims, labels);
  auto shifted = [](const Element& v, std::size_t offset) {
    std::vector<SparseVector::Entry> entries;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] != 0) {
        entries.emplace_back(offset + c, v[c]);
      }
    }
    return SparseVector(std::move(entries));
  };
  for (std::size_t i = 1; i <= top; ++i) {
    for (std::size_t j = 1; i + j <= top; ++j) {
      const std::size_t k = i + j;
      for (std::size_t a = 0; a < e.dim(i); ++a) {
        for (std::size_t b = 0; b < e.dim(j); ++b) {
          g.set_product(i, a, j, b, e.product(i, a, j, b));
        }
        if (j >= s) {
          const Element la = apply(left, i, e.basis_element(i, a));
          for (std::size_t b = 0; b < module_dim(j); ++b) {
            const Element prod = e.multiply(i, la, j - s, e.basis_element(j - s, b));
            g.set_product(i, a, j, e.dim(j) + b, shifted(prod, e.dim(k)));
          }
        }
      }
      if (i >= s) {
        for (std::size_t b = 0; b < e.dim(j); ++b) {
          const Element rb = apply(right, j, e.basis_element(j, b));
          for (std::size_t a = 0; a < module_dim(i); ++a) {
            const Element prod = e.multiply(i - s, e.basis_element(i - s, a), j, rb);
            g.set_product(i, e.dim(i) + a, j, b, shifted(prod, e.dim(k)));
          }
        }
      }
    }
  }
  return g;
}

}  // namespace koszulcy
