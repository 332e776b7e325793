#pragma once

#include "koszulcy/linear.hpp"
#include "koszulcy/pbw.hpp"
#include "koszulcy/quadratic.hpp"
#include "koszulcy/regular.hpp"
#include "koszulcy/skew.hpp"
#include "koszulcy/superpotential.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using namespace koszulcy;

inline Scalar q(const char* s) { return parse_scalar(s); }

using Term = std::pair<Scalar, Word>;

inline Tensor rel(std::size_t n, const std::vector<Term>& terms) {
  Tensor t(2, n);
  for (const auto& [c, w] : terms) {
    t.add_term(w, c);
  }
  return t;
}

inline QuadraticAlgebra two_gen(const std::vector<Term>& terms) {
  return QuadraticAlgebra::from_relations({"x", "y"}, {rel(2, terms)});
}

// xy − q yx
inline QuadraticAlgebra quantum_plane(const Scalar& param) {
  return two_gen({{1, {0, 1}}, {-param, {1, 0}}});
}

inline QuadraticAlgebra kxy() { return quantum_plane(1); }

// xy − yx − xx
inline QuadraticAlgebra jordan() { return two_gen({{1, {0, 1}}, {-1, {1, 0}}, {-1, {0, 0}}}); }

struct Named {
  std::string name;
  QuadraticAlgebra a;
};

inline std::vector<Named> d2_bases() {
  return {{"kxy", kxy()},
          {"qplane2", quantum_plane(2)},
          {"qplane3", quantum_plane(3)},
          {"qplane-1", quantum_plane(-1)},
          {"jordan", jordan()}};
}

// A[z;ξ] for a d = 2 base: AS-regular of global dimension 3.
inline QuadraticAlgebra skew_by_nakayama(const QuadraticAlgebra& a) {
  const RegularityCertificate cert = require_regular(a, 5);
  return skew_extend(a, nakayama_of_A(a, cert)).b;
}

inline std::vector<Named> d3_bases() {
  return {{"kxyz", skew_by_nakayama(kxy())},
          {"qplane2-skew", skew_by_nakayama(quantum_plane(2))},
          {"jordan-skew", skew_by_nakayama(jordan())}};
}

inline std::vector<Named> regular_corpus() {
  auto out = d2_bases();
  for (auto& b : d3_bases()) {
    out.push_back(std::move(b));
  }
  return out;
}

inline Scalar random_scalar(std::mt19937_64& rng, int range = 4) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  return ratio(num(rng), den(rng));
}

inline Scalar random_nonzero(std::mt19937_64& rng, int range = 4) {
  Scalar s = 0;
  while (s == 0) {
    s = random_scalar(rng, range);
  }
  return s;
}

// Random ν, θ on the canonical relation basis.
inline PBWDeformation random_deformation(const QuadraticAlgebra& a, std::mt19937_64& rng) {
  PBWDeformation u = PBWDeformation::trivial(a);
  for (std::size_t r = 0; r < u.nu.rows(); ++r) {
    for (std::size_t i = 0; i < u.nu.cols(); ++i) {
      u.nu(r, i) = random_scalar(rng);
    }
    u.theta[r] = random_scalar(rng);
  }
  return u;
}

struct Twisted {
  Tensor w;
  Matrix sigma;
};

// Twisted superpotentials of degree 2 and 3 from the corpus and their
// symmetrizations of degree 3 and 4 (twisted by the identity).
inline std::vector<Twisted> superpotential_pool() {
  std::vector<Twisted> pool;
  for (const auto& [name, a] : regular_corpus()) {
    const auto data = extract_superpotential(a, require_regular(a, 5));
    pool.push_back({data.w, data.sigma});
    pool.push_back({symmetrize(data.w, data.sigma), Matrix::identity(a.n() + 1)});
  }
  return pool;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        g(i, j) = random_scalar(rng, 2);
      }
    }
    if (try_inverse(g)) {
      return g;
    }
  }
}

// k·g^{⊗d}(w) is twisted by gσg^{-1}.
inline Twisted random_twisted(std::mt19937_64& rng, const std::vector<Twisted>& pool) {
  const Twisted& base = pool[rng() % pool.size()];
  const std::size_t n = base.w.ambient();
  const Matrix g = random_invertible(rng, n);
  return {apply_all_slots(g, random_nonzero(rng) * base.w), g * base.sigma * inverse(g)};
}

inline Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = a(i, j);
    }
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      out(a.rows() + i, a.cols() + j) = b(i, j);
    }
  }
  return out;
}

// A random degree-one map preserving the relations of `dual`, drawn from
// diagonal, triangular and general families.
inline Matrix random_relation_preserving(std::mt19937_64& rng, const QuadraticAlgebra& dual) {
  const std::size_t n = dual.n();
  for (;;) {
    Matrix m(n, n);
    const auto family = rng() % 3;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          m(i, j) = random_nonzero(rng, 3);
        } else if (family == 2 || (family == 1 && i < j)) {
          m(i, j) = random_scalar(rng, 3);
        }
      }
    }
    if (family == 1 && rng() % 2 == 0) {
      for (std::size_t i = 1; i < n; ++i) {
        m(i, i) = m(0, 0);
      }
    }
    if (try_inverse(m) && preserves_relations(dual, m)) {
      return m;
    }
  }
}

}  // namespace fixtures
