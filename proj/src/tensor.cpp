#include "koszulcy/tensor.hpp"

#include "koszulcy/errors.hpp"

#include <string>

namespace koszulcy {

std::size_t word_index(const Word& word, std::size_t n) {
  std::size_t index = 0;
  for (std::size_t letter : word) {
    if (letter >= n) {
      throw DimensionError("word letter exceeds generator count");
    }
    index = index * n + letter;
  }
  return index;
}

Word word_at(std::size_t index, std::size_t degree, std::size_t n) {
  Word w(degree);
  for (std::size_t i = degree; i-- > 0;) {
    w[i] = index % n;
    index /= n;
  }
  return w;
}

std::size_t word_count(std::size_t n, std::size_t degree, std::size_t cap) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < degree; ++i) {
    if (n != 0 && count > cap / n) {
      throw ResourceGuardError("word count " + std::to_string(n) + "^" + std::to_string(degree) +
                               " exceeds cap " + std::to_string(cap));
    }
    count *= n;
  }
  if (count > cap) {
    throw ResourceGuardError("word count exceeds cap " + std::to_string(cap));
  }
  return count;
}

Tensor Tensor::word(const Word& w, std::size_t ambient, const Scalar& coeff) {
  Tensor t(w.size(), ambient);
  t.add_term(w, coeff);
  return t;
}

Tensor Tensor::from_sparse(const SparseVector& v, std::size_t degree, std::size_t ambient) {
  Tensor t(degree, ambient);
  for (const auto& [index, coeff] : v.entries()) {
    t.terms_.emplace(word_at(index, degree, ambient), coeff);
  }
  return t;
}

Scalar Tensor::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Tensor::add_term(const Word& w, const Scalar& coeff) {
  if (w.size() != degree_) {
    throw DimensionError("word length differs from tensor degree");
  }
  for (std::size_t letter : w) {
    if (letter >= ambient_) {
      throw DimensionError("word letter exceeds generator count");
    }
  }
  if (coeff == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

SparseVector Tensor::to_sparse() const {
  std::vector<SparseVector::Entry> entries;
  entries.reserve(terms_.size());
  for (const auto& [w, coeff] : terms_) {
    entries.emplace_back(word_index(w, ambient_), coeff);
  }
  return SparseVector(std::move(entries));
}

Tensor Tensor::with_ambient(std::size_t ambient) const {
  Tensor t(degree_, ambient);
  for (const auto& [w, coeff] : terms_) {
    t.add_term(w, coeff);
  }
  return t;
}

void Tensor::check_compatible(const Tensor& other) const {
  if (degree_ != other.degree_ || ambient_ != other.ambient_) {
    throw DimensionError("tensor degree or generator count mismatch");
  }
}

Tensor& Tensor::operator+=(const Tensor& other) {
  check_compatible(other);
  for (const auto& [w, coeff] : other.terms_) {
    add_term(w, coeff);
  }
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  check_compatible(other);
  for (const auto& [w, coeff] : other.terms_) {
    add_term(w, -coeff);
  }
  return *this;
}

Tensor operator*(const Scalar& k, const Tensor& t) {
  Tensor out(t.degree_, t.ambient_);
  if (k == 0) {
    return out;
  }
  for (const auto& [w, coeff] : t.terms_) {
    out.terms_.emplace(w, k * coeff);
  }
  return out;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  if (a.ambient() != b.ambient()) {
    throw DimensionError("tensor product of different generator sets");
  }
  Tensor out(a.degree() + b.degree(), a.ambient());
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add_term(w, cu * cv);
    }
  }
  return out;
}

Tensor swap_adjacent(std::size_t pos, const Tensor& t) {
  if (pos + 1 >= t.degree()) {
    throw DimensionError("swap position out of range");
  }
  Tensor out(t.degree(), t.ambient());
  for (const auto& [w, coeff] : t.terms()) {
    Word s = w;
    std::swap(s[pos], s[pos + 1]);
    out.add_term(s, coeff);
  }
  return out;
}

Tensor tau(std::size_t d, std::size_t k, const Tensor& t) {
  if (t.degree() != d) {
    throw DimensionError("tau: tensor degree differs from d");
  }
  if (d == 0 || k >= d) {
    throw DimensionError("tau: k out of range");
  }
  Tensor out = t;
  for (std::size_t i = 0; i < k; ++i) {
    out = swap_adjacent(i, out);
  }
  return out;
}

Tensor apply_slotwise(const std::vector<std::optional<Matrix>>& maps, const Tensor& t) {
  if (maps.size() != t.degree()) {
    throw DimensionError("apply_slotwise: one map per slot required");
  }
  std::optional<std::size_t> target;
  for (const auto& map : maps) {
    if (!map) {
      continue;
    }
    if (map->cols() != t.ambient()) {
      throw DimensionError("apply_slotwise: map source differs from generator count");
    }
    if (target && *target != map->rows()) {
      throw DimensionError("apply_slotwise: maps have different targets");
    }
    target = map->rows();
  }
  const std::size_t out_ambient = target.value_or(t.ambient());
  if (out_ambient != t.ambient()) {
    for (const auto& map : maps) {
      if (!map) {
        throw DimensionError("apply_slotwise: identity slot with a change of generators");
      }
    }
  }

  Tensor out(t.degree(), out_ambient);
  for (const auto& [w, coeff] : t.terms()) {
    // Expand the product of slot images term by term.
    std::vector<std::pair<Word, Scalar>> partial{{Word{}, coeff}};
    for (std::size_t slot = 0; slot < w.size(); ++slot) {
      std::vector<std::pair<Word, Scalar>> next;
      for (auto& [prefix, c] : partial) {
        if (!maps[slot]) {
          Word extended = prefix;
          extended.push_back(w[slot]);
          next.emplace_back(std::move(extended), c);
          continue;
        }
        const Matrix& m = *maps[slot];
        for (std::size_t i = 0; i < m.rows(); ++i) {
          const Scalar& entry = m(i, w[slot]);
          if (entry == 0) {
            continue;
          }
          Word extended = prefix;
          extended.push_back(i);
          next.emplace_back(std::move(extended), c * entry);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [image, c] : partial) {
      out.add_term(image, c);
    }
  }
  return out;
}

Tensor apply_all_slots(const Matrix& map, const Tensor& t) {
  return apply_slotwise(std::vector<std::optional<Matrix>>(t.degree(), map), t);
}

Tensor contract_left(const Tensor& psi, const Tensor& u) {
  if (psi.degree() > u.degree()) {
    throw DimensionError("contraction degree exceeds tensor degree");
  }
  if (psi.ambient() != u.ambient()) {
    throw DimensionError("contraction of different generator sets");
  }
  const std::size_t k = psi.degree();
  Tensor out(u.degree() - k, u.ambient());
  for (const auto& [w, coeff] : u.terms()) {
    const Scalar c = psi.coeff(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)));
    if (c != 0) {
      out.add_term(Word(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()), c * coeff);
    }
  }
  return out;
}

Tensor contract_right(const Tensor& u, const Tensor& psi) {
  if (psi.degree() > u.degree()) {
    throw DimensionError("contraction degree exceeds tensor degree");
  }
  if (psi.ambient() != u.ambient()) {
    throw DimensionError("contraction of different generator sets");
  }
  const std::size_t keep = u.degree() - psi.degree();
  Tensor out(keep, u.ambient());
  for (const auto& [w, coeff] : u.terms()) {
    const Scalar c = psi.coeff(Word(w.begin() + static_cast<std::ptrdiff_t>(keep), w.end()));
    if (c != 0) {
      out.add_term(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(keep)), c * coeff);
    }
  }
  return out;
}

}  // namespace koszulcy
