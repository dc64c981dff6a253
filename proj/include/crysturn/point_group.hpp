#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "crysturn/error.hpp"
#include "crysturn/linalg.hpp"
#include "crysturn/matrix.hpp"

namespace crysturn {

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// A finite subgroup of GL_n(Z) with its Cayley table.
///
/// Element 0 is always the identity.
class PointGroup {
 public:
  PointGroup() = default;

  /// Builds the tables for a list of matrices that is already closed.
  explicit PointGroup(std::vector<IntMatrix> elements) : elements_(std::move(elements)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
    if (index_.size() != elements_.size()) throw DomainError("point group elements are not distinct");
    if (elements_.empty() || !elements_.front().is_identity()) throw DomainError("point group must start with the identity");
    const std::size_t n = elements_.size();
    mult_table_.assign(n, std::vector<std::size_t>(n));
    inv_table_.assign(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto k = index_of(elements_[i] * elements_[j]);
        if (!k) throw DomainError("matrix list is not closed under multiplication");
        mult_table_[i][j] = *k;
        if (*k == 0) inv_table_[i] = j;
      }
    if (std::find(inv_table_.begin(), inv_table_.end(), n) != inv_table_.end())
      throw DomainError("matrix list is not closed under inversion");
  }

  std::size_t order() const { return elements_.size(); }
  std::size_t dimension() const { return elements_.front().rows(); }
  const std::vector<IntMatrix>& elements() const { return elements_; }
  const IntMatrix& operator[](std::size_t i) const { return elements_[i]; }

  std::size_t product(std::size_t i, std::size_t j) const { return mult_table_[i][j]; }
  std::size_t inverse(std::size_t i) const { return inv_table_[i]; }
  const std::vector<std::vector<std::size_t>>& mult_table() const { return mult_table_; }
  const std::vector<std::size_t>& inv_table() const { return inv_table_; }

  std::optional<std::size_t> index_of(const IntMatrix& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const IntMatrix& m) const { return index_.contains(m); }

  /// Multiplicative order of element i.
  std::size_t element_order(std::size_t i) const {
    std::size_t k = 1, cur = i;
    while (cur != 0) {
      cur = product(cur, i);
      ++k;
    }
    return k;
  }

 private:
  std::vector<IntMatrix> elements_;
  std::map<IntMatrix, std::size_t> index_;
  std::vector<std::vector<std::size_t>> mult_table_;
  std::vector<std::size_t> inv_table_;
};

namespace detail {

inline void check_generators(std::span<const IntMatrix> gens, std::size_t n) {
  for (const auto& g : gens) {
    if (!g.is_square() || g.rows() != n) throw DimensionError("group generator has the wrong size");
    if (!is_unimodular(g)) throw DomainError("group generator is not unimodular: " + to_string(g));
  }
}

}  // namespace detail

/// Breadth-first closure of ⟨gens⟩ by right multiplication, in discovery
/// order starting from the identity; nullopt once more than `cap` elements appear.
inline std::optional<std::vector<IntMatrix>> closure_elements(std::span<const IntMatrix> gens, std::size_t dimension,
                                                              std::size_t cap = kDefaultClosureCap) {
  detail::check_generators(gens, dimension);
  std::vector<IntMatrix> elements{IntMatrix::identity(dimension)};
  std::map<IntMatrix, std::size_t> seen{{elements.front(), 0}};
  for (std::size_t idx = 0; idx < elements.size(); ++idx) {
    for (const auto& g : gens) {
      IntMatrix h = elements[idx] * g;
      if (seen.contains(h)) continue;
      if (elements.size() >= cap) return std::nullopt;
      seen.emplace(h, elements.size());
      elements.push_back(std::move(h));
    }
  }
  return elements;
}

/// The finite matrix group generated by `gens`, or nullopt when it has more than `cap` elements.
inline std::optional<PointGroup> matrix_group_closure(std::span<const IntMatrix> gens, std::size_t dimension,
                                                      std::size_t cap = kDefaultClosureCap) {
  auto elements = closure_elements(gens, dimension, cap);
  if (!elements) return std::nullopt;
  return PointGroup(std::move(*elements));
}

inline std::optional<PointGroup> matrix_group_closure(std::span<const IntMatrix> gens,
                                                      std::size_t cap = kDefaultClosureCap) {
  if (gens.empty()) throw DomainError("matrix_group_closure: dimension unknown without generators");
  return matrix_group_closure(gens, gens.front().rows(), cap);
}

}  // namespace crysturn
