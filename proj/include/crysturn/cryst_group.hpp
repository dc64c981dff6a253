#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crysturn/affine.hpp"
#include "crysturn/error.hpp"
#include "crysturn/linalg.hpp"
#include "crysturn/point_group.hpp"

namespace crysturn {

/// A crystallographic group Γ = ⟨Z^n, F_ext⟩ inside Aff(R^n) whose pure
/// translations are exactly Z^n.
///
/// f_ext()[i] is the canonical representative (a_i, A_i) with every
/// component of a_i in [0, 1); its matrix part is holonomy()[i], and entry 0
/// is (0, I_n). Instances are immutable once built.
class CrystGroup {
 public:
  std::size_t dimension() const { return dimension_; }
  const std::string& name() const { return name_; }
  const std::map<std::string, std::string>& labels() const { return labels_; }

  const std::vector<AffineMap>& f_ext() const { return f_ext_; }
  const PointGroup& holonomy() const { return holonomy_; }
  std::size_t holonomy_order() const { return f_ext_.size(); }

  /// The non-lattice generators the group was built from, canonicalised.
  const std::vector<AffineMap>& generators() const { return generators_; }
  const std::optional<std::vector<IntMatrix>>& normaliser_generators() const { return normaliser_gens_; }

 private:
  friend CrystGroup build_group(std::size_t, std::span<const AffineMap>, std::optional<std::vector<IntMatrix>>,
                                std::map<std::string, std::string>, std::string, std::size_t);

  std::size_t dimension_ = 0;
  std::string name_;
  std::map<std::string, std::string> labels_;
  std::vector<AffineMap> f_ext_;
  PointGroup holonomy_;
  std::vector<AffineMap> generators_;
  std::optional<std::vector<IntMatrix>> normaliser_gens_;
};

/// Reduces every translation component into [0, 1).
inline RatVector canonical_translation(const RatVector& t) {
  RatVector out;
  out.reserve(t.size());
  for (const auto& q : t) out.push_back(frac(q));
  return out;
}

/// Closes the matrix parts of `generators` into the holonomy group F, picks
/// the canonical representative per element of F and validates the result.
///
/// Throws InvalidGroupError naming the violated invariant when the data does
/// not describe a crystallographic group with translation lattice Z^n.
inline CrystGroup build_group(std::size_t dimension, std::span<const AffineMap> generators,
                              std::optional<std::vector<IntMatrix>> normaliser_gens = std::nullopt,
                              std::map<std::string, std::string> labels = {}, std::string name = {},
                              std::size_t cap = kDefaultClosureCap) {
  if (dimension == 0) throw InvalidGroupError("dimension must be positive");
  std::vector<AffineMap> gens;
  for (const auto& g : generators) {
    if (g.translation.size() != dimension || !g.linear.is_square() || g.linear.rows() != dimension)
      throw InvalidGroupError("generator " + to_string(g) + " does not have dimension " + std::to_string(dimension));
    if (!is_unimodular(g.linear))
      throw InvalidGroupError("generator matrix " + to_string(g.linear) + " is not in GL_n(Z)");
    gens.push_back({canonical_translation(g.translation), g.linear});
  }

  std::vector<AffineMap> reps{AffineMap::identity(dimension)};
  std::map<IntMatrix, std::size_t> index{{reps.front().linear, 0}};
  for (std::size_t idx = 0; idx < reps.size(); ++idx) {
    for (const auto& g : gens) {
      AffineMap h = affine_compose(reps[idx], g);
      if (index.contains(h.linear)) continue;
      if (reps.size() >= cap)
        throw InvalidGroupError("point group closure exceeds " + std::to_string(cap) + " elements (F is not finite)");
      h.translation = canonical_translation(h.translation);
      index.emplace(h.linear, reps.size());
      reps.push_back(std::move(h));
    }
  }

  const std::size_t k = reps.size();
  for (const auto& g : gens) {
    const auto& rep = reps[index.at(g.linear)];
    if (!is_integral(g.translation - rep.translation))
      throw InvalidGroupError("cocycle closure violated: generator " + to_string(g) +
                              " adds translations outside Z^n");
  }
  std::vector<IntMatrix> mats;
  mats.reserve(k);
  for (const auto& r : reps) mats.push_back(r.linear);
  PointGroup holonomy(std::move(mats));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const auto& ai = reps[i];
      const auto& aj = reps[j];
      const auto& ak = reps[holonomy.product(i, j)];
      if (!is_integral(ai.translation + ai.linear * aj.translation - ak.translation))
        throw InvalidGroupError("cocycle closure violated: a_" + std::to_string(i) + " + A_" + std::to_string(i) +
                                " a_" + std::to_string(j) + " - a_k is not integral");
    }

  if (normaliser_gens) {
    for (const auto& d : *normaliser_gens) {
      if (!d.is_square() || d.rows() != dimension)
        throw InvalidGroupError("normaliser generator has the wrong size");
      if (!is_unimodular(d)) throw InvalidGroupError("normaliser generator " + to_string(d) + " is not in GL_n(Z)");
      IntMatrix d_inv = inverse_unimodular(d);
      for (const auto& a : holonomy.elements())
        if (!holonomy.contains(d * a * d_inv))
          throw InvalidGroupError("normaliser generator " + to_string(d) + " does not normalise F");
    }
  }

  CrystGroup g;
  g.dimension_ = dimension;
  g.name_ = std::move(name);
  g.labels_ = std::move(labels);
  g.f_ext_ = std::move(reps);
  g.holonomy_ = std::move(holonomy);
  g.generators_ = std::move(gens);
  g.normaliser_gens_ = std::move(normaliser_gens);
  return g;
}

inline CrystGroup build_group(std::size_t dimension, std::initializer_list<AffineMap> generators,
                              std::optional<std::vector<IntMatrix>> normaliser_gens = std::nullopt) {
  return build_group(dimension, std::span<const AffineMap>(generators.begin(), generators.size()),
                     std::move(normaliser_gens));
}

/// True iff elem ∈ Γ: its matrix part lies in F and its translation differs
/// from the matching representative by a lattice vector.
inline bool group_contains(const CrystGroup& g, const AffineMap& elem) {
  if (elem.dimension() != g.dimension() || elem.linear.rows() != g.dimension())
    throw DimensionError("group_contains: dimension mismatch");
  auto i = g.holonomy().index_of(elem.linear);
  if (!i) return false;
  return is_integral(elem.translation - g.f_ext()[*i].translation);
}

/// Index of elem's matrix part in F; elem must belong to Γ.
inline std::size_t holonomy_index(const CrystGroup& g, const AffineMap& elem) {
  auto i = g.holonomy().index_of(elem.linear);
  if (!i || !is_integral(elem.translation - g.f_ext()[*i].translation))
    throw DomainError("element " + to_string(elem) + " is not in the group");
  return *i;
}

/// Σ_{i<m} A^i for A of order m.
inline IntMatrix norm_matrix(const PointGroup& f, std::size_t i) {
  const std::size_t n = f.dimension();
  IntMatrix sum(n, n);
  std::size_t cur = 0;
  do {
    sum = sum + f[cur];
    cur = f.product(cur, i);
  } while (cur != 0);
  return sum;
}

/// True iff Γ is torsion-free.
///
/// (x + a, A) has finite order iff N_A (x + a) = 0 with N_A = Σ A^i, so Γ has
/// torsion iff -N_A a ∈ im(N_A) for some A ≠ I.
inline bool is_bieberbach(const CrystGroup& g) {
  const auto& f = g.holonomy();
  for (std::size_t i = 1; i < f.order(); ++i) {
    IntMatrix n_a = norm_matrix(f, i);
    if (in_lattice_image(n_a, -(n_a * g.f_ext()[i].translation))) return false;
  }
  return true;
}

}  // namespace crysturn
