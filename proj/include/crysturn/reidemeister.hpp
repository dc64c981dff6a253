#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "crysturn/automorphism.hpp"
#include "crysturn/cryst_group.hpp"
#include "crysturn/error.hpp"
#include "crysturn/linalg.hpp"
#include "crysturn/point_group.hpp"

namespace crysturn {

/// True iff det(I - A D) = 0 for some A ∈ F, i.e. R(ξ_(d,D)) = ∞ for every
/// admissible d.
inline bool infinite_test(const CrystGroup& g, const IntMatrix& d_mat) {
  conjugation_permutation(g, d_mat);
  const IntMatrix id = IntMatrix::identity(g.dimension());
  for (const auto& a : g.holonomy().elements())
    if (det(id - a * d_mat) == 0) return true;
  return false;
}

/// R(φ) = (1/|F|) Σ_A |det(I - A D)|_∞; only valid for Bieberbach groups.
inline ReidCount averaging_number(const CrystGroup& g, const AutomorphismSpec& phi) {
  if (!is_bieberbach(g)) throw DomainError("averaging formula requires a torsion-free group");
  const IntMatrix id = IntMatrix::identity(g.dimension());
  Integer sum = 0;
  for (const auto& a : g.holonomy().elements()) {
    Integer v = det(id - a * phi.linear());
    if (v == 0) return ReidCount::infinity();
    sum += abs(v);
  }
  const Integer order = static_cast<unsigned long>(g.holonomy_order());
  if (!mpz_divisible_p(sum.get_mpz_t(), order.get_mpz_t()))
    throw std::logic_error("averaging formula produced a non-integer");
  return ReidCount(Integer(sum / order));
}

/// How class merging finds equivalent candidates.
enum class MergeStrategy {
  /// For each candidate and each (c, C) ∈ F_ext, compute the unique coset it
  /// is equivalent to and union the two.
  kCosetLookup,
  /// Test every pair of candidates with the explicit two-condition check.
  kPairwise,
};

/// A candidate representative (x + a_i, A_i) of a twisted conjugacy class.
struct ClassCandidate {
  std::size_t holonomy_index;
  IntVector offset;  // x
};

/// Whether (x + a_i, A_i) and (y + a_j, A_j) are φ-twisted conjugate: some
/// (c, C) ∈ F_ext has A_i = C A_j D C^{-1} D^{-1} and
/// (I - A_i D)^{-1}(x + a_i - C(y + a_j) - (C A_j - A_i) d) - c ∈ Z^n.
/// Requires det(I - A_i D) ≠ 0.
inline bool twisted_equivalent(const AutomorphismSpec& phi, const ClassCandidate& lhs, const ClassCandidate& rhs) {
  const CrystGroup& g = phi.group();
  const auto& f = g.holonomy();
  const IntMatrix& d_mat = phi.linear();
  const IntMatrix d_inv = inverse_unimodular(d_mat);
  const IntMatrix& a = f[lhs.holonomy_index];
  const IntMatrix& b = f[rhs.holonomy_index];
  const IntMatrix lhs_complement = IntMatrix::identity(g.dimension()) - a * d_mat;
  const RatVector x_plus_a = to_rational(lhs.offset) + g.f_ext()[lhs.holonomy_index].translation;
  const RatVector y_plus_b = to_rational(rhs.offset) + g.f_ext()[rhs.holonomy_index].translation;
  for (std::size_t c = 0; c < f.order(); ++c) {
    const IntMatrix& cm = f[c];
    if (cm * b * d_mat * f[f.inverse(c)] * d_inv != a) continue;
    RatVector rhs_vec = x_plus_a - cm * y_plus_b - (cm * b - a) * phi.d();
    RatVector w = solve_exact(lhs_complement, rhs_vec) - g.f_ext()[c].translation;
    if (is_integral(w)) return true;
  }
  return false;
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  std::size_t components() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) c += find(i) == i;
    return c;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// The Reidemeister number R(φ) of φ = ξ_(d,D).
///
/// Returns ∞ when some det(I - A D) vanishes. Otherwise every class has a
/// representative (x + a, A) with x drawn from a fixed transversal of
/// Z^n / im(I - A D); candidates are merged with a union-find and the
/// surviving components counted.
inline ReidCount reidemeister_number(const AutomorphismSpec& phi, MergeStrategy strategy = MergeStrategy::kCosetLookup) {
  const CrystGroup& g = phi.group();
  const auto& f = g.holonomy();
  const std::size_t n = g.dimension(), k = f.order();
  const IntMatrix id = IntMatrix::identity(n);
  const IntMatrix& d_mat = phi.linear();

  std::vector<IntMatrix> complements;
  complements.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    complements.push_back(id - f[i] * d_mat);
    if (det(complements.back()) == 0) return ReidCount::infinity();
  }

  std::vector<LatticeCosets> cosets;
  std::vector<std::size_t> offset(k + 1, 0);
  cosets.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    cosets.emplace_back(complements[i]);
    offset[i + 1] = offset[i] + cosets.back().count().get_ui();
  }
  detail::DisjointSets classes(offset[k]);

  if (strategy == MergeStrategy::kPairwise) {
    std::vector<ClassCandidate> candidates;
    candidates.reserve(offset[k]);
    for (std::size_t i = 0; i < k; ++i)
      for (auto& x : cosets[i].representatives()) candidates.push_back({i, std::move(x)});
    for (std::size_t p = 0; p < candidates.size(); ++p)
      for (std::size_t q = p + 1; q < candidates.size(); ++q) {
        if (classes.find(p) == classes.find(q)) continue;
        if (twisted_equivalent(phi, candidates[q], candidates[p])) classes.unite(p, q);
      }
    return ReidCount(Integer(static_cast<unsigned long>(classes.components())));
  }

  // (c, C)(y + b, B)φ((c, C))^{-1} = (v + a_A, A) with A = C B D C^{-1} D^{-1};
  // multiplying by lattice elements only moves v within its coset.
  const HolonomyPermutation sigma = conjugation_permutation(g, d_mat);
  for (std::size_t j = 0; j < k; ++j) {
    const IntMatrix& b = f[j];
    const RatVector& b_t = g.f_ext()[j].translation;
    for (std::size_t y_idx = 0; y_idx < offset[j + 1] - offset[j]; ++y_idx) {
      const RatVector y_plus_b = to_rational(cosets[j].representative(y_idx)) + b_t;
      for (std::size_t c = 0; c < k; ++c) {
        const std::size_t target = f.product(f.product(c, j), sigma(f.inverse(c)));
        const IntMatrix& cm = f[c];
        const IntMatrix& a = f[target];
        RatVector v = cm * y_plus_b + (cm * b - a) * phi.d() + complements[target] * g.f_ext()[c].translation -
                      g.f_ext()[target].translation;
        if (!is_integral(v)) throw std::logic_error("reidemeister_number: twisted conjugate left the group");
        classes.unite(offset[j] + y_idx, offset[target] + cosets[target].index_of(to_integer(v)));
      }
    }
  }
  return ReidCount(Integer(static_cast<unsigned long>(classes.components())));
}

/// {R(φ) : φ ∈ Aut(Γ), φ restricted to Z^n equals D}; empty when no
/// automorphism has linear part D.
inline std::set<ReidCount> reidemeister_set_for_D(const CrystGroup& g, const IntMatrix& d_mat) {
  std::set<ReidCount> out;
  auto d = find_translation_part(g, d_mat);
  if (!d) return out;
  if (infinite_test(g, d_mat)) {
    out.insert(ReidCount::infinity());
    return out;
  }
  for (const auto& base : delta_base(g)) out.insert(reidemeister_number(AutomorphismSpec(g, base + *d, d_mat)));
  return out;
}

/// Outcome of the R∞ decision procedure.
struct RInfinityVerdict {
  enum class Kind {
    kHolds,                 // every automorphism has R(φ) = ∞
    kFails,                 // `witness` admits an automorphism with finite R(φ)
    kUndecidedInfinite,     // normaliser closure exceeded the cap
    kUndecidedNoNormaliser  // no normaliser generators supplied
  };
  Kind kind;
  std::optional<IntMatrix> witness;
  std::optional<std::size_t> normaliser_order;

  bool decided() const { return kind == Kind::kHolds || kind == Kind::kFails; }
};

/// Elements of N_F in breadth-first discovery order from the sorted generators.
inline std::optional<std::vector<IntMatrix>> enumerate_normaliser(const CrystGroup& g, std::size_t cap = kDefaultClosureCap) {
  if (!g.normaliser_generators()) throw DomainError("group '" + g.name() + "' has no normaliser data");
  std::vector<IntMatrix> gens = *g.normaliser_generators();
  std::sort(gens.begin(), gens.end());
  return closure_elements(gens, g.dimension(), cap);
}

/// Decides the R∞-property for finite N_F: Γ lacks it iff some D ∈ N_F
/// admits a d with ξ_(d,D) ∈ Aut(Γ) and det(I - A D) ≠ 0 for all A ∈ F.
inline RInfinityVerdict has_r_infinity(const CrystGroup& g, std::size_t cap = kDefaultClosureCap) {
  using Kind = RInfinityVerdict::Kind;
  if (!g.normaliser_generators()) return {Kind::kUndecidedNoNormaliser, std::nullopt, std::nullopt};
  auto normaliser = enumerate_normaliser(g, cap);
  if (!normaliser) return {Kind::kUndecidedInfinite, std::nullopt, std::nullopt};
  for (const auto& d_mat : *normaliser)
    if (!infinite_test(g, d_mat) && find_translation_part(g, d_mat)) return {Kind::kFails, d_mat, normaliser->size()};
  return {Kind::kHolds, std::nullopt, normaliser->size()};
}

/// Spec_R(Γ) for a group with finite normaliser.
struct ComputedSpectrum {
  std::set<Integer> finite_values;
  bool contains_infinity = false;
  /// Always relative to the supplied normaliser generators, which are trusted
  /// to generate all of N_F.
  bool normaliser_complete = true;
  std::size_t normaliser_order = 0;
};

inline ComputedSpectrum spectrum(const CrystGroup& g, std::size_t cap = kDefaultClosureCap) {
  auto normaliser = enumerate_normaliser(g, cap);
  if (!normaliser)
    throw CapExceededError("normaliser of '" + g.name() + "' exceeds " + std::to_string(cap) + " elements");
  ComputedSpectrum out;
  out.normaliser_order = normaliser->size();
  for (const auto& d_mat : *normaliser)
    for (const auto& r : reidemeister_set_for_D(g, d_mat)) {
      if (r.is_infinite())
        out.contains_infinity = true;
      else
        out.finite_values.insert(r.value());
    }
  return out;
}

/// Breadth-first search over words of length <= max_word_length in the
/// normaliser generators and their inverses for a D that admits an
/// automorphism with finite Reidemeister number. A hit proves Γ lacks R∞;
/// a miss proves nothing.
inline std::optional<IntMatrix> find_nonvanishing_D(const CrystGroup& g, std::size_t max_word_length) {
  if (!g.normaliser_generators()) throw DomainError("group '" + g.name() + "' has no normaliser data");
  std::vector<IntMatrix> letters = *g.normaliser_generators();
  std::sort(letters.begin(), letters.end());
  const std::size_t gen_count = letters.size();
  for (std::size_t i = 0; i < gen_count; ++i) {
    IntMatrix inv = inverse_unimodular(letters[i]);
    if (std::find(letters.begin(), letters.end(), inv) == letters.end()) letters.push_back(std::move(inv));
  }
  std::set<IntMatrix> seen{IntMatrix::identity(g.dimension())};
  std::vector<IntMatrix> level{IntMatrix::identity(g.dimension())};
  auto qualifies = [&](const IntMatrix& d_mat) { return !infinite_test(g, d_mat) && find_translation_part(g, d_mat).has_value(); };
  if (qualifies(level.front())) return level.front();
  for (std::size_t len = 1; len <= max_word_length; ++len) {
    std::vector<IntMatrix> next;
    for (const auto& w : level)
      for (const auto& l : letters) {
        IntMatrix d_mat = w * l;
        if (!seen.insert(d_mat).second) continue;
        if (qualifies(d_mat)) return d_mat;
        next.push_back(std::move(d_mat));
      }
    level = std::move(next);
  }
  return std::nullopt;
}

}  // namespace crysturn
