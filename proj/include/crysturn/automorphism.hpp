#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "crysturn/affine.hpp"
#include "crysturn/cryst_group.hpp"
#include "crysturn/error.hpp"
#include "crysturn/linalg.hpp"

namespace crysturn {

/// The permutation σ of F induced by A ↦ D A D^{-1}: A_{σ(i)} = D A_i D^{-1}.
struct HolonomyPermutation {
  std::vector<std::size_t> sigma;

  std::size_t operator()(std::size_t i) const { return sigma[i]; }

  /// (a ∘ b)(i) = a(b(i))
  friend HolonomyPermutation operator*(const HolonomyPermutation& a, const HolonomyPermutation& b) {
    HolonomyPermutation c{std::vector<std::size_t>(b.sigma.size())};
    for (std::size_t i = 0; i < b.sigma.size(); ++i) c.sigma[i] = a.sigma[b.sigma[i]];
    return c;
  }
  friend bool operator==(const HolonomyPermutation&, const HolonomyPermutation&) = default;
};

inline HolonomyPermutation conjugation_permutation(const CrystGroup& g, const IntMatrix& d) {
  if (!d.is_square() || d.rows() != g.dimension()) throw DimensionError("conjugation_permutation: size mismatch");
  const IntMatrix d_inv = inverse_unimodular(d);
  const auto& f = g.holonomy();
  HolonomyPermutation perm{std::vector<std::size_t>(f.order())};
  for (std::size_t i = 0; i < f.order(); ++i) {
    auto j = f.index_of(d * f[i] * d_inv);
    if (!j) throw NotNormalisingError("matrix " + to_string(d) + " does not normalise the holonomy group");
    perm.sigma[i] = *j;
  }
  return perm;
}

/// True iff (d, D)(a, A)(d, D)^{-1} ∈ Γ for every representative in F_ext.
inline bool conjugates_into_group(const CrystGroup& g, const RatVector& d, const IntMatrix& d_mat) {
  const AffineMap x{d, d_mat};
  const AffineMap x_inv = affine_invert(x);
  for (const auto& rep : g.f_ext())
    if (!group_contains(g, affine_compose(affine_compose(x, rep), x_inv))) return false;
  return true;
}

/// A validated automorphism ξ_(d,D): γ ↦ (d, D) γ (d, D)^{-1} of a group.
///
/// Holds a pointer to its group; the group must outlive the spec.
class AutomorphismSpec {
 public:
  /// Throws InvalidAutomorphismError (or NotNormalisingError) unless ξ_(d,D)
  /// maps every element of F_ext into Γ.
  AutomorphismSpec(const CrystGroup& group, RatVector d, IntMatrix d_mat) : group_(&group), d_(std::move(d)), d_mat_(std::move(d_mat)) {
    if (d_.size() != group.dimension() || !d_mat_.is_square() || d_mat_.rows() != group.dimension())
      throw DimensionError("automorphism data has the wrong dimension");
    if (!is_unimodular(d_mat_)) throw InvalidAutomorphismError("D = " + to_string(d_mat_) + " is not in GL_n(Z)");
    conjugation_permutation(group, d_mat_);
    if (!conjugates_into_group(group, d_, d_mat_))
      throw InvalidAutomorphismError("(d, D) = " + to_string(AffineMap{d_, d_mat_}) +
                                     " does not conjugate the group into itself");
  }

  static AutomorphismSpec identity(const CrystGroup& group) {
    return AutomorphismSpec(group, RatVector(group.dimension()), IntMatrix::identity(group.dimension()));
  }

  /// The inner automorphism x ↦ γ x γ^{-1}.
  static AutomorphismSpec inner(const CrystGroup& group, const AffineMap& gamma) {
    if (!group_contains(group, gamma)) throw DomainError("inner: element is not in the group");
    return AutomorphismSpec(group, gamma.translation, gamma.linear);
  }

  const CrystGroup& group() const { return *group_; }
  const RatVector& d() const { return d_; }
  const IntMatrix& linear() const { return d_mat_; }
  AffineMap as_affine() const { return {d_, d_mat_}; }

 private:
  const CrystGroup* group_;
  RatVector d_;
  IntMatrix d_mat_;
};

/// φ(γ) = (d, D) γ (d, D)^{-1}; γ must belong to the group.
inline AffineMap apply(const AutomorphismSpec& phi, const AffineMap& gamma) {
  if (!group_contains(phi.group(), gamma)) throw DomainError("apply: element " + to_string(gamma) + " is not in the group");
  const AffineMap x = phi.as_affine();
  return affine_compose(affine_compose(x, gamma), affine_invert(x));
}

/// ξ_(d1,D1) ∘ ξ_(d2,D2) = ξ_(d1 + D1 d2, D1 D2)
inline AutomorphismSpec compose(const AutomorphismSpec& phi1, const AutomorphismSpec& phi2) {
  if (&phi1.group() != &phi2.group()) throw DomainError("compose: automorphisms of different groups");
  AffineMap c = affine_compose(phi1.as_affine(), phi2.as_affine());
  return AutomorphismSpec(phi1.group(), std::move(c.translation), std::move(c.linear));
}

namespace detail {

inline IntMatrix stacked_holonomy_complement(const CrystGroup& g, const HolonomyPermutation& sigma) {
  const std::size_t n = g.dimension();
  const IntMatrix id = IntMatrix::identity(n);
  std::vector<IntMatrix> blocks;
  blocks.reserve(g.holonomy_order());
  for (std::size_t i = 0; i < g.holonomy_order(); ++i) blocks.push_back(id - g.holonomy()[sigma(i)]);
  return vstack<Integer>(blocks);
}

}  // namespace detail

/// Finds d such that ξ_(d,D) is an automorphism, or nullopt if none exists.
///
/// Stacks M = (I - A_σ(i))_i and m = (D a_i - a_σ(i))_i, takes P M Q = S and
/// t = P m. A solution exists iff t_i ∈ Z beyond the rank r; the returned d
/// is Q d' with d'_i = -t_i / s_i for i < r and 0 elsewhere.
inline std::optional<RatVector> find_translation_part(const CrystGroup& g, const IntMatrix& d_mat) {
  const HolonomyPermutation sigma = conjugation_permutation(g, d_mat);
  const std::size_t n = g.dimension();
  const IntMatrix big_m = detail::stacked_holonomy_complement(g, sigma);
  RatVector small_m;
  small_m.reserve(n * g.holonomy_order());
  for (std::size_t i = 0; i < g.holonomy_order(); ++i) {
    RatVector block = d_mat * g.f_ext()[i].translation - g.f_ext()[sigma(i)].translation;
    small_m.insert(small_m.end(), block.begin(), block.end());
  }
  const SnfDecomposition snf = smith_normal_form(big_m);
  const RatVector t = snf.p * small_m;
  const std::size_t r = snf.rank();
  for (std::size_t i = r; i < t.size(); ++i)
    if (!is_integral(t[i])) return std::nullopt;
  RatVector d_prime(n);
  for (std::size_t i = 0; i < r; ++i) d_prime[i] = -t[i] / Rational(snf.invariant_factors[i]);
  RatVector d = snf.q * d_prime;
  if (!conjugates_into_group(g, d, d_mat))
    throw std::logic_error("find_translation_part: computed d fails the automorphism check");
  return d;
}

/// Translations d^base such that every automorphism acting trivially on Z^n
/// is an inner automorphism composed with some ξ_(d^base, I).
///
/// Taken from the SNF of M = (I - A_i)_i: all Q d' with d'_i ∈ {0, 1/s_i, ..,
/// (s_i - 1)/s_i} for i < r and 0 elsewhere, first coordinate varying slowest.
inline std::vector<RatVector> delta_base(const CrystGroup& g) {
  const std::size_t n = g.dimension();
  HolonomyPermutation id{std::vector<std::size_t>(g.holonomy_order())};
  for (std::size_t i = 0; i < id.sigma.size(); ++i) id.sigma[i] = i;
  const SnfDecomposition snf = smith_normal_form(detail::stacked_holonomy_complement(g, id));
  const auto& s = snf.invariant_factors;

  std::vector<RatVector> out;
  std::vector<unsigned long> digit(s.size(), 0);
  for (;;) {
    RatVector d_prime(n);
    for (std::size_t i = 0; i < s.size(); ++i) d_prime[i] = Rational(Integer(digit[i]), s[i]);
    for (auto& q : d_prime) q.canonicalize();
    out.push_back(snf.q * d_prime);
    std::size_t pos = s.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < s[pos].get_ui()) break;
      digit[pos] = 0;
      if (pos == 0) return out;
    }
    if (s.empty()) return out;
  }
}

}  // namespace crysturn
