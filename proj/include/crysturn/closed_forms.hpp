#pragma once

// Closed-form Reidemeister numbers and spectra for the families where they
// are known explicitly.

#include "crysturn/automorphism.hpp"
#include "crysturn/linalg.hpp"
#include "crysturn/spectrum_description.hpp"
#include "crysturn/standard_groups.hpp"

namespace crysturn {

/// Number of classes of x ~ y ⟺ x - y ∈ im(B) or x + y + b ∈ im(B) on Z^n,
/// which is (|det B|_∞ + O(B, b)) / 2.
inline ReidCount e_count(const IntMatrix& b_mat, const IntVector& b_vec) {
  Integer o = mod2_solution_count(b_mat, b_vec);
  Integer d = det(b_mat);
  if (d == 0) return ReidCount::infinity();
  Integer total = abs(d) + o;
  if (!mpz_even_p(total.get_mpz_t())) throw std::logic_error("e_count: |det B| and O(B,b) differ in parity");
  return ReidCount(Integer(total / 2));
}

namespace detail {

inline IntVector doubled(const RatVector& d) {
  IntVector out;
  out.reserve(d.size());
  for (const auto& q : d) {
    Rational twice = 2 * q;
    if (!is_integral(twice)) throw DomainError("translation component " + q.get_str() + " is not in (1/2)Z");
    out.push_back(twice.get_num());
  }
  return out;
}

}  // namespace detail

/// R(ξ_(d,D)) on ⟨Z^n, (0,-I_n)⟩:
/// (|det(I - D)|_∞ + |det(I + D)|_∞) / 2 + O(I - D, 2d).
inline ReidCount reidnr_point_reflection(std::size_t n, const RatVector& d, const IntMatrix& d_mat) {
  if (n < 2) throw DomainError("reidnr_point_reflection requires n >= 2");
  if (d.size() != n || !d_mat.is_square() || d_mat.rows() != n) throw DimensionError("reidnr_point_reflection: size mismatch");
  if (!is_unimodular(d_mat)) throw DomainError("D = " + to_string(d_mat) + " is not in GL_n(Z)");
  const IntVector two_d = detail::doubled(d);
  const IntMatrix id = IntMatrix::identity(n);
  const Integer minus = det(id - d_mat), plus = det(id + d_mat);
  if (minus == 0 || plus == 0) return ReidCount::infinity();
  const Integer total = abs(minus) + abs(plus) + 2 * mod2_solution_count(id - d_mat, two_d);
  if (!mpz_even_p(total.get_mpz_t())) throw std::logic_error("reidnr_point_reflection: odd total");
  return ReidCount(Integer(total / 2));
}

/// R(ξ_(d,D)) on Γ_{3/2/1/2/1} for (d, D) of the form
///   D = [[ε, m1, m2], [0, ε + 2 m1, 2 m2], [0, m3, 1 + 2 m4]],  d = (0, d2, d3)
/// with ε = ±1, d2 ∈ Z and d3 ∈ (1/2)Z:
///   (1/2) Σ_A |det(I - A D)|_∞ + 4 [d3 ∈ Z].
inline ReidCount reidnr_g32121(const RatVector& d, const IntMatrix& d_mat) {
  if (d.size() != 3 || !d_mat.is_square() || d_mat.rows() != 3) throw DimensionError("reidnr_g32121: expects dimension 3");
  const Integer& eps = d_mat(0, 0);
  auto even = [](const Integer& z) { return mpz_even_p(z.get_mpz_t()) != 0; };
  if (d_mat(1, 0) != 0 || d_mat(2, 0) != 0 || (eps != 1 && eps != -1))
    throw DomainError("D is not block upper triangular with corner ±1");
  if (d_mat(1, 1) != eps + 2 * d_mat(0, 1) || d_mat(1, 2) != 2 * d_mat(0, 2) || even(d_mat(2, 2)))
    throw DomainError("lower block of D is not of the form [[ε+2m1, 2m2], [m3, 1+2m4]]");
  if (d[0] != 0 || !is_integral(d[1]) || !is_integral(2 * d[2]))
    throw DomainError("d is not of the form (0, d2, d3) with d2 ∈ Z, d3 ∈ (1/2)Z");

  static const CrystGroup group = g32121_group();
  const AutomorphismSpec phi(group, d, d_mat);

  const IntMatrix id = IntMatrix::identity(3);
  Integer sum = 0;
  for (const auto& a : group.holonomy().elements()) {
    Integer v = det(id - a * phi.linear());
    if (v == 0) return ReidCount::infinity();
    sum += abs(v);
  }
  if (!even(sum)) throw std::logic_error("reidnr_g32121: odd determinant sum");
  Integer value = sum / 2;
  if (is_integral(d[2])) value += 4;
  return ReidCount(value);
}

/// Spec_R(Z^n): N ∪ {∞} for n >= 2 and {2, ∞} for n = 1.
inline SpectrumDescription spectrum_torus(std::size_t n) {
  if (n == 0) throw DomainError("spectrum_torus requires n >= 1");
  if (n == 1) return SpectrumDescription::finite_set({Integer(2)}, true);
  return SpectrumDescription::naturals(true);
}

/// Spec_R(⟨Z^n, (0,-I_n)⟩): 2N ∪ {3, ∞} for n = 2, N \ {1} ∪ {∞} for n >= 3.
inline SpectrumDescription spectrum_point_reflection(std::size_t n) {
  if (n < 2) throw DomainError("spectrum_point_reflection requires n >= 2");
  if (n == 2) return SpectrumDescription::scaled_naturals(2, true).unite(SpectrumDescription::finite_set({Integer(3)}));
  return SpectrumDescription::naturals(true).remove({Integer(1)});
}

}  // namespace crysturn
