#pragma once

#include <string>

#include "crysturn/linalg.hpp"
#include "crysturn/matrix.hpp"

namespace crysturn {

/// The affine map x -> linear * x + translation, written (translation, linear).
struct AffineMap {
  RatVector translation;
  IntMatrix linear;

  static AffineMap identity(std::size_t n) { return {RatVector(n), IntMatrix::identity(n)}; }

  std::size_t dimension() const { return translation.size(); }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

inline void check_shape(const AffineMap& g) {
  if (!g.linear.is_square() || g.linear.rows() != g.translation.size())
    throw DimensionError("affine map: translation length and matrix size disagree");
}

/// (d1, D1)(d2, D2) = (d1 + D1 d2, D1 D2)
inline AffineMap affine_compose(const AffineMap& g1, const AffineMap& g2) {
  check_shape(g1);
  check_shape(g2);
  if (g1.dimension() != g2.dimension()) throw DimensionError("affine_compose: dimension mismatch");
  return {g1.translation + g1.linear * g2.translation, g1.linear * g2.linear};
}

/// (d, D)^{-1} = (-D^{-1} d, D^{-1}); D must lie in GL_n(Z).
inline AffineMap affine_invert(const AffineMap& g) {
  check_shape(g);
  IntMatrix inv = inverse_unimodular(g.linear);
  return {-(inv * g.translation), std::move(inv)};
}

inline AffineMap affine_power(const AffineMap& g, std::size_t k) {
  AffineMap out = AffineMap::identity(g.dimension());
  for (std::size_t i = 0; i < k; ++i) out = affine_compose(out, g);
  return out;
}

inline std::string to_string(const AffineMap& g) {
  return "(" + to_string(g.translation) + ", " + to_string(g.linear) + ")";
}

}  // namespace crysturn
