#pragma once

#include <vector>

#include "crysturn/cryst_group.hpp"

namespace crysturn {

/// A generating set of GL_n(Z): the n-cycle and a transposition of basis
/// vectors, one elementary shear and one sign change (just {-1} for n = 1).
inline std::vector<IntMatrix> general_linear_generators(std::size_t n) {
  if (n == 1) return {IntMatrix{{-1}}};
  IntMatrix cycle(n, n), swap = IntMatrix::identity(n), shear = IntMatrix::identity(n), sign = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) cycle((i + 1) % n, i) = 1;
  swap(0, 0) = swap(1, 1) = 0;
  swap(0, 1) = swap(1, 0) = 1;
  shear(0, 1) = 1;
  sign(0, 0) = -1;
  std::vector<IntMatrix> gens{cycle, swap, shear, sign};
  if (n == 2) gens.erase(gens.begin());
  return gens;
}

/// Z^n, with N_F = GL_n(Z).
inline CrystGroup torus_group(std::size_t n) {
  return build_group(n, std::span<const AffineMap>(), general_linear_generators(n), {}, "Z^" + std::to_string(n));
}

/// ⟨Z^n, (0, -I_n)⟩, with N_F = GL_n(Z).
inline CrystGroup point_reflection_group(std::size_t n) {
  std::vector<AffineMap> gens{{RatVector(n), -IntMatrix::identity(n)}};
  return build_group(n, gens, general_linear_generators(n), {}, "<Z^" + std::to_string(n) + ",-I>");
}

/// ⟨Z^3, (0, A)⟩ with A = [[1,-1,0],[0,-1,0],[0,0,-1]] (BBNWZ 3/2/1/2/1).
/// The supplied normaliser generators lie in N_F but need not generate it.
inline CrystGroup g32121_group() {
  std::vector<AffineMap> gens{{RatVector(3), IntMatrix{{1, -1, 0}, {0, -1, 0}, {0, 0, -1}}}};
  std::vector<IntMatrix> normaliser{
      -IntMatrix::identity(3),
      IntMatrix{{-1, 1, 1}, {0, 1, 2}, {0, 1, 1}},
      IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 1, 1}},
      IntMatrix{{1, 0, 1}, {0, 1, 2}, {0, 0, 1}},
  };
  return build_group(3, gens, normaliser, {{"bbnwz", "3/2/1/2/1"}, {"it", "3/5"}, {"carat", "min.7-1.2-0"}},
                     "3/2/1/2/1");
}

}  // namespace crysturn
