#include <gtest/gtest.h>

#include "support.hpp"

using namespace crysturn;

namespace {

RatVector half(long a, long b) { return RatVector{Rational(a, 2), Rational(b, 2)}; }

/// Re-checks every CrystGroup invariant by walking all pairs.
::testing::AssertionResult satisfies_invariants(const CrystGroup& g) {
  const auto& reps = g.f_ext();
  const std::size_t n = g.dimension();
  if (reps.empty() || reps[0].linear != IntMatrix::identity(n) || reps[0].translation != RatVector(n))
    return ::testing::AssertionFailure() << "first representative is not (0, I)";
  std::set<IntMatrix> mats;
  for (const auto& r : reps) {
    if (!mats.insert(r.linear).second) return ::testing::AssertionFailure() << "repeated matrix part";
    for (const auto& q : r.translation)
      if (q < 0 || q >= 1) return ::testing::AssertionFailure() << "translation outside [0,1)";
  }
  for (const auto& a : reps)
    for (const auto& b : reps) {
      const AffineMap ab = affine_compose(a, b);
      auto it = std::find_if(reps.begin(), reps.end(), [&](const AffineMap& c) { return c.linear == ab.linear; });
      if (it == reps.end()) return ::testing::AssertionFailure() << "not closed under products";
      if (!is_integral(ab.translation - it->translation)) return ::testing::AssertionFailure() << "cocycle not integral";
    }
  return ::testing::AssertionSuccess();
}

}  // namespace

TEST(Affine, ComposeExamples) {
  const IntMatrix id = IntMatrix::identity(2);
  EXPECT_EQ(affine_compose({RatVector{1, 0}, id}, {RatVector{0, 1}, id}), (AffineMap{RatVector{1, 1}, id}));
  const AffineMap refl{RatVector{Rational(1, 3), 2}, -id};
  EXPECT_EQ(affine_compose(refl, refl), AffineMap::identity(2));
  const IntMatrix r{{0, -1}, {1, -1}};
  EXPECT_EQ(affine_compose({half(1, 0), r}, {RatVector{0, 0}, r}), (AffineMap{half(1, 0), IntMatrix{{-1, 1}, {-1, 0}}}));
  EXPECT_THROW(affine_compose(AffineMap::identity(2), AffineMap::identity(3)), DimensionError);
}

TEST(Affine, InvertExamples) {
  EXPECT_EQ(affine_invert(AffineMap::identity(2)), AffineMap::identity(2));
  const AffineMap m{RatVector{0, 0}, -IntMatrix::identity(2)};
  EXPECT_EQ(affine_invert(m), m);
  EXPECT_EQ(affine_invert({RatVector{1, 0}, IntMatrix{{1, 1}, {0, 1}}}), (AffineMap{RatVector{-1, 0}, IntMatrix{{1, -1}, {0, 1}}}));
  EXPECT_THROW(affine_invert({RatVector{0, 0}, IntMatrix{{2, 0}, {0, 1}}}), SingularMatrixError);
}

TEST(Affine, AssociativeAndInverse) {
  std::mt19937_64 rng(11);
  const auto& gens = general_linear_generators(3);
  auto random_map = [&] {
    IntMatrix m = IntMatrix::identity(3);
    for (int i = 0; i < 4; ++i) m = m * gens[rng() % gens.size()];
    RatVector t(3);
    for (auto& q : t) {
      q = Rational(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 4) + 1);
      q.canonicalize();
    }
    return AffineMap{t, m};
  };
  for (int k = 0; k < 200; ++k) {
    const AffineMap a = random_map(), b = random_map(), c = random_map();
    EXPECT_EQ(affine_compose(affine_compose(a, b), c), affine_compose(a, affine_compose(b, c)));
    EXPECT_EQ(affine_compose(a, affine_invert(a)), AffineMap::identity(3));
    EXPECT_EQ(affine_compose(affine_invert(a), a), AffineMap::identity(3));
  }
}

TEST(BuildGroup, Examples) {
  const CrystGroup z = build_group(1, {});
  EXPECT_EQ(z.holonomy_order(), 1u);
  EXPECT_EQ(z.f_ext()[0], AffineMap::identity(1));

  const CrystGroup p2 = build_group(2, {AffineMap{RatVector{0, 0}, -IntMatrix::identity(2)}});
  EXPECT_EQ(p2.holonomy_order(), 2u);

  const CrystGroup p3 = build_group(2, {AffineMap{RatVector{0, 0}, IntMatrix{{0, -1}, {1, -1}}}});
  EXPECT_EQ(p3.holonomy_order(), 3u);
  for (const auto* g : {&z, &p2, &p3}) EXPECT_TRUE(satisfies_invariants(*g));
}

TEST(BuildGroup, CanonicalisesTranslations) {
  const CrystGroup g = build_group(3, {AffineMap{RatVector{2, -1, Rational(-1, 2)}, IntMatrix{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}}});
  EXPECT_EQ(g.f_ext()[1].translation, (RatVector{0, 0, Rational(1, 2)}));
  EXPECT_EQ(g.generators()[0].translation, (RatVector{0, 0, Rational(1, 2)}));
}

TEST(BuildGroup, Rejections) {
  EXPECT_THROW(build_group(2, {AffineMap{RatVector{0, 0}, IntMatrix{{1, 1}, {0, 1}}}}), InvalidGroupError);
  EXPECT_THROW(build_group(2, {AffineMap{RatVector{0, 0}, IntMatrix{{2, 0}, {0, 1}}}}), InvalidGroupError);
  // Two generators with matrix -1 whose translations differ by 1/4.
  EXPECT_THROW(build_group(1, {AffineMap{RatVector{Rational(1, 4)}, IntMatrix{{-1}}}, AffineMap{RatVector{0}, IntMatrix{{-1}}}}),
               InvalidGroupError);
  // Screw of order 2 with a quarter translation: its square is a non-lattice translation.
  EXPECT_THROW(build_group(3, {AffineMap{RatVector{0, 0, Rational(1, 4)}, IntMatrix{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}}}),
               InvalidGroupError);
  EXPECT_THROW(build_group(2, {AffineMap{RatVector{0}, -IntMatrix::identity(2)}}), InvalidGroupError);
  EXPECT_THROW(build_group(2, std::span<const AffineMap>(), std::vector<IntMatrix>{IntMatrix{{2, 0}, {0, 1}}}),
               InvalidGroupError);
  // A shear does not normalise the rotation group of order 3.
  EXPECT_THROW(build_group(2, {AffineMap{RatVector{0, 0}, IntMatrix{{0, -1}, {1, -1}}}}, std::vector<IntMatrix>{IntMatrix{{1, 1}, {0, 1}}}),
               InvalidGroupError);
}

TEST(Membership, Examples) {
  const CrystGroup z2 = torus_group(2);
  EXPECT_TRUE(group_contains(z2, {RatVector{3, -2}, IntMatrix::identity(2)}));
  const CrystGroup p2 = point_reflection_group(2);
  EXPECT_FALSE(group_contains(p2, {half(1, 0), -IntMatrix::identity(2)}));
  const CrystGroup g = g32121_group();
  EXPECT_TRUE(group_contains(g, {RatVector{1, 2, -1}, IntMatrix{{1, -1, 0}, {0, -1, 0}, {0, 0, -1}}}));
  EXPECT_FALSE(group_contains(g, {RatVector{0, 0, 0}, IntMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}}));
}

TEST(Membership, ClosedUnderProductsAndInverses) {
  std::mt19937_64 rng(12);
  for (const char* name : {"3/3/1/1/4", "3/2/1/1/2", "3/3/1/4/2", "pg"}) {
    const CrystGroup g = builtin_catalog().group(name);
    for (int k = 0; k < 100; ++k) {
      const AffineMap a = testutil::random_element(rng, g), b = testutil::random_element(rng, g);
      EXPECT_TRUE(group_contains(g, affine_compose(a, b))) << name;
      EXPECT_TRUE(group_contains(g, affine_invert(a))) << name;
    }
  }
}

TEST(Bieberbach, Examples) {
  EXPECT_TRUE(is_bieberbach(torus_group(3)));
  EXPECT_FALSE(is_bieberbach(point_reflection_group(2)));
  const CrystGroup p21 = build_group(3, {AffineMap{RatVector{0, 0, Rational(1, 2)}, IntMatrix{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}}});
  EXPECT_TRUE(is_bieberbach(p21));
}

TEST(Bieberbach, AgreesWithDirectPowerOnCatalog) {
  // Torsion iff some element (x + a, A), A != I, has (x + a, A)^ord(A) = identity.
  for (const auto& [name, file] : builtin_catalog().entries()) {
    const CrystGroup g = to_group(file);
    bool torsion = false;
    for (std::size_t i = 1; i < g.holonomy_order() && !torsion; ++i) {
      const std::size_t m = g.holonomy().element_order(i);
      const std::size_t n = g.dimension();
      std::vector<long> x(n, -2);
      for (;;) {
        AffineMap e = g.f_ext()[i];
        for (std::size_t c = 0; c < n; ++c) e.translation[c] += x[c];
        if (affine_power(e, m) == AffineMap::identity(n)) {
          torsion = true;
          break;
        }
        std::size_t c = 0;
        while (c < n && ++x[c] > 2) x[c++] = -2;
        if (c == n) break;
      }
    }
    EXPECT_EQ(is_bieberbach(g), !torsion) << name;
  }
}

TEST(Closure, Examples) {
  const std::vector<IntMatrix> neg{-IntMatrix::identity(2)};
  EXPECT_EQ(matrix_group_closure(neg)->order(), 2u);
  const std::vector<IntMatrix> hex{IntMatrix{{1, -1}, {1, 0}}, IntMatrix{{0, 1}, {1, 0}}};
  EXPECT_EQ(matrix_group_closure(hex)->order(), 12u);
  const std::vector<IntMatrix> shear{IntMatrix{{1, 1}, {0, 1}}};
  EXPECT_FALSE(matrix_group_closure(shear).has_value());
  const std::vector<IntMatrix> bad{IntMatrix{{2, 0}, {0, 1}}};
  EXPECT_THROW(matrix_group_closure(bad), DomainError);
}

TEST(Closure, TablesConsistent) {
  const std::vector<IntMatrix> gens{IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
                                    IntMatrix{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const auto f = matrix_group_closure(gens);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->order(), 48u);
  EXPECT_TRUE(f->elements()[0].is_identity());
  for (std::size_t i = 0; i < f->order(); ++i) {
    EXPECT_EQ(f->product(i, f->inverse(i)), 0u);
    for (std::size_t j = 0; j < f->order(); j += 7) EXPECT_EQ((*f)[f->product(i, j)], (*f)[i] * (*f)[j]);
  }
}

TEST(Labels, StoredOnGroup) {
  const CrystGroup g = g32121_group();
  EXPECT_EQ(g.labels().at("bbnwz"), "3/2/1/2/1");
  EXPECT_EQ(g.labels().at("it"), "3/5");
}
