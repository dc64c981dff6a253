#pragma once

// Test-side oracles and random generators. Nothing here calls the library's
// determinant, Smith form, coset or Z_2 routines.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "crysturn/crysturn.hpp"

namespace oracle {

using namespace crysturn;

/// Laplace expansion along the first row.
inline Integer det_cofactor(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    Integer term = m(0, c) * det_cofactor(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

/// Lower triangular column Hermite form H = B U with positive diagonal
/// (B nonsingular). The cosets of im(B) are the x with 0 <= x_i < H_ii.
inline IntMatrix hermite_lower(IntMatrix h) {
  const std::size_t n = h.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (;;) {
      std::size_t pivot = n;
      for (std::size_t j = i; j < n; ++j)
        if (h(i, j) != 0 && (pivot == n || abs(h(i, j)) < abs(h(i, pivot)))) pivot = j;
      if (pivot == n) throw std::runtime_error("hermite_lower: singular matrix");
      h.swap_cols(i, pivot);
      bool done = true;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (h(i, j) == 0) continue;
        Integer q = floor_div(h(i, j), h(i, i));
        h.add_col_multiple(j, i, -q);
        if (h(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h(i, i) < 0)
      for (std::size_t r = 0; r < n; ++r) h(r, i) = -h(r, i);
    for (std::size_t j = 0; j < i; ++j) h.add_col_multiple(j, i, -floor_div(h(i, j), h(i, i)));
  }
  return h;
}

/// The canonical representative of x + im(H).
inline IntVector reduce(const IntMatrix& h, IntVector x) {
  for (std::size_t i = 0; i < h.rows(); ++i) {
    Integer q = floor_div(x[i], h(i, i));
    if (q == 0) continue;
    for (std::size_t r = i; r < h.rows(); ++r) x[r] -= q * h(r, i);
  }
  return x;
}

inline bool in_image(const IntMatrix& h, const IntVector& x) {
  IntVector r = reduce(h, x);
  return std::all_of(r.begin(), r.end(), [](const Integer& v) { return v == 0; });
}

inline std::vector<IntVector> all_cosets(const IntMatrix& h) {
  const std::size_t n = h.rows();
  std::vector<IntVector> out{IntVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<IntVector> next;
    for (const auto& v : out)
      for (Integer k = 0; k < h(i, i); ++k) {
        IntVector w = v;
        w[i] = k;
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

/// Solutions of B x = b over Z_2 by trying all 2^n vectors.
inline Integer mod2_count_brute(const IntMatrix& b, const IntVector& v) {
  const std::size_t n = b.cols();
  Integer count = 0;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < b.rows() && ok; ++i) {
      Integer s = -v[i];
      for (std::size_t j = 0; j < n; ++j)
        if (mask >> j & 1ul) s += b(i, j);
      ok = mpz_even_p(s.get_mpz_t()) != 0;
    }
    if (ok) ++count;
  }
  return count;
}

/// Classes of x ~ y iff x - y ∈ im(B) or x + y + b ∈ im(B), counted on
/// Hermite-form coset representatives.
inline std::size_t e_classes_brute(const IntMatrix& b, const IntVector& bv) {
  const IntMatrix h = hermite_lower(b);
  const auto reps = all_cosets(h);
  std::vector<std::size_t> parent(reps.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      IntVector s(reps[i].size());
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = reps[i][k] + reps[j][k] + bv[k];
      if (in_image(h, s)) parent[find(i)] = find(j);
    }
  std::size_t classes = 0;
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (find(i) == i) ++classes;
  return classes;
}

}  // namespace oracle

namespace testutil {

using namespace crysturn;

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound, double zero_prob = 0.0) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  std::bernoulli_distribution zero(zero_prob);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = zero(rng) ? 0 : entry(rng);
  return m;
}

inline IntVector random_vector(std::mt19937_64& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  IntVector v(n);
  for (auto& x : v) x = entry(rng);
  return v;
}

inline long max_abs_entry(const IntMatrix& m) {
  long best = 0;
  for (const auto& e : m.entries()) best = std::max(best, Integer(abs(e)).get_si());
  return best;
}

/// A random word in the normaliser generators and their inverses whose
/// entries stay within `bound`.
inline IntMatrix random_normaliser_element(std::mt19937_64& rng, const CrystGroup& g, std::size_t max_len, long bound = 5) {
  std::vector<IntMatrix> letters = *g.normaliser_generators();
  const std::size_t k = letters.size();
  for (std::size_t i = 0; i < k; ++i) letters.push_back(inverse_unimodular(letters[i]));
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  for (;;) {
    IntMatrix w = IntMatrix::identity(g.dimension());
    const std::size_t l = len(rng);
    for (std::size_t i = 0; i < l; ++i) w = w * letters[pick(rng)];
    if (max_abs_entry(w) <= bound) return w;
  }
}

/// A random element of Γ: a representative from F_ext plus a lattice vector.
inline AffineMap random_element(std::mt19937_64& rng, const CrystGroup& g, long bound = 2) {
  std::uniform_int_distribution<std::size_t> pick(0, g.holonomy_order() - 1);
  AffineMap e = g.f_ext()[pick(rng)];
  IntVector z = random_vector(rng, g.dimension(), bound);
  for (std::size_t i = 0; i < z.size(); ++i) e.translation[i] += z[i];
  return e;
}

/// A random automorphism ξ_(d,D) with D from the normaliser, or nullopt
/// when the drawn D admits no translation part.
inline std::optional<AutomorphismSpec> random_automorphism(std::mt19937_64& rng, const CrystGroup& g, std::size_t max_len = 4) {
  const IntMatrix d_mat = random_normaliser_element(rng, g, max_len);
  auto d = find_translation_part(g, d_mat);
  if (!d) return std::nullopt;
  const auto base = delta_base(g);
  std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1);
  RatVector shift = to_rational(random_vector(rng, g.dimension(), 2));
  return AutomorphismSpec(g, *d + base[pick(rng)] + shift, d_mat);
}

}  // namespace testutil
