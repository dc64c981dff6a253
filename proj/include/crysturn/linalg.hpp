#pragma once

// Exact integer and rational linear algebra: determinants, Smith normal form
// with transformation matrices, lattice cosets and solution counts over Z/2.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "crysturn/error.hpp"
#include "crysturn/matrix.hpp"
#include "crysturn/number.hpp"

namespace crysturn {

namespace detail {

inline void require_square(const IntMatrix& m, const char* what) {
  if (!m.is_square()) throw DimensionError(std::string(what) + ": matrix must be square");
}

}  // namespace detail

/// Exact determinant via fraction-free (Bareiss) elimination.
inline Integer det(const IntMatrix& m) {
  detail::require_square(m, "det");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  Integer d = det(m);
  return d == 1 || d == -1;
}

/// Inverse over Q by Gauss-Jordan elimination.
inline RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse: matrix must be square");
  const std::size_t n = m.rows();
  RatMatrix a = m, inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw SingularMatrixError("inverse: matrix is singular");
    a.swap_rows(c, p);
    inv.swap_rows(c, p);
    Rational pivot = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      a.add_row_multiple(i, c, -f);
      inv.add_row_multiple(i, c, -f);
    }
  }
  return inv;
}

/// Inverse of a matrix in GL_n(Z).
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (!is_unimodular(m)) throw SingularMatrixError("matrix is not unimodular: " + to_string(m));
  return to_integer(inverse(to_rational(m)));
}

/// Exact solution x of b x = v for nonsingular square b.
inline RatVector solve_exact(const IntMatrix& b, const RatVector& v) {
  detail::require_square(b, "solve_exact");
  if (b.rows() != v.size()) throw DimensionError("solve_exact: vector length mismatch");
  const std::size_t n = b.rows();
  RatMatrix a = to_rational(b);
  RatVector x = v;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw SingularMatrixError("solve_exact: matrix is singular");
    a.swap_rows(c, p);
    std::swap(x[c], x[p]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      a.add_row_multiple(i, c, -f);
      x[i] -= f * x[c];
    }
  }
  for (std::size_t c = n; c-- > 0;) {
    for (std::size_t j = c + 1; j < n; ++j) x[c] -= a(c, j) * x[j];
    x[c] /= a(c, c);
  }
  return x;
}

/// P * M * Q = S with P, Q unimodular and S in Smith normal form.
struct SnfDecomposition {
  IntMatrix p;
  IntMatrix s;
  IntMatrix q;
  std::vector<Integer> invariant_factors;  // s_1 | s_2 | ... | s_r, all positive

  std::size_t rank() const { return invariant_factors.size(); }
};

/// Smith normal form by elementary row/column operations, pivoting on the
/// entry of least absolute value.
inline SnfDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix s = m, p = IntMatrix::identity(rows), q = IntMatrix::identity(cols);

  auto row_op = [&](std::size_t target, std::size_t source, const Integer& f) {
    s.add_row_multiple(target, source, f);
    p.add_row_multiple(target, source, f);
  };
  auto col_op = [&](std::size_t target, std::size_t source, const Integer& f) {
    s.add_col_multiple(target, source, f);
    q.add_col_multiple(target, source, f);
  };
  auto swap_r = [&](std::size_t a, std::size_t b) {
    s.swap_rows(a, b);
    p.swap_rows(a, b);
  };
  auto swap_c = [&](std::size_t a, std::size_t b) {
    s.swap_cols(a, b);
    q.swap_cols(a, b);
  };

  std::vector<Integer> factors;
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    // Move the smallest nonzero entry of the trailing block to (t, t).
    auto bring_min_to_pivot = [&]() {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (s(i, j) != 0 && (!best || mpz_cmpabs(s(i, j).get_mpz_t(), s(best->first, best->second).get_mpz_t()) < 0)) best = {i, j};
      if (!best) return false;
      swap_r(t, best->first);
      swap_c(t, best->second);
      return true;
    };
    if (!bring_min_to_pivot()) break;

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Integer f = floor_div(s(i, t), s(t, t));
        row_op(i, t, -f);
        if (s(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Integer f = floor_div(s(t, j), s(t, t));
        col_op(j, t, -f);
        if (s(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A nonzero remainder is smaller than the pivot; rotate it in.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (s(i, t) != 0 && mpz_cmpabs(s(i, t).get_mpz_t(), s(bi, bj).get_mpz_t()) < 0) bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s(t, j) != 0 && mpz_cmpabs(s(t, j).get_mpz_t(), s(bi, bj).get_mpz_t()) < 0) bi = t, bj = j;
        swap_r(t, bi);
        swap_c(t, bj);
        continue;
      }
      // Row and column cleared; enforce divisibility of the trailing block.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            offender = i;
            break;
          }
      if (!offender) break;
      row_op(t, *offender, Integer(1));
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      p.negate_row(t);
    }
    factors.push_back(s(t, t));
  }
  return {std::move(p), std::move(s), std::move(q), std::move(factors)};
}

/// Number of solutions of B x = b over Z/2 (0, or 2^(n - rank)).
inline Integer mod2_solution_count(const IntMatrix& b_mat, const IntVector& b_vec) {
  detail::require_square(b_mat, "mod2_solution_count");
  if (b_mat.rows() != b_vec.size()) throw DimensionError("mod2_solution_count: vector length mismatch");
  const std::size_t n = b_mat.rows();
  std::vector<std::vector<std::uint8_t>> aug(n, std::vector<std::uint8_t>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = mpz_odd_p(b_mat(i, j).get_mpz_t()) ? 1 : 0;
    aug[i][n] = mpz_odd_p(b_vec[i].get_mpz_t()) ? 1 : 0;
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t p = rank;
    while (p < n && !aug[p][c]) ++p;
    if (p == n) continue;
    std::swap(aug[p], aug[rank]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != rank && aug[i][c])
        for (std::size_t j = c; j <= n; ++j) aug[i][j] ^= aug[rank][j];
    ++rank;
  }
  for (std::size_t i = rank; i < n; ++i)
    if (aug[i][n]) return 0;
  Integer count;
  mpz_ui_pow_ui(count.get_mpz_t(), 2, n - rank);
  return count;
}

/// Membership test and canonical indexing for the cosets Z^n / im(B).
///
/// Representatives are x = P^{-1} y with 0 <= y_i < s_i, enumerated in
/// mixed-radix order with y_1 varying slowest.
class LatticeCosets {
 public:
  explicit LatticeCosets(const IntMatrix& b) : snf_(smith_normal_form(b)) {
    detail::require_square(b, "LatticeCosets");
    if (snf_.rank() != b.rows()) throw SingularMatrixError("infinitely many cosets: matrix is singular");
    p_inv_ = inverse_unimodular(snf_.p);
  }

  const SnfDecomposition& snf() const { return snf_; }

  Integer count() const {
    Integer c = 1;
    for (const auto& s : snf_.invariant_factors) c *= s;
    return c;
  }

  /// Index in [0, count()) of the coset containing integral v.
  std::size_t index_of(const IntVector& v) const {
    IntVector y = snf_.p * v;
    Integer idx = 0;
    for (std::size_t i = 0; i < y.size(); ++i) idx = idx * snf_.invariant_factors[i] + mod_floor(y[i], snf_.invariant_factors[i]);
    return idx.get_ui();
  }

  IntVector representative(std::size_t index) const {
    const std::size_t n = snf_.invariant_factors.size();
    IntVector y(n);
    Integer rest = static_cast<unsigned long>(index);
    for (std::size_t i = n; i-- > 0;) {
      y[i] = mod_floor(rest, snf_.invariant_factors[i]);
      rest = floor_div(rest, snf_.invariant_factors[i]);
    }
    return p_inv_ * y;
  }

  std::vector<IntVector> representatives() const {
    std::vector<IntVector> out;
    const std::size_t total = count().get_ui();
    out.reserve(total);
    for (std::size_t k = 0; k < total; ++k) out.push_back(representative(k));
    return out;
  }

 private:
  SnfDecomposition snf_;
  IntMatrix p_inv_;
};

/// One representative per coset of im(b) in Z^n; exactly |det b| of them.
inline std::vector<IntVector> coset_representatives(const IntMatrix& b) {
  return LatticeCosets(b).representatives();
}

/// True iff b z = v has an integral solution z.
inline bool in_lattice_image(const IntMatrix& b, const RatVector& v) {
  if (b.rows() != v.size()) throw DimensionError("in_lattice_image: vector length mismatch");
  if (!is_integral(v)) return false;
  const SnfDecomposition snf = smith_normal_form(b);
  const IntVector t = snf.p * to_integer(v);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i < snf.rank()) {
      if (!mpz_divisible_p(t[i].get_mpz_t(), snf.invariant_factors[i].get_mpz_t())) return false;
    } else if (t[i] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace crysturn
