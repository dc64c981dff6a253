#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "crysturn/error.hpp"
#include "crysturn/number.hpp"

namespace crysturn {

template <typename T>
using Vector = std::vector<T>;

using IntVector = Vector<Integer>;
using RatVector = Vector<Rational>;

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      for (long v : row) data_.emplace_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
      std::copy(rows[i].begin(), rows[i].end(), m.row_begin(i));
    }
    return m;
  }

  static Matrix diagonal(std::span<const T> entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> entries() const { return data_; }
  auto row_begin(std::size_t i) { return data_.begin() + static_cast<std::ptrdiff_t>(i * cols_); }

  Vector<T> row(std::size_t i) const {
    return Vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const T& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
  }
  void add_col_multiple(std::size_t target, std::size_t source, const T& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& v) { return v == 0; });
  }
  bool is_identity() const { return is_square() && *this == identity(rows_); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vector<T> operator*(const Matrix& a, const Vector<T>& v) {
    if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
    Vector<T> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference shape mismatch");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& v : a.data_) v *= s;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Shape first, then entries lexicographically; used for deterministic ordering.
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

inline RatVector to_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

inline bool is_integral(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_integral(q); });
}

inline IntVector to_integer(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(to_integer(q));
  return out;
}

inline IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_integer(m(i, j));
  return out;
}

/// Rational matrix times rational vector where the matrix is integral.
inline RatVector operator*(const IntMatrix& a, const RatVector& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
  RatVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) out[i] += Rational(a(i, j)) * v[j];
  return out;
}

template <typename T>
Vector<T> operator+(Vector<T> a, const Vector<T>& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <typename T>
Vector<T> operator-(Vector<T> a, const Vector<T>& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <typename T>
Vector<T> operator-(Vector<T> a) {
  for (auto& x : a) x = -x;
  return a;
}

/// Stacks matrices with equal column count on top of each other.
template <typename T>
Matrix<T> vstack(std::span<const Matrix<T>> blocks) {
  if (blocks.empty()) return {};
  std::size_t cols = blocks.front().cols(), rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionError("vstack column mismatch");
    rows += b.rows();
  }
  Matrix<T> out(rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.rows(); ++i, ++r)
      for (std::size_t j = 0; j < cols; ++j) out(r, j) = b(i, j);
  return out;
}

/// Block-diagonal matrix diag(a, b).
template <typename T>
Matrix<T> block_diagonal(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

/// "[[a,b],[c,d]]"; a 1x1 matrix prints as "[a]".
template <typename T>
std::string to_string(const Matrix<T>& m) {
  std::ostringstream os;
  if (m.rows() == 1 && m.cols() == 1) {
    os << '[' << m(0, 0).get_str() << ']';
    return os.str();
  }
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

template <typename T>
std::string to_string(const Vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s + ")";
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  return os << to_string(m);
}

/// Parses "[[a,b],[c,d]]" (whitespace ignored). A 1x1 matrix may also be written "[a]".
inline IntMatrix parse_int_matrix(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto fail = [&]() -> IntMatrix { throw ParseError("malformed matrix '" + std::string(text) + "'"); };
  if (s.size() < 3 || s.front() != '[' || s.back() != ']') return fail();
  std::string body = s.substr(1, s.size() - 2);
  std::vector<std::vector<Integer>> rows;
  auto parse_row = [&](const std::string& row) {
    std::vector<Integer> out;
    std::stringstream ss(row);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) fail();
      Rational q = parse_rational(item);
      if (!is_integral(q)) fail();
      out.push_back(q.get_num());
    }
    if (out.empty()) fail();
    return out;
  };
  if (body.front() != '[') {
    rows.push_back(parse_row(body));
  } else {
    std::size_t pos = 0;
    while (pos < body.size()) {
      if (body[pos] != '[') fail();
      auto close = body.find(']', pos);
      if (close == std::string::npos) fail();
      rows.push_back(parse_row(body.substr(pos + 1, close - pos - 1)));
      pos = close + 1;
      if (pos < body.size()) {
        if (body[pos] != ',') fail();
        ++pos;
        if (pos == body.size()) fail();
      }
    }
  }
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) fail();
  return IntMatrix::from_rows(rows);
}

/// Parses "p/q,p/q,..." into an exact vector.
inline RatVector parse_rat_vector(std::string_view text) {
  RatVector out;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty() || (!s.empty() && s.back() == ',')) throw ParseError("malformed vector '" + std::string(text) + "'");
  return out;
}

}  // namespace crysturn
