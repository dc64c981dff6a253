#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <regex>
#include <string>
#include <string_view>

#include "crysturn/error.hpp"

namespace crysturn {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

/// Fractional part in [0, 1).
inline Rational frac(const Rational& q) { return q - Rational(floor(q)); }

/// Floor division and the matching non-negative remainder (b != 0).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer mod_floor(const Integer& a, const Integer& b) {
  Integer out;
  mpz_fdiv_r(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer to_integer(const Rational& q) {
  if (!is_integral(q)) throw DomainError("value " + q.get_str() + " is not an integer");
  return q.get_num();
}

/// Parses "p" or "p/q" (q > 0) exactly; rejects anything else.
inline Rational parse_rational(std::string_view text) {
  static const std::regex pattern("^-?[0-9]+(/[1-9][0-9]*)?$");
  std::string s(text);
  if (!std::regex_match(s, pattern)) throw ParseError("malformed rational '" + s + "'");
  Rational q(s, 10);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// A Reidemeister number: a positive natural number or infinity.
class ReidCount {
 public:
  static ReidCount infinity() { return ReidCount(); }

  explicit ReidCount(Integer value) : value_(std::move(value)) {
    if (*value_ <= 0) throw DomainError("a Reidemeister count must be positive");
  }
  explicit ReidCount(long value) : ReidCount(Integer(value)) {}

  /// |x|_inf: |x| for x != 0, infinity for x = 0.
  static ReidCount abs_inf(const Integer& x) {
    if (x == 0) return infinity();
    return ReidCount(Integer(abs(x)));
  }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  const Integer& value() const {
    if (!value_) throw DomainError("infinite Reidemeister count has no finite value");
    return *value_;
  }

  friend ReidCount operator+(const ReidCount& a, const ReidCount& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ReidCount(*a.value_ + *b.value_);
  }
  friend ReidCount operator*(const ReidCount& a, const ReidCount& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ReidCount(*a.value_ * *b.value_);
  }

  friend bool operator==(const ReidCount& a, const ReidCount& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return *a.value_ == *b.value_;
  }
  // Infinity compares greater than every finite count.
  friend std::strong_ordering operator<=>(const ReidCount& a, const ReidCount& b) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    if (a.is_infinite()) return std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    int c = cmp(*a.value_, *b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string str() const { return is_infinite() ? "inf" : value_->get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const ReidCount& r) { return os << r.str(); }

 private:
  ReidCount() = default;
  std::optional<Integer> value_;
};

}  // namespace crysturn
