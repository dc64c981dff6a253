#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "crysturn/error.hpp"
#include "crysturn/number.hpp"

namespace crysturn {

/// A set of natural numbers (plus possibly ∞) of the shape
///   F ∪ (k_1 N ∪ ... ∪ k_m N) \ R ∪ {∞}
/// with F and R finite. Membership: n is in the set iff n lies in some
/// component and n ∉ R.
///
/// Values are kept in a canonical form (see normalize()), so two
/// descriptions denote the same set iff they compare equal.
class SpectrumDescription {
 public:
  SpectrumDescription() = default;

  static SpectrumDescription finite_set(std::set<Integer> values, bool infinity = false) {
    SpectrumDescription s;
    s.finite_ = std::move(values);
    s.infinity_ = infinity;
    s.normalize();
    return s;
  }

  /// k N = {k, 2k, 3k, ...}
  static SpectrumDescription scaled_naturals(Integer k, bool infinity = false) {
    SpectrumDescription s;
    s.multiples_.insert(std::move(k));
    s.infinity_ = infinity;
    s.normalize();
    return s;
  }

  static SpectrumDescription naturals(bool infinity = false) { return scaled_naturals(1, infinity); }

  const std::set<Integer>& finite_values() const { return finite_; }
  const std::set<Integer>& scale_factors() const { return multiples_; }
  const std::set<Integer>& removed() const { return removed_; }
  bool includes_infinity() const { return infinity_; }
  bool empty() const { return finite_.empty() && multiples_.empty() && !infinity_; }

  SpectrumDescription& unite(const SpectrumDescription& other) {
    std::set<Integer> keep_removed;
    for (const auto& r : removed_)
      if (!other.contains(r)) keep_removed.insert(r);
    for (const auto& r : other.removed_)
      if (!contains(r)) keep_removed.insert(r);
    finite_.insert(other.finite_.begin(), other.finite_.end());
    multiples_.insert(other.multiples_.begin(), other.multiples_.end());
    removed_ = std::move(keep_removed);
    infinity_ = infinity_ || other.infinity_;
    normalize();
    return *this;
  }

  SpectrumDescription& remove(std::set<Integer> values) {
    for (auto& v : values) {
      finite_.erase(v);
      removed_.insert(v);
    }
    normalize();
    return *this;
  }

  SpectrumDescription& add_infinity() {
    infinity_ = true;
    return *this;
  }

  bool contains(const Integer& n) const {
    if (n <= 0 || removed_.contains(n)) return false;
    if (finite_.contains(n)) return true;
    return std::any_of(multiples_.begin(), multiples_.end(),
                       [&](const Integer& k) { return mpz_divisible_p(n.get_mpz_t(), k.get_mpz_t()) != 0; });
  }

  bool contains(const ReidCount& r) const { return r.is_infinite() ? infinity_ : contains(r.value()); }

  friend bool operator==(const SpectrumDescription&, const SpectrumDescription&) = default;

  /// ASCII form, e.g. "2N U {3,inf}", "N \ {1} U {inf}", "{2}".
  std::string str() const {
    std::string out;
    for (const auto& k : multiples_) {
      if (!out.empty()) out += " U ";
      out += (k == 1 ? std::string() : k.get_str()) + "N";
    }
    if (!removed_.empty()) out += " \\ " + braces(removed_, false);
    if (!finite_.empty() || infinity_ || out.empty()) {
      if (!out.empty()) out += " U ";
      out += braces(finite_, infinity_);
    }
    return out;
  }

  /// Parses the ASCII form printed by str() as well as the Unicode
  /// spellings ∪, ∖, ∞ and ℕ. A set difference applies to everything.
  static SpectrumDescription parse(std::string_view text);

 private:
  static std::string braces(const std::set<Integer>& values, bool infinity) {
    std::string out = "{";
    bool first = true;
    for (const auto& v : values) {
      if (!first) out += ",";
      out += v.get_str();
      first = false;
    }
    if (infinity) out += first ? "inf" : ",inf";
    return out + "}";
  }

  bool covered_by_multiples(const Integer& n) const {
    return std::any_of(multiples_.begin(), multiples_.end(),
                       [&](const Integer& k) { return mpz_divisible_p(n.get_mpz_t(), k.get_mpz_t()) != 0; });
  }

  void normalize() {
    for (const auto& k : multiples_)
      if (k <= 0) throw DomainError("scale factor must be positive");
    for (const auto& v : finite_)
      if (v <= 0) throw DomainError("spectrum values must be positive");
    std::set<Integer> minimal;
    for (const auto& k : multiples_) {
      bool redundant = std::any_of(multiples_.begin(), multiples_.end(), [&](const Integer& j) {
        return j != k && mpz_divisible_p(k.get_mpz_t(), j.get_mpz_t()) != 0;
      });
      if (!redundant) minimal.insert(k);
    }
    multiples_ = std::move(minimal);
    std::set<Integer> finite;
    for (const auto& v : finite_)
      if (!removed_.contains(v) && !covered_by_multiples(v)) finite.insert(v);
    finite_ = std::move(finite);
    std::set<Integer> removed;
    for (const auto& r : removed_)
      if (covered_by_multiples(r)) removed.insert(r);
    removed_ = std::move(removed);
  }

  friend SpectrumDescription spectrum_product(const SpectrumDescription&, const SpectrumDescription&);

  std::set<Integer> finite_;
  std::set<Integer> multiples_;
  std::set<Integer> removed_;
  bool infinity_ = false;
};

inline SpectrumDescription SpectrumDescription::parse(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size();) {
    auto starts = [&](std::string_view token) { return text.substr(i, token.size()) == token; };
    if (starts("∪")) {
      s += 'U';
      i += std::string_view("∪").size();
    } else if (starts("∖")) {
      s += '\\';
      i += std::string_view("∖").size();
    } else if (starts("∞")) {
      s += 'i';
      i += std::string_view("∞").size();
    } else if (starts("ℕ")) {
      s += 'N';
      i += std::string_view("ℕ").size();
    } else if (starts("inf")) {
      s += 'i';
      i += 3;
    } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    } else {
      s += text[i++];
    }
  }
  auto fail = [&]() -> SpectrumDescription { throw ParseError("malformed spectrum '" + std::string(text) + "'"); };
  SpectrumDescription out;
  std::set<Integer> removed;
  std::size_t pos = 0;
  auto read_number = [&]() -> std::optional<Integer> {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) return std::nullopt;
    return Integer(s.substr(start, pos - start));
  };
  auto read_braces = [&](std::set<Integer>& values, bool& infinity) {
    if (pos >= s.size() || s[pos] != '{') fail();
    ++pos;
    if (pos < s.size() && s[pos] == '}') {
      ++pos;
      return;
    }
    for (;;) {
      if (pos < s.size() && s[pos] == 'i') {
        infinity = true;
        ++pos;
      } else if (auto v = read_number()) {
        if (*v <= 0) fail();
        values.insert(*v);
      } else {
        fail();
      }
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < s.size() && s[pos] == '}') {
        ++pos;
        return;
      }
      fail();
    }
  };
  bool expect_term = true;
  while (pos < s.size()) {
    if (expect_term) {
      if (s[pos] == '{') {
        read_braces(out.finite_, out.infinity_);
      } else {
        Integer k = 1;
        if (auto v = read_number()) k = *v;
        if (pos >= s.size() || s[pos] != 'N' || k <= 0) fail();
        ++pos;
        out.multiples_.insert(k);
      }
      expect_term = false;
    } else if (s[pos] == 'U') {
      ++pos;
      expect_term = true;
    } else if (s[pos] == '\\') {
      ++pos;
      bool inf = false;
      read_braces(removed, inf);
      if (inf) fail();
    } else {
      fail();
    }
  }
  if (expect_term) fail();
  out.removed_ = std::move(removed);
  for (const auto& r : out.removed_) out.finite_.erase(r);
  out.normalize();
  return out;
}

/// Brute-force test of n ∈ a · b by running over the divisors of n.
inline bool product_contains(const SpectrumDescription& a, const SpectrumDescription& b, const Integer& n) {
  if (n <= 0) return false;
  for (Integer u = 1; u * u <= n; ++u) {
    if (!mpz_divisible_p(n.get_mpz_t(), u.get_mpz_t())) continue;
    Integer v = n / u;
    if ((a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u))) return true;
  }
  return false;
}

/// The elementwise product {x y : x ∈ a, y ∈ b}, with ∞ absorbing.
///
/// Throws NotRepresentableError when the product has no description of this
/// shape (e.g. (N \ {1}) · (N \ {1}), which misses every prime).
inline SpectrumDescription spectrum_product(const SpectrumDescription& a, const SpectrumDescription& b) {
  SpectrumDescription out;
  out.infinity_ = (a.infinity_ && !b.empty()) || (b.infinity_ && !a.empty());

  std::set<Integer> candidates;
  for (const auto& x : a.finite_)
    for (const auto& y : b.finite_) out.finite_.insert(x * y);
  auto finite_times_scaled = [&](const SpectrumDescription& fin, const SpectrumDescription& scaled) {
    for (const auto& f : fin.finite_)
      for (const auto& k : scaled.multiples_) {
        out.multiples_.insert(f * k);
        for (const auto& r : scaled.removed_)
          if (mpz_divisible_p(r.get_mpz_t(), k.get_mpz_t())) candidates.insert(f * r);
      }
  };
  finite_times_scaled(a, b);
  finite_times_scaled(b, a);

  std::vector<Integer> degenerate;
  for (const auto& ka : a.multiples_)
    for (const auto& kb : b.multiples_) {
      if (a.removed_.contains(ka) && b.removed_.contains(kb)) {
        degenerate.push_back(ka * kb);
        continue;
      }
      out.multiples_.insert(ka * kb);
      for (const auto& r : b.removed_) candidates.insert(ka * r);
      for (const auto& r : a.removed_) candidates.insert(kb * r);
    }
  // ka kb p for large primes p is only reachable through another component.
  for (const auto& g : degenerate)
    if (!out.covered_by_multiples(g))
      throw NotRepresentableError("product of " + a.str() + " and " + b.str() + " is not representable");

  for (const auto& c : candidates)
    if (out.covered_by_multiples(c) && !product_contains(a, b, c)) out.removed_.insert(c);
  out.normalize();
  return out;
}

}  // namespace crysturn
