#pragma once

// Exact arithmetic in the biquadratic field Q(sqrt2, sqrt5), basis
// {1, sqrt2, sqrt5, sqrt10}. Large enough for the coordinates of every
// element of the binary octahedral and binary icosahedral groups.

#include <gmpxx.h>

#include <array>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "eq5/errors.hpp"

namespace eq5 {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p", "-p" or "p/q"; whitespace is not allowed inside.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw SyntaxError(0, "empty rational");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') ++i;
  bool seen_digit = false, seen_slash = false, digit_after_slash = false;
  for (std::size_t j = i; j < text.size(); ++j) {
    char c = text[j];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      throw SyntaxError(j, "bad character in rational");
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash))
    throw SyntaxError(text.size(), "incomplete rational");
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational r;
  r.set_str(s, 10);
  if (r.get_den() == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

/// c0 + c1*sqrt2 + c2*sqrt5 + c3*sqrt10 with rational coordinates.
class FieldElement {
 public:
  using Coords = std::array<Rational, 4>;

  FieldElement() : c_{Rational(0), Rational(0), Rational(0), Rational(0)} {}
  /// Coordinates need not be in lowest terms.
  explicit FieldElement(Coords c) : c_(std::move(c)) {
    for (Rational& x : c_) x.canonicalize();
  }
  FieldElement(const Rational& r) : c_{r, Rational(0), Rational(0), Rational(0)} { c_[0].canonicalize(); }  // NOLINT
  FieldElement(long v) : FieldElement(Rational(v)) {}                                 // NOLINT
  FieldElement(int v) : FieldElement(Rational(v)) {}                                  // NOLINT

  static FieldElement sqrt2() { return FieldElement({Rational(0), Rational(1), Rational(0), Rational(0)}); }
  static FieldElement sqrt5() { return FieldElement({Rational(0), Rational(0), Rational(1), Rational(0)}); }
  static FieldElement sqrt10() { return FieldElement({Rational(0), Rational(0), Rational(0), Rational(1)}); }

  const Coords& coords() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const { return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
  bool is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] && a.c_[3] == b.c_[3];
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// Lexicographic on coordinates; a total order for canonical sorting,
  /// unrelated to the real ordering of the numbers.
  friend bool lex_less(const FieldElement& a, const FieldElement& b) {
    for (std::size_t i = 0; i < 4; ++i) {
      int c = cmp(a.c_[i], b.c_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    Coords r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = a.c_[i] + b.c_[i];
    return FieldElement(std::move(r));
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    Coords r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = a.c_[i] - b.c_[i];
    return FieldElement(std::move(r));
  }
  friend FieldElement operator-(const FieldElement& a) {
    Coords r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = -a.c_[i];
    return FieldElement(std::move(r));
  }

  // (x0 + x1 r2 + x2 r5 + x3 r10)(y0 + y1 r2 + y2 r5 + y3 r10) with
  // r2^2 = 2, r5^2 = 5, r10^2 = 10, r2 r5 = r10, r2 r10 = 2 r5, r5 r10 = 5 r2.
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const auto& x = a.c_;
    const auto& y = b.c_;
    Coords r;
    r[0] = x[0] * y[0] + 2 * x[1] * y[1] + 5 * x[2] * y[2] + 10 * x[3] * y[3];
    r[1] = x[0] * y[1] + x[1] * y[0] + 5 * (x[2] * y[3] + x[3] * y[2]);
    r[2] = x[0] * y[2] + x[2] * y[0] + 2 * (x[1] * y[3] + x[3] * y[1]);
    r[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
    return FieldElement(std::move(r));
  }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  /// Debugging aid only.
  double approx() const {
    return c_[0].get_d() + c_[1].get_d() * std::sqrt(2.0) + c_[2].get_d() * std::sqrt(5.0) +
           c_[3].get_d() * std::sqrt(10.0);
  }

 private:
  Coords c_;
};

/// Multiplicative inverse, obtained by solving the 4x4 rational system
/// M_a x = e_0 where M_a is multiplication-by-a in the basis.
inline FieldElement inverse(const FieldElement& a) {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero field element");
  // Column j of M_a is the coordinate vector of a * basis_j.
  const std::array<FieldElement, 4> basis{FieldElement(1), FieldElement::sqrt2(), FieldElement::sqrt5(),
                                          FieldElement::sqrt10()};
  std::array<std::array<Rational, 5>, 4> m;
  for (std::size_t j = 0; j < 4; ++j) {
    FieldElement col = a * basis[j];
    for (std::size_t i = 0; i < 4; ++i) m[i][j] = col[i];
  }
  for (std::size_t i = 0; i < 4; ++i) m[i][4] = (i == 0) ? 1 : 0;

  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t piv = col;
    while (piv < 4 && sgn(m[piv][col]) == 0) ++piv;
    // M_a is invertible for a != 0 because the field has no zero divisors.
    if (piv == 4) throw Error(Errc::DivisionByZero, "singular multiplication matrix");
    std::swap(m[piv], m[col]);
    Rational p = m[col][col];
    for (std::size_t k = col; k < 5; ++k) m[col][k] /= p;
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (std::size_t k = col; k < 5; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return FieldElement({m[0][4], m[1][4], m[2][4], m[3][4]});
}

inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * inverse(b); }

/// Canonical text form "c0 + c1*r2 + c2*r5 + c3*r10"; every coefficient
/// is printed (lowest terms, sign attached to the coefficient).
inline std::string format(const FieldElement& x) {
  return x[0].get_str() + " + " + x[1].get_str() + "*r2 + " + x[2].get_str() + "*r5 + " + x[3].get_str() +
         "*r10";
}

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << format(x); }

namespace detail {

class FieldParser {
 public:
  explicit FieldParser(std::string_view s, std::size_t base = 0) : s_(s), base_(base) {}

  FieldElement parse() {
    FieldElement::Coords acc{Rational(0), Rational(0), Rational(0), Rational(0)};
    skip_ws();
    if (pos_ == s_.size()) fail("empty field element");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (!first) {
        if (s_[pos_] == '+') {
          ++pos_;
        } else if (s_[pos_] == '-') {
          sign = -1;
          ++pos_;
        } else {
          fail("expected '+' or '-'");
        }
        skip_ws();
      }
      // A leading sign on the coefficient itself ("+ -1/2*r2" or "-3").
      while (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        if (s_[pos_] == '-') sign = -sign;
        ++pos_;
        skip_ws();
      }
      Rational coef(1);
      bool have_coef = false;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
        coef = parse_at(start, s_.substr(start, pos_ - start));
        have_coef = true;
        skip_ws();
      }
      std::size_t slot = 0;
      if (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == 'r')) {
        if (s_[pos_] == '*') {
          if (!have_coef) fail("'*' without coefficient");
          ++pos_;
          skip_ws();
        }
        slot = parse_radical();
        skip_ws();
      } else if (!have_coef) {
        fail("expected coefficient or radical");
      }
      acc[slot] += sign * coef;
      first = false;
    }
    return FieldElement(std::move(acc));
  }

 private:
  std::size_t parse_radical() {
    if (pos_ >= s_.size() || s_[pos_] != 'r') fail("expected r2, r5 or r10");
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string_view n = s_.substr(start, pos_ - start);
    if (n == "2") return 1;
    if (n == "5") return 2;
    if (n == "10") return 3;
    pos_ = start;
    fail("unknown radical");
  }

  Rational parse_at(std::size_t start, std::string_view text) {
    try {
      return parse_rational(text);
    } catch (const SyntaxError& e) {
      throw SyntaxError(base_ + start, "bad rational '" + std::string(text) + "'");
    }
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(base_ + pos_, msg); }

  std::string_view s_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Accepts the canonical form and looser variants: terms in any order,
/// omitted zero terms, "-" between terms, bare radicals ("r2 - 1/2").
inline FieldElement parse_field_element(std::string_view text) { return detail::FieldParser(text).parse(); }

}  // namespace eq5

template <>
struct std::hash<eq5::FieldElement> {
  std::size_t operator()(const eq5::FieldElement& x) const noexcept {
    std::size_t h = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      h ^= std::hash<std::string>{}(x[i].get_str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
