#pragma once

// Unit quaternions over Q(sqrt2, sqrt5) as elements of SU(2), exact
// elements of Pin(2) with rational angles, and the two-fold cover
// SU(2) -> SO(3) both as rotation matrices and as {q, -q} classes.

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eq5/errors.hpp"
#include "eq5/exactfield.hpp"

namespace eq5 {

/// Requirements for anything the finite-group engine can close over.
template <class E>
concept GroupElement = requires(const E& a, const E& b) {
  { a * b } -> std::same_as<E>;
  { inverse(a) } -> std::same_as<E>;
  { -a } -> std::same_as<E>;
  { key(a) } -> std::convertible_to<std::string>;
  { a == b } -> std::convertible_to<bool>;
  { E::identity() } -> std::same_as<E>;
};

/// a + b i + c j + d k over an arbitrary commutative coefficient ring.
template <class F>
struct Quaternion {
  F a, b, c, d;

  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d, p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b, p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
  }
  friend Quaternion operator-(const Quaternion& p) { return {-p.a, -p.b, -p.c, -p.d}; }
  friend bool operator==(const Quaternion& p, const Quaternion& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
  }

  Quaternion conj() const { return {a, -b, -c, -d}; }
  F norm2() const { return a * a + b * b + c * c + d * d; }
};

/// Element of SU(2): a unit quaternion with coordinates in Q(sqrt2, sqrt5).
class UnitQuat {
 public:
  using Q = Quaternion<FieldElement>;

  UnitQuat() : q_{FieldElement(1), FieldElement(0), FieldElement(0), FieldElement(0)} {}

  /// Throws NotUnit unless a^2 + b^2 + c^2 + d^2 == 1 exactly.
  static UnitQuat from(FieldElement a, FieldElement b, FieldElement c, FieldElement d) {
    Q q{std::move(a), std::move(b), std::move(c), std::move(d)};
    if (q.norm2() != FieldElement(1)) throw Error(Errc::NotUnit, "quaternion norm is not 1");
    return UnitQuat(std::move(q));
  }

  static UnitQuat identity() { return UnitQuat(); }
  static UnitQuat minus_one() { return -UnitQuat(); }
  static UnitQuat i() { return UnitQuat(Q{0, 1, 0, 0}); }
  static UnitQuat j() { return UnitQuat(Q{0, 0, 1, 0}); }
  static UnitQuat k() { return UnitQuat(Q{0, 0, 0, 1}); }

  const FieldElement& a() const { return q_.a; }
  const FieldElement& b() const { return q_.b; }
  const FieldElement& c() const { return q_.c; }
  const FieldElement& d() const { return q_.d; }
  const Q& raw() const { return q_; }

  friend UnitQuat operator*(const UnitQuat& p, const UnitQuat& q) { return UnitQuat(p.q_ * q.q_); }
  friend UnitQuat operator-(const UnitQuat& p) { return UnitQuat(-p.q_); }
  friend UnitQuat inverse(const UnitQuat& p) { return UnitQuat(p.q_.conj()); }
  friend bool operator==(const UnitQuat& p, const UnitQuat& q) { return p.q_ == q.q_; }
  friend bool operator!=(const UnitQuat& p, const UnitQuat& q) { return !(p == q); }

 private:
  explicit UnitQuat(Q q) : q_(std::move(q)) {}
  Q q_;
};

/// "(a, b, c, d)", each component in canonical field format. Injective.
inline std::string key(const UnitQuat& q) {
  return "(" + format(q.a()) + ", " + format(q.b()) + ", " + format(q.c()) + ", " + format(q.d()) + ")";
}
inline std::string serialize(const UnitQuat& q) { return key(q); }

inline UnitQuat parse_unit_quat(std::string_view text) {
  std::size_t open = text.find('(');
  std::size_t close = text.rfind(')');
  if (open == std::string_view::npos) throw SyntaxError(0, "expected '('");
  if (close == std::string_view::npos || close < open) throw SyntaxError(text.size(), "expected ')'");
  for (std::size_t p = 0; p < open; ++p)
    if (!std::isspace(static_cast<unsigned char>(text[p]))) throw SyntaxError(p, "unexpected character");
  for (std::size_t p = close + 1; p < text.size(); ++p)
    if (!std::isspace(static_cast<unsigned char>(text[p]))) throw SyntaxError(p, "trailing characters");
  std::vector<FieldElement> parts;
  std::size_t start = open + 1;
  for (std::size_t p = open + 1; p <= close; ++p) {
    if (p == close || text[p] == ',') {
      parts.push_back(detail::FieldParser(text.substr(start, p - start), start).parse());
      start = p + 1;
    }
  }
  if (parts.size() != 4) throw SyntaxError(close, "expected four components");
  return UnitQuat::from(parts[0], parts[1], parts[2], parts[3]);
}

/// Least n <= cap with x^n = 1, or nullopt ("Unbounded") if none.
template <GroupElement E>
std::optional<int> element_order(const E& x, int cap) {
  if (cap < 1) throw Error(Errc::BadParam, "order cap must be >= 1");
  const E one = E::identity();
  E p = x;
  for (int n = 1; n <= cap; ++n) {
    if (p == one) return n;
    p = p * x;
  }
  return std::nullopt;
}

inline std::optional<int> q_order(const UnitQuat& q, int cap) { return element_order(q, cap); }

/// 3x3 matrix over the field; the export format for SO(3) elements.
struct RotationMatrix {
  std::array<std::array<FieldElement, 3>, 3> m;

  static RotationMatrix identity() {
    RotationMatrix r;
    for (int i = 0; i < 3; ++i) r.m[i][i] = FieldElement(1);
    return r;
  }

  friend RotationMatrix operator*(const RotationMatrix& x, const RotationMatrix& y) {
    RotationMatrix r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r.m[i][j] += x.m[i][k] * y.m[k][j];
    return r;
  }
  friend bool operator==(const RotationMatrix& x, const RotationMatrix& y) { return x.m == y.m; }

  RotationMatrix transpose() const {
    RotationMatrix r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  FieldElement determinant() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  /// R^T R = I and det R = 1, exactly.
  bool is_special_orthogonal() const {
    return transpose() * *this == identity() && determinant() == FieldElement(1);
  }
};

/// Conjugation v -> q v q^-1 on the imaginary quaternions, basis (i, j, k).
inline RotationMatrix q_to_so3(const UnitQuat& q) {
  const auto& a = q.a();
  const auto& b = q.b();
  const auto& c = q.c();
  const auto& d = q.d();
  const FieldElement two(2);
  RotationMatrix r;
  r.m[0] = {a * a + b * b - c * c - d * d, two * (b * c - a * d), two * (b * d + a * c)};
  r.m[1] = {two * (b * c + a * d), a * a - b * b + c * c - d * d, two * (c * d - a * b)};
  r.m[2] = {two * (b * d - a * c), two * (c * d + a * b), a * a - b * b - c * c + d * d};
  return r;
}

/// Exact element of Pin(2) = {e^{2 pi i t}} u {e^{2 pi i t} j} with
/// rational t in [0, 1). Carries the cyclic and dicyclic families whose
/// angles have no coordinates in Q(sqrt2, sqrt5).
class Pin2Element {
 public:
  Pin2Element() : turns_(0), jpart_(false) {}
  Pin2Element(Rational turns, bool jpart) : turns_(reduce(std::move(turns))), jpart_(jpart) {}

  static Pin2Element identity() { return {}; }
  /// e^{2 pi i t}
  static Pin2Element rotation(const Rational& t) { return {t, false}; }
  static Pin2Element j() { return {Rational(0), true}; }

  const Rational& turns() const { return turns_; }
  bool has_j() const { return jpart_; }

  // j z = conj(z) j and j^2 = -1 = e^{i pi}.
  friend Pin2Element operator*(const Pin2Element& x, const Pin2Element& y) {
    if (!x.jpart_) return {x.turns_ + y.turns_, y.jpart_};
    if (!y.jpart_) return {x.turns_ - y.turns_, true};
    return {x.turns_ - y.turns_ + Rational(1, 2), false};
  }
  friend Pin2Element operator-(const Pin2Element& x) { return {x.turns_ + Rational(1, 2), x.jpart_}; }
  friend Pin2Element inverse(const Pin2Element& x) {
    if (!x.jpart_) return {-x.turns_, false};
    return {x.turns_ + Rational(1, 2), true};
  }
  friend bool operator==(const Pin2Element& x, const Pin2Element& y) {
    return x.jpart_ == y.jpart_ && x.turns_ == y.turns_;
  }

 private:
  static Rational reduce(Rational t) {
    t.canonicalize();
    // floor(t) for a canonical rational
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    t -= q;
    t.canonicalize();
    return t;
  }

  Rational turns_;
  bool jpart_;
};

inline std::string key(const Pin2Element& x) {
  return "e(" + x.turns().get_str() + ")" + (x.has_j() ? "*j" : "");
}
inline std::string serialize(const Pin2Element& x) { return key(x); }

/// The same element in quaternion coordinates when its angle is a
/// multiple of pi/4; nullopt otherwise.
inline std::optional<UnitQuat> to_unit_quat(const Pin2Element& x) {
  Rational eighths = x.turns() * 8;
  if (eighths.get_den() != 1) return std::nullopt;
  const long k = eighths.get_num().get_si();
  const FieldElement h = FieldElement::sqrt2() * FieldElement(Rational(1, 2));
  const std::array<FieldElement, 8> cs{1, h, 0, -h, -1, -h, 0, h};
  const std::array<FieldElement, 8> sn{0, h, 1, h, 0, -h, -1, -h};
  const auto& c = cs[static_cast<std::size_t>(k)];
  const auto& s = sn[static_cast<std::size_t>(k)];
  // (c + s i) j = c j + s k
  if (x.has_j()) return UnitQuat::from(0, 0, c, s);
  return UnitQuat::from(c, s, 0, 0);
}

/// An element of SO(3) represented as the class {q, -q}; the stored
/// representative is the one with the smaller key.
template <GroupElement E>
class Rotation {
 public:
  Rotation() : rep_(canonical(E::identity())) {}
  explicit Rotation(const E& q) : rep_(canonical(q)) {}

  static Rotation identity() { return Rotation(); }
  const E& representative() const { return rep_; }

  friend Rotation operator*(const Rotation& x, const Rotation& y) { return Rotation(x.rep_ * y.rep_); }
  friend Rotation inverse(const Rotation& x) { return Rotation(inverse(x.rep_)); }
  // -q and q define the same rotation.
  friend Rotation operator-(const Rotation& x) { return x; }
  friend bool operator==(const Rotation& x, const Rotation& y) { return x.rep_ == y.rep_; }

 private:
  static E canonical(const E& q) {
    E n = -q;
    return key(n) < key(q) ? n : q;
  }
  E rep_;
};

template <GroupElement E>
std::string key(const Rotation<E>& x) {
  return "+-" + key(x.representative());
}
template <GroupElement E>
std::string serialize(const Rotation<E>& x) {
  return key(x);
}

inline RotationMatrix to_matrix(const Rotation<UnitQuat>& r) { return q_to_so3(r.representative()); }

static_assert(GroupElement<UnitQuat>);
static_assert(GroupElement<Pin2Element>);
static_assert(GroupElement<Rotation<UnitQuat>>);
static_assert(GroupElement<Rotation<Pin2Element>>);

}  // namespace eq5
