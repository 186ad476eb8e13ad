#pragma once

// SO(3)- and SU(2)-actions on simply-connected 5-manifolds: the family
// N_{m,n}^l = SU(2) x_{S^1} S^3 (circle weights l; m, n), its invariants
// and equivalences, the remaining classified actions, curvature verdicts,
// and the one- and two-orbit-type classification data.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "eq5/errors.hpp"
#include "eq5/exactfield.hpp"
#include "eq5/fingroups.hpp"

namespace eq5 {

// ---------------------------------------------------------------------------
// Orbit types: finite subgroups plus the closed subgroups of positive
// dimension that occur as isotropy.

struct OrbitType {
  enum class Kind { Finite, Circle, O2, Pin2, Full };

  Kind kind = Kind::Finite;
  IsoType finite = IsoType::trivial();
  Ambient ambient = Ambient::SU2;  // names the Full kind

  static OrbitType of(IsoType t) { return {Kind::Finite, t, Ambient::SU2}; }
  static OrbitType cyclic(int k) { return of(IsoType::cyclic(k)); }
  static OrbitType circle() { return {Kind::Circle, IsoType::trivial(), Ambient::SU2}; }
  static OrbitType o2() { return {Kind::O2, IsoType::trivial(), Ambient::SO3}; }
  static OrbitType pin2() { return {Kind::Pin2, IsoType::trivial(), Ambient::SU2}; }
  static OrbitType full(Ambient g) { return {Kind::Full, IsoType::trivial(), g}; }

  int dimension() const {
    switch (kind) {
      case Kind::Finite: return 0;
      case Kind::Circle:
      case Kind::O2:
      case Kind::Pin2: return 1;
      case Kind::Full: return 3;
    }
    return 0;
  }

  std::string name() const {
    switch (kind) {
      case Kind::Finite: return finite.name();
      case Kind::Circle: return "SO(2)";
      case Kind::O2: return "O(2)";
      case Kind::Pin2: return "Pin(2)";
      case Kind::Full: return ambient == Ambient::SO3 ? "SO(3)" : "SU(2)";
    }
    return "?";
  }

  friend bool operator==(const OrbitType& a, const OrbitType& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Kind::Finite) return a.finite == b.finite;
    if (a.kind == Kind::Full) return a.ambient == b.ambient;
    return true;
  }
};

/// Accepts "1", "Z_m"/"Zm", "D_m", "Dic_m", "T", "O", "I", "T*", "O*",
/// "I*", "Z2xZ2", "SO(2)", "O(2)", "Pin(2)", "SO(3)", "SU(2)"; parentheses
/// and underscores are optional.
inline std::optional<OrbitType> parse_orbit_type(std::string s) {
  std::erase_if(s, [](char c) { return c == '_' || c == '(' || c == ')' || c == ' '; });
  auto number_after = [&](std::size_t prefix) -> std::optional<int> {
    if (s.size() <= prefix) return std::nullopt;
    for (std::size_t i = prefix; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    return std::stoi(s.substr(prefix));
  };
  if (s == "1" || s == "{1}" || s == "Trivial") return OrbitType::cyclic(1);
  if (s == "SO2" || s == "Circle") return OrbitType::circle();
  if (s == "O2") return OrbitType::o2();
  if (s == "Pin2") return OrbitType::pin2();
  if (s == "SO3") return OrbitType::full(Ambient::SO3);
  if (s == "SU2") return OrbitType::full(Ambient::SU2);
  if (s == "T*") return OrbitType::of(IsoType::bin_tet());
  if (s == "O*") return OrbitType::of(IsoType::bin_oct());
  if (s == "I*") return OrbitType::of(IsoType::bin_ico());
  if (s == "T") return OrbitType::of(IsoType::tet());
  if (s == "O") return OrbitType::of(IsoType::oct());
  if (s == "I") return OrbitType::of(IsoType::ico());
  if (s == "Z2xZ2" || s == "KleinFour") return OrbitType::of(IsoType::klein_four());
  if (s.rfind("Dic", 0) == 0) {
    auto m = number_after(3);
    if (m && *m >= 2) return OrbitType::of(IsoType::dicyclic(*m));
    return std::nullopt;
  }
  if (s.rfind("Z", 0) == 0) {
    auto m = number_after(1);
    if (m && *m >= 1) return OrbitType::cyclic(*m);
    return std::nullopt;
  }
  if (s.rfind("D", 0) == 0) {
    auto m = number_after(1);
    if (m && *m >= 2) return OrbitType::of(IsoType::dihedral(*m));
    return std::nullopt;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parameters of N_{m,n}^l.

struct ActionParams {
  long m = 0;
  long n = 0;
  long l = 0;
  friend bool operator==(const ActionParams&, const ActionParams&) = default;
};

inline std::string format_params(const ActionParams& p) {
  return "N_{" + std::to_string(p.m) + "," + std::to_string(p.n) + "}^" + std::to_string(p.l);
}

/// Signs are dropped, m <= n is enforced by swapping, and the circle must
/// act freely: gcd(l,m) = gcd(l,n) = 1 with gcd(l,0) = l.
inline ActionParams validate(long m, long n, long l) {
  m = std::labs(m);
  n = std::labs(n);
  l = std::labs(l);
  if (m > n) std::swap(m, n);
  if (std::gcd(l, m) != 1)
    throw Error(Errc::InvalidParams, "gcd(l,m) = " + std::to_string(std::gcd(l, m)) + " for " +
                                         format_params({m, n, l}) +
                                         (m == 0 ? " (m = 0 forces l = 1)" : ""));
  if (std::gcd(l, n) != 1)
    throw Error(Errc::InvalidParams, "gcd(l,n) = " + std::to_string(std::gcd(l, n)) + " for " +
                                         format_params({m, n, l}));
  return {m, n, l};
}

inline bool is_valid(long m, long n, long l) {
  return std::gcd(std::labs(l), std::labs(m)) == 1 && std::gcd(std::labs(l), std::labs(n)) == 1;
}

// ---------------------------------------------------------------------------
// Isotropy.

enum class QuotientSpace { Sphere2, Disk2, Sphere3 };

inline std::string to_string(QuotientSpace q) {
  switch (q) {
    case QuotientSpace::Sphere2: return "Sphere2";
    case QuotientSpace::Disk2: return "Disk2";
    case QuotientSpace::Sphere3: return "Sphere3";
  }
  return "?";
}

struct IsotropyProfile {
  Ambient effective_group = Ambient::SU2;
  OrbitType principal;
  std::vector<OrbitType> others;
  /// Types of the SU(2)-action before dividing out an ineffective kernel.
  OrbitType su2_principal;
  std::vector<OrbitType> su2_others;
  QuotientSpace quotient_space = QuotientSpace::Sphere2;
};

inline bool effectively_so3(const ActionParams& p) { return p.m % 2 == 0 && p.n % 2 == 0; }

/// Exceptional orbits (m >= 1) give an orbifold 2-sphere; for n > m = 0
/// the SO(2)-orbits form the boundary of a 2-disk; for m = n = 0 every
/// orbit is SO(2)-singular and the quotient is a 3-sphere.
inline IsotropyProfile isotropy_profile(const ActionParams& p) {
  IsotropyProfile r;
  const bool so3 = effectively_so3(p);
  r.effective_group = so3 ? Ambient::SO3 : Ambient::SU2;
  const long h = so3 ? 2 : 1;
  auto add = [](std::vector<OrbitType>& v, const OrbitType& t, const OrbitType& principal) {
    if (t == principal) return;
    if (std::find(v.begin(), v.end(), t) == v.end()) v.push_back(t);
  };
  if (p.m == 0 && p.n == 0) {
    r.su2_principal = r.principal = OrbitType::circle();
    r.quotient_space = QuotientSpace::Sphere3;
    return r;
  }
  if (p.m == 0) {
    r.su2_principal = OrbitType::cyclic(static_cast<int>(p.n));
    r.su2_others = {OrbitType::circle()};
    r.principal = OrbitType::cyclic(static_cast<int>(p.n / h));
    r.others = {OrbitType::circle()};
    r.quotient_space = QuotientSpace::Disk2;
    return r;
  }
  const long d = std::gcd(p.m, p.n);
  r.su2_principal = OrbitType::cyclic(static_cast<int>(d));
  add(r.su2_others, OrbitType::cyclic(static_cast<int>(p.m)), r.su2_principal);
  add(r.su2_others, OrbitType::cyclic(static_cast<int>(p.n)), r.su2_principal);
  r.principal = OrbitType::cyclic(static_cast<int>(d / h));
  add(r.others, OrbitType::cyclic(static_cast<int>(p.m / h)), r.principal);
  add(r.others, OrbitType::cyclic(static_cast<int>(p.n / h)), r.principal);
  r.quotient_space = QuotientSpace::Sphere2;
  return r;
}

// ---------------------------------------------------------------------------
// Manifolds.

struct ManifoldId {
  enum class Tag { S5, S3xS2, S3twistS2, Wu, Brieskorn2333, ConnSum, ConnSumS3xS2 };

  Tag tag = Tag::S5;
  int k = 0;  // copies of W (ConnSum) or extra S3xS2 summands (ConnSumS3xS2)
  int l = 0;  // copies of B (ConnSum)

  /// k W # l B, normalized so that single copies get their own tag.
  static ManifoldId conn_sum(int k_w, int l_b) {
    if (k_w == 1 && l_b == 0) return {Tag::Wu, 0, 0};
    if (k_w == 0 && l_b == 1) return {Tag::Brieskorn2333, 0, 0};
    return {Tag::ConnSum, k_w, l_b};
  }

  std::string name() const {
    switch (tag) {
      case Tag::S5: return "S5";
      case Tag::S3xS2: return "S3xS2";
      case Tag::S3twistS2: return "S3twistS2";
      case Tag::Wu: return "Wu";
      case Tag::Brieskorn2333: return "Brieskorn2333";
      case Tag::ConnSum: return "ConnSum(" + std::to_string(k) + "," + std::to_string(l) + ")";
      case Tag::ConnSumS3xS2: return "ConnSumS3xS2(" + std::to_string(k) + ")";
    }
    return "?";
  }

  friend bool operator==(const ManifoldId&, const ManifoldId&) = default;
};

inline ManifoldId diffeo_type(const ActionParams& p) {
  return {(p.m + p.n) % 2 == 0 ? ManifoldId::Tag::S3xS2 : ManifoldId::Tag::S3twistS2, 0, 0};
}

// ---------------------------------------------------------------------------
// Slice data and fundamental group.

struct SliceData {
  long d = 1;
  long q1 = 1, q2 = 1;
  long a1 = 0, a2 = 0;
  long b1 = 0, b2 = 0;
  long k = 0;
  friend bool operator==(const SliceData&, const SliceData&) = default;
};

/// Inverse of a modulo q in [0, q); 0 when q = 1.
inline long mod_inverse(long a, long q) {
  if (q == 1) return 0;
  mpz_class r;
  mpz_class aa(a), qq(q);
  if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), qq.get_mpz_t()) == 0)
    throw Error(Errc::NotCoprime, std::to_string(a) + " is not invertible mod " + std::to_string(q));
  return r.get_si();
}

inline long mod_floor(long a, long q) { return ((a % q) + q) % q; }

inline SliceData slice_data(const ActionParams& p) {
  if (p.m == 0) throw Error(Errc::NoExceptionalOrbits, format_params(p) + " has singular orbits");
  SliceData s;
  s.d = std::gcd(p.m, p.n);
  s.q1 = p.m / s.d;
  s.q2 = p.n / s.d;
  s.a1 = s.q1 == 1 ? 0 : mod_floor(s.q2 * mod_inverse(mod_floor(p.l, s.q1), s.q1), s.q1);
  s.a2 = s.q2 == 1 ? 0 : mod_floor(s.q1 * mod_inverse(mod_floor(p.l, s.q2), s.q2), s.q2);
  s.b1 = mod_inverse(s.a1, s.q1);
  s.b2 = mod_inverse(s.a2, s.q2);
  s.k = (p.l - s.b1 * s.q2 - s.b2 * s.q1) / (s.q1 * s.q2);
  return s;
}

inline long reconstruct_l(const SliceData& s) { return s.b1 * s.q2 + s.b2 * s.q1 + s.k * s.q1 * s.q2; }

/// Order of pi_1 of the manifold glued from the two slice neighborhoods
/// with weights n1, n2, slice numbers b1, b2 and clutching class k.
inline long pi1_order(long n1, long n2, long b1, long b2, long k) {
  if (n1 < 1 || n2 < 1) throw Error(Errc::BadParams, "n1, n2 must be positive");
  const long d = std::gcd(n1, n2);
  const long q1 = n1 / d, q2 = n2 / d;
  if (b1 < 0 || b1 >= q1 || b2 < 0 || b2 >= q2)
    throw Error(Errc::BadParams, "need 0 <= b_j < q_j = (" + std::to_string(q1) + "," + std::to_string(q2) + ")");
  if (std::gcd(b1, q1) != 1 || std::gcd(b2, q2) != 1) throw Error(Errc::BadParams, "b_j must be coprime to q_j");
  const long l = b1 * q2 + b2 * q1 + k * q1 * q2;
  return std::gcd(std::gcd(n1, n2), std::labs(l));
}

// ---------------------------------------------------------------------------
// Equivalence.

struct EquivalenceVerdict {
  bool equivalent = false;
  std::string rule;
};

/// Modulus of the l-congruence for d in {1, 2}: mn/d = d q1 q2.
inline long equivalence_modulus(const ActionParams& p) { return p.m * p.n / std::gcd(p.m, p.n); }

inline EquivalenceVerdict equivalence(const ActionParams& p, const ActionParams& q) {
  if (p.m != q.m || p.n != q.n) return {false, "different (m,n)"};
  if (p.m == 0) return {true, "m=0: l is fixed to 1"};
  const long d = std::gcd(p.m, p.n);
  if (d >= 3) return {p.l == q.l, "d>=3 rigidity: l = l'"};
  const long M = equivalence_modulus(p);
  const bool eq = mod_floor(p.l - q.l, M) == 0 || mod_floor(p.l + q.l, M) == 0;
  return {eq, d == 1 ? "d=1 congruence mod mn" : "d=2 congruence mod mn/2"};
}

inline bool are_equivalent(const ActionParams& p, const ActionParams& q) { return equivalence(p, q).equivalent; }

/// Least valid l in the class of p.
inline ActionParams canonical_form(const ActionParams& p) {
  if (p.m == 0) return {0, p.n, 1};
  if (std::gcd(p.m, p.n) >= 3) return p;
  const long M = equivalence_modulus(p);
  for (long l = 0; l <= M; ++l)
    if (is_valid(p.m, p.n, l) && are_equivalent(p, {p.m, p.n, l})) return {p.m, p.n, l};
  return p;
}

inline std::vector<ActionParams> enumerate_actions(long m, long n, long l_max) {
  m = std::labs(m);
  n = std::labs(n);
  if (m > n) std::swap(m, n);
  std::vector<ActionParams> out;
  for (long l = 0; l <= l_max; ++l) {
    if (!is_valid(m, n, l)) continue;
    ActionParams p{m, n, l};
    if (canonical_form(p) == p) out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fixed set of the principal isotropy group.

struct FixedSet {
  enum class Kind { TwoSpheres3, TwoLensSpaces, WholeManifoldOrNone };

  Kind kind = Kind::WholeManifoldOrNone;
  long l = 0;             // lens spaces S^3/Z_l
  long n1 = 0, n2 = 0;    // weights of the Z_l-action on S^3
  std::optional<long> pi1_order;

  std::string describe() const {
    switch (kind) {
      case Kind::TwoSpheres3: return "two copies of S^3";
      case Kind::TwoLensSpaces:
        return "two copies of S^3/Z_" + std::to_string(l) + " with weights (" + std::to_string(n1) + "," +
               std::to_string(n2) + ")";
      case Kind::WholeManifoldOrNone: return "whole manifold (principal isotropy acts trivially)";
    }
    return "?";
  }
};

inline std::string to_string(FixedSet::Kind k) {
  switch (k) {
    case FixedSet::Kind::TwoSpheres3: return "TwoSpheres3";
    case FixedSet::Kind::TwoLensSpaces: return "TwoLensSpaces";
    case FixedSet::Kind::WholeManifoldOrNone: return "WholeManifoldOrNone";
  }
  return "?";
}

/// For m = 0 the effective principal isotropy is trivial exactly when
/// n is 1 or 2; otherwise its fixed set is a pair of 3-spheres.
inline FixedSet fixed_set_principal(const ActionParams& p) {
  FixedSet f;
  if (p.m == 0) {
    if (p.n == 1 || p.n == 2) return f;
    f.kind = FixedSet::Kind::TwoSpheres3;
    f.pi1_order = 1;
    return f;
  }
  if (std::gcd(p.m, p.n) >= 3) {
    f.kind = FixedSet::Kind::TwoLensSpaces;
    f.l = p.l;
    f.n1 = p.m;
    f.n2 = p.n;
    f.pi1_order = p.l;
  }
  return f;
}

// ---------------------------------------------------------------------------
// Classified actions and curvature.

struct NAction {
  ActionParams params;
};

/// Linear actions on S^5: SO(3) on R^3 + R^3 trivially extended
/// (isotropy SO(2), SO(3)), SO(3) diagonally on R^3 + R^3 (isotropy 1,
/// SO(2)), SU(2) on C^2 + C (isotropy 1, SU(2)), and SO(3) on traceless
/// symmetric matrices (isotropy Z2xZ2, O(2), SO(3); two fixed points).
struct LinearS5 {
  enum class Kind { SO3Standard, SO3Diagonal, SU2Standard, SO3Irreducible };
  Kind kind = Kind::SO3Standard;
};

struct WuSU2 {};

/// SO(3) on k W # l B (three orbit types); (1,0) is the Wu manifold.
struct HudsonSum {
  int k_w = 1;
  int l_b = 0;
  int fixed_points() const { return k_w + 2 * l_b + 2; }
};

/// SO(3) acting on the first factor of S^3 x S^2 and its equivariant
/// connected sums at fixed 2-spheres; k = 0 is S^3 x S^2 itself and the
/// orbit space is S^3 minus k + 2 open balls.
struct FirstFactorSum {
  int k = 0;
};

using ClassifiedAction = std::variant<NAction, LinearS5, WuSU2, HudsonSum, FirstFactorSum>;

inline Ambient acting_group(const ClassifiedAction& a) {
  struct V {
    Ambient operator()(const NAction& x) const {
      return effectively_so3(x.params) ? Ambient::SO3 : Ambient::SU2;
    }
    Ambient operator()(const LinearS5& x) const {
      return x.kind == LinearS5::Kind::SU2Standard ? Ambient::SU2 : Ambient::SO3;
    }
    Ambient operator()(const WuSU2&) const { return Ambient::SU2; }
    Ambient operator()(const HudsonSum&) const { return Ambient::SO3; }
    Ambient operator()(const FirstFactorSum&) const { return Ambient::SO3; }
  };
  return std::visit(V{}, a);
}

inline ManifoldId manifold_of(const ClassifiedAction& a) {
  struct V {
    ManifoldId operator()(const NAction& x) const { return diffeo_type(x.params); }
    ManifoldId operator()(const LinearS5&) const { return {}; }
    ManifoldId operator()(const WuSU2&) const { return {ManifoldId::Tag::Wu, 0, 0}; }
    ManifoldId operator()(const HudsonSum& x) const { return ManifoldId::conn_sum(x.k_w, x.l_b); }
    ManifoldId operator()(const FirstFactorSum& x) const {
      if (x.k == 0) return {ManifoldId::Tag::S3xS2, 0, 0};
      return {ManifoldId::Tag::ConnSumS3xS2, x.k, 0};
    }
  };
  return std::visit(V{}, a);
}

inline std::string describe(const ClassifiedAction& a) {
  struct V {
    std::string operator()(const NAction& x) const { return format_params(x.params); }
    std::string operator()(const LinearS5& x) const {
      switch (x.kind) {
        case LinearS5::Kind::SO3Standard: return "linear SO(3) on S5, isotropy SO(2) and SO(3)";
        case LinearS5::Kind::SO3Diagonal: return "linear SO(3) on S5, isotropy 1 and SO(2)";
        case LinearS5::Kind::SU2Standard: return "linear SU(2) on S5, isotropy 1 and SU(2)";
        case LinearS5::Kind::SO3Irreducible: return "irreducible SO(3) on S5, two fixed points";
      }
      return "?";
    }
    std::string operator()(const WuSU2&) const { return "SU(2) on SU(3)/SO(3) by left multiplication"; }
    std::string operator()(const HudsonSum& x) const {
      return "SO(3) on " + ManifoldId::conn_sum(x.k_w, x.l_b).name() + ", " + std::to_string(x.fixed_points()) +
             " fixed points";
    }
    std::string operator()(const FirstFactorSum& x) const {
      return "SO(3) on first factor of S3xS2, " + std::to_string(x.k) + " extra summands";
    }
  };
  return std::visit(V{}, a);
}

struct CurvatureVerdict {
  enum class Nonnegative { Yes, No };
  enum class Positive { LinearSphere, Candidate, Excluded };
  enum class Reason { ONeill, FrankelLensPair, ThreeFixedPoints, SoulTwoBoundary, TheoremB };

  Nonnegative nonnegative = Nonnegative::Yes;
  Positive positive = Positive::Excluded;
  Reason reason = Reason::ONeill;
};

inline std::string to_string(CurvatureVerdict::Nonnegative v) { return v == CurvatureVerdict::Nonnegative::Yes ? "Yes" : "No"; }

inline std::string to_string(CurvatureVerdict::Positive v) {
  switch (v) {
    case CurvatureVerdict::Positive::LinearSphere: return "LinearSphere";
    case CurvatureVerdict::Positive::Candidate: return "Candidate";
    case CurvatureVerdict::Positive::Excluded: return "Excluded";
  }
  return "?";
}

inline std::string to_string(CurvatureVerdict::Reason r) {
  switch (r) {
    case CurvatureVerdict::Reason::ONeill: return "ONeill";
    case CurvatureVerdict::Reason::FrankelLensPair: return "FrankelLensPair";
    case CurvatureVerdict::Reason::ThreeFixedPoints: return "ThreeFixedPoints";
    case CurvatureVerdict::Reason::SoulTwoBoundary: return "SoulTwoBoundary";
    case CurvatureVerdict::Reason::TheoremB: return "TheoremB";
  }
  return "?";
}

/// Largest number of isolated fixed points allowed on the boundary
/// polygon of the orbit space, whose angles are all pi/3: n pi/3 must be
/// at least (n - 2) pi, strictly so for positive curvature.
inline int max_isolated_fixed_points(bool positive) {
  int best = 0;
  for (int n = 2; n <= 64; ++n) {
    const Rational lhs(n, 3), rhs(n - 2);
    if (positive ? lhs > rhs : lhs >= rhs) best = n;
  }
  return best;
}

inline CurvatureVerdict curvature_verdict(const ClassifiedAction& a) {
  using N = CurvatureVerdict::Nonnegative;
  using P = CurvatureVerdict::Positive;
  using R = CurvatureVerdict::Reason;
  struct V {
    CurvatureVerdict operator()(const NAction& x) const {
      const ActionParams& p = x.params;
      bool trivial_principal = p.m == 0 ? (p.n == 1 || p.n == 2) : std::gcd(p.m, p.n) <= 2;
      if (trivial_principal) return {N::Yes, P::Candidate, R::TheoremB};
      return {N::Yes, P::Excluded, R::FrankelLensPair};
    }
    CurvatureVerdict operator()(const LinearS5&) const { return {N::Yes, P::LinearSphere, R::TheoremB}; }
    CurvatureVerdict operator()(const WuSU2&) const { return {N::Yes, P::Candidate, R::TheoremB}; }
    CurvatureVerdict operator()(const HudsonSum& x) const {
      if (x.k_w + x.l_b < 1) throw Error(Errc::UnclassifiedTarget, "empty connected sum");
      if (x.fixed_points() > max_isolated_fixed_points(false)) return {N::No, P::Excluded, R::ThreeFixedPoints};
      return {N::Yes, P::Excluded, R::ThreeFixedPoints};
    }
    CurvatureVerdict operator()(const FirstFactorSum& x) const {
      if (x.k < 0) throw Error(Errc::UnclassifiedTarget, "negative summand count");
      return {x.k == 0 ? N::Yes : N::No, P::Excluded, R::SoulTwoBoundary};
    }
  };
  return std::visit(V{}, a);
}

// ---------------------------------------------------------------------------
// Actions with one orbit type.

struct Cardinality {
  bool countably_infinite = false;
  long finite = 0;

  static Cardinality of(long k) { return {false, k}; }
  static Cardinality infinite() { return {true, 0}; }

  std::string to_string() const { return countably_infinite ? "CountablyInfinite" : "Finite(" + std::to_string(finite) + ")"; }
  friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

/// One row of the table of normalizers N(H) for one-orbit-type actions.
/// m stands for any m >= 3.
struct Table1Row {
  Ambient group;
  std::string h, normalizer, quotient, homotopy;
  Cardinality count;
  bool finite_normalizer;
};

inline const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = [] {
    auto z = Cardinality::infinite();
    auto one = Cardinality::of(1);
    return std::vector<Table1Row>{
        {Ambient::SO3, "1", "SO(3)", "SO(3)", "Z_2", Cardinality::of(2), false},
        {Ambient::SO3, "Z_2", "O(2)", "SO(2)", "Z", z, false},
        {Ambient::SO3, "Z_m", "O(2)", "O(2)", "Z", z, false},
        {Ambient::SO3, "D_2", "O", "D_3", "1", one, true},
        {Ambient::SO3, "D_m", "D_2m", "Z_2", "1", one, true},
        {Ambient::SO3, "T", "O", "Z_2", "1", one, true},
        {Ambient::SO3, "I", "I", "1", "1", one, true},
        {Ambient::SO3, "O", "O", "1", "1", one, true},
        {Ambient::SO3, "SO(2)", "O(2)", "Z_2", "1", one, false},
        {Ambient::SO3, "O(2)", "O(2)", "1", "1", one, false},
        {Ambient::SU2, "1", "SU(2)", "SU(2)", "1", one, false},
        {Ambient::SU2, "Z_2", "SU(2)", "SO(3)", "Z_2", Cardinality::of(2), false},
        {Ambient::SU2, "Z_m", "Pin(2)", "Pin(2)", "Z", z, false},
        {Ambient::SU2, "Dic_2", "O*", "D_3", "1", one, true},
        {Ambient::SU2, "Dic_m", "Dic_2m", "Z_2", "1", one, true},
        {Ambient::SU2, "T*", "O*", "Z_2", "1", one, true},
        {Ambient::SU2, "I*", "I*", "1", "1", one, true},
        {Ambient::SU2, "O*", "O*", "1", "1", one, true},
        {Ambient::SU2, "SO(2)", "Pin(2)", "Z_2", "1", one, false},
        {Ambient::SU2, "Pin(2)", "Pin(2)", "1", "1", one, false},
    };
  }();
  return rows;
}

/// Table row label for a concrete subgroup type.
inline std::optional<std::string> table1_label(Ambient g, const OrbitType& h) {
  using T = IsoType::Tag;
  switch (h.kind) {
    case OrbitType::Kind::Circle: return "SO(2)";
    case OrbitType::Kind::O2: return g == Ambient::SO3 ? std::optional<std::string>("O(2)") : std::nullopt;
    case OrbitType::Kind::Pin2: return g == Ambient::SU2 ? std::optional<std::string>("Pin(2)") : std::nullopt;
    case OrbitType::Kind::Full: return std::nullopt;
    case OrbitType::Kind::Finite: break;
  }
  const IsoType& t = h.finite;
  const bool su2 = g == Ambient::SU2;
  switch (t.tag) {
    case T::Trivial: return "1";
    case T::Cyclic: return t.param == 2 ? "Z_2" : "Z_m";
    case T::Dicyclic:
      if (!su2) return std::nullopt;
      return t.param == 2 ? "Dic_2" : "Dic_m";
    case T::BinTet: return su2 ? std::optional<std::string>("T*") : std::nullopt;
    case T::BinOct: return su2 ? std::optional<std::string>("O*") : std::nullopt;
    case T::BinIco: return su2 ? std::optional<std::string>("I*") : std::nullopt;
    case T::KleinFour: return su2 ? std::nullopt : std::optional<std::string>("D_2");
    case T::Dihedral: return su2 ? std::nullopt : std::optional<std::string>("D_m");
    case T::Tet: return su2 ? std::nullopt : std::optional<std::string>("T");
    case T::Oct: return su2 ? std::nullopt : std::optional<std::string>("O");
    case T::Ico: return su2 ? std::nullopt : std::optional<std::string>("I");
  }
  return std::nullopt;
}

/// Number of G-manifolds with the single orbit type G/H and orbit space a
/// sphere of dimension equal to the cohomogeneity 2 + dim H.
inline Cardinality count_uot_actions(Ambient g, const OrbitType& h, int cohomogeneity) {
  auto label = table1_label(g, h);
  if (!label) throw Error(Errc::UnknownRow, h.name() + " is not a listed subgroup of " + to_string(g));
  if (cohomogeneity != 2 + h.dimension())
    throw Error(Errc::UnknownRow, "cohomogeneity of G/" + h.name() + " is " + std::to_string(2 + h.dimension()));
  for (const Table1Row& r : table1())
    if (r.group == g && r.h == *label) return r.count;
  throw Error(Errc::UnknownRow, *label);
}

// ---------------------------------------------------------------------------
// Actions with singular orbits: two and three orbit types.

struct Table2Row {
  char id;
  std::string h, k;
  Ambient group;
  std::string homotopy, pi0, bound;
};

inline const std::vector<Table2Row>& table2() {
  static const std::vector<Table2Row> rows{
      {'a', "1", "SO(2)", Ambient::SO3, "pi_1(RP^2)", "1", "2"},
      {'b', "1", "SO(2)", Ambient::SU2, "pi_1(RP^2)", "1", "2"},
      {'c', "1", "SU(2)", Ambient::SU2, "0", "1", "1"},
      {'d', "Z_2", "SO(2)", Ambient::SO3, "0", "1", "1"},
      {'e', "Z_2", "SO(2)", Ambient::SU2, "pi_1(RP^2)", "1", "2"},
      {'f', "Z_m", "SO(2)", Ambient::SO3, "0", "1", "1"},
      {'g', "Z_m", "SO(2)", Ambient::SU2, "0", "1", "1"},
      {'h', "Z_2", "O(2)", Ambient::SO3, "pi_1(S^1)", "Z_2", "Z"},
      {'i', "D_m", "O(2)", Ambient::SO3, "0", "Z_2", "1"},
      {'j', "SO(2)", "SO(3)", Ambient::SO3, "0", "1", "1"},
  };
  return rows;
}

struct SingularClassification {
  std::vector<ClassifiedAction> actions;
  /// Upper bound from the classification table, when the chain has a row.
  std::optional<std::string> bound;
  std::optional<std::string> note;
};

/// Realized classes for the isotropy chain H < K of G. `count` is the
/// number of boundary 2-spheres of the orbit space for (SO(2), SO(3)) and
/// the number of isolated fixed points for Z2xZ2 < O(2) < SO(3).
inline SingularClassification singular_classification(Ambient g, const OrbitType& h, const OrbitType& k,
                                                      std::optional<int> count = std::nullopt) {
  using K = OrbitType::Kind;
  SingularClassification r;
  auto disallowed = [&] {
    return Error(Errc::DisallowedChain, "(" + h.name() + ", " + k.name() + ") under " + to_string(g));
  };
  const bool cyclic_h = h.kind == K::Finite && h.finite.is_cyclic();
  if (g == Ambient::SU2) {
    if (cyclic_h && k.kind == K::Circle) {
      const int m = h.finite.cyclic_order();
      r.bound = m == 1 ? "2" : m == 2 ? "2" : "1";
      if (m == 1) {
        r.actions = {NAction{{0, 1, 1}}, WuSU2{}};
      } else {
        r.actions = {NAction{{0, m, 1}}};
        if (m == 2) r.note = "bound 2 but a single realized class is known; a second class is unresolved";
      }
      return r;
    }
    if (cyclic_h && h.finite.cyclic_order() == 1 && k.kind == K::Full && k.ambient == Ambient::SU2) {
      r.bound = "1";
      r.actions = {LinearS5{LinearS5::Kind::SU2Standard}};
      return r;
    }
    throw disallowed();
  }
  if (cyclic_h && k.kind == K::Circle) {
    const int m = h.finite.cyclic_order();
    if (m == 1) {
      r.bound = "2";
      r.actions = {LinearS5{LinearS5::Kind::SO3Diagonal}, NAction{{0, 2, 1}}};
    } else {
      r.bound = "1";
      r.actions = {NAction{{0, 2L * m, 1}}};
    }
    return r;
  }
  const bool dihedral_h =
      h.kind == K::Finite && (h.finite.tag == IsoType::Tag::Dihedral || h.finite.tag == IsoType::Tag::KleinFour ||
                              (h.finite.is_cyclic() && h.finite.cyclic_order() == 2));
  if (h.kind == K::Finite && h.finite.tag == IsoType::Tag::KleinFour && count &&
      (k.kind == K::O2 || (k.kind == K::Full && k.ambient == Ambient::SO3))) {
    // Three orbit types; count = isolated fixed points = k + 2l + 2.
    const int f = *count;
    if (f < 2) throw Error(Errc::BadParam, "at least two fixed points");
    r.note = "three orbit types Z2xZ2 < O(2) < SO(3)";
    if (f == 2) r.actions.push_back(LinearS5{LinearS5::Kind::SO3Irreducible});
    for (int l = 0; 2 * l <= f - 2; ++l) {
      const int kw = f - 2 - 2 * l;
      if (kw + l >= 1) r.actions.push_back(HudsonSum{kw, l});
    }
    return r;
  }
  if (dihedral_h && k.kind == K::O2) {
    r.bound = h.finite.is_cyclic() ? "Z" : "1";
    r.note = "no simply-connected examples";
    return r;
  }
  if (h.kind == K::Circle && k.kind == K::Full && k.ambient == Ambient::SO3) {
    if (!count) throw Error(Errc::BadParam, "(SO(2), SO(3)) needs the number of boundary spheres");
    if (*count < 1) throw Error(Errc::BadParam, "the orbit space has at least one boundary sphere");
    r.bound = "1";
    if (*count == 1)
      r.actions = {LinearS5{LinearS5::Kind::SO3Standard}};
    else
      r.actions = {FirstFactorSum{*count - 2}};
    return r;
  }
  throw disallowed();
}

// ---------------------------------------------------------------------------
// JSON.

inline nlohmann::ordered_json to_json(const SliceData& s) {
  return {{"d", s.d}, {"q1", s.q1}, {"q2", s.q2}, {"a1", s.a1}, {"a2", s.a2}, {"b1", s.b1}, {"b2", s.b2}, {"k", s.k}};
}

inline nlohmann::ordered_json to_json(const CurvatureVerdict& v) {
  return {{"nonnegative", to_string(v.nonnegative)}, {"positive", to_string(v.positive)}, {"reason", to_string(v.reason)}};
}

inline nlohmann::ordered_json to_json(const FixedSet& f) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(f.kind);
  if (f.kind == FixedSet::Kind::TwoLensSpaces) {
    j["l"] = f.l;
    j["weights"] = {f.n1, f.n2};
  }
  j["pi1_order"] = f.pi1_order ? nlohmann::ordered_json(*f.pi1_order) : nlohmann::ordered_json(nullptr);
  j["description"] = f.describe();
  return j;
}

inline std::vector<std::string> names(const std::vector<OrbitType>& v) {
  std::vector<std::string> out;
  for (const OrbitType& t : v) out.push_back(t.name());
  return out;
}

/// pi_1 of N_{m,n}^l; trivial for every valid triple.
inline long action_pi1_order(const ActionParams& p) {
  if (p.m == 0) return 1;
  SliceData s = slice_data(p);
  return pi1_order(p.m, p.n, s.b1, s.b2, s.k);
}

/// Full record for N_{m,n}^l.
inline nlohmann::ordered_json classify_json(const ActionParams& p) {
  IsotropyProfile iso = isotropy_profile(p);
  nlohmann::ordered_json j;
  j["m"] = p.m;
  j["n"] = p.n;
  j["l"] = p.l;
  j["canonical_l"] = canonical_form(p).l;
  j["effective_group"] = to_string(iso.effective_group);
  j["diffeo_type"] = diffeo_type(p).name();
  j["isotropy"] = {{"principal", iso.principal.name()},
                   {"others", names(iso.others)},
                   {"su2_principal", iso.su2_principal.name()},
                   {"su2_others", names(iso.su2_others)},
                   {"quotient_space", to_string(iso.quotient_space)}};
  j["slice"] = p.m == 0 ? nlohmann::ordered_json(nullptr) : to_json(slice_data(p));
  j["pi1_order"] = action_pi1_order(p);
  j["fixed_set"] = to_json(fixed_set_principal(p));
  j["curvature"] = to_json(curvature_verdict(NAction{p}));
  return j;
}

inline nlohmann::ordered_json to_json(const ClassifiedAction& a) {
  nlohmann::ordered_json j;
  j["group"] = to_string(acting_group(a));
  j["manifold"] = manifold_of(a).name();
  j["description"] = describe(a);
  if (const auto* n = std::get_if<NAction>(&a)) j["params"] = {n->params.m, n->params.n, n->params.l};
  return j;
}

/// Representatives of every classified family: N_{m,n}^l for m <= n <=
/// n_max in canonical form with l <= l_max, the linear spheres, SU(2) on
/// W, Hudson sums with up to `sums` summands, and first-factor sums.
inline std::vector<ClassifiedAction> classified_catalog(long n_max = 6, long l_max = 12, int sums = 3) {
  std::vector<ClassifiedAction> out;
  for (long n = 0; n <= n_max; ++n)
    for (long m = 0; m <= n; ++m)
      for (const ActionParams& p : enumerate_actions(m, n, l_max)) out.push_back(NAction{p});
  for (auto k : {LinearS5::Kind::SO3Standard, LinearS5::Kind::SO3Diagonal, LinearS5::Kind::SU2Standard,
                 LinearS5::Kind::SO3Irreducible})
    out.push_back(LinearS5{k});
  out.push_back(WuSU2{});
  for (int k = 0; k <= sums; ++k)
    for (int l = 0; k + l <= sums; ++l)
      if (k + l >= 1) out.push_back(HudsonSum{k, l});
  for (int k = 0; k <= sums; ++k) out.push_back(FirstFactorSum{k});
  return out;
}

}  // namespace eq5
