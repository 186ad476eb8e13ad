#pragma once

// Exhaustive cross-checks tying the group engines to the action model.
// Each verifier reports how many cases it examined and every
// counterexample it found.

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "eq5/actions.hpp"
#include "eq5/fingroups.hpp"
#include "eq5/fpgroups.hpp"

namespace eq5 {

struct VerificationReport {
  enum class Status { Pass, Fail, Inconclusive };

  std::string lemma;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  std::size_t inconclusive = 0;
  std::vector<std::string> notes;
  Status status = Status::Fail;

  void fail(std::string what) { failures.push_back(std::move(what)); }

  /// A pass over zero cases counts as a failure.
  VerificationReport& finish() {
    if (!failures.empty() || cases == 0)
      status = Status::Fail;
    else if (inconclusive > 0)
      status = Status::Inconclusive;
    else
      status = Status::Pass;
    return *this;
  }

  int exit_code() const { return status == Status::Pass ? 0 : status == Status::Fail ? 1 : 2; }
};

inline std::string to_string(VerificationReport::Status s) {
  switch (s) {
    case VerificationReport::Status::Pass: return "Pass";
    case VerificationReport::Status::Fail: return "Fail";
    case VerificationReport::Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["lemma"] = r.lemma;
  j["cases"] = r.cases;
  j["failures"] = r.failures;
  j["status"] = to_string(r.status);
  j["inconclusive"] = r.inconclusive;
  j["notes"] = r.notes;
  return j;
}

// ---------------------------------------------------------------------------
// Fundamental group of the two-slice gluing.

/// <e1, e2 | e1^n1, e2^n2, e1^q1 e2^-q2, e1^b1 e2^(b2 + k q2)>
inline Presentation pi1_presentation(long n1, long n2, long b1, long b2, long k) {
  const long d = std::gcd(n1, n2);
  const long q1 = n1 / d, q2 = n2 / d;
  Presentation p;
  p.generators = {"e1", "e2"};
  p.add_relator(Word::power(0, n1));
  p.add_relator(Word::power(1, n2));
  p.add_relator(Word({{0, q1}, {1, -q2}}));
  p.add_relator(Word({{0, b1}, {1, b2 + k * q2}}));
  return p;
}

struct Pi1Certificate {
  CosetResult cosets;
  Abelianization abelian;
  bool table_consistent = false;
};

inline Pi1Certificate pi1_by_cosets(long n1, long n2, long b1, long b2, long k,
                                    std::size_t max_cosets = kDefaultMaxCosets) {
  pi1_order(n1, n2, b1, b2, k);  // parameter checks
  Presentation p = pi1_presentation(n1, n2, b1, b2, k);
  Pi1Certificate c;
  c.cosets = todd_coxeter(p, max_cosets);
  c.abelian = abelianization(p);
  c.table_consistent = coset_table_consistent(p, c.cosets);
  return c;
}

inline bool is_cyclic_of_order(const Abelianization& a, long order) {
  if (a.free_rank != 0) return false;
  if (order == 1) return a.torsion.empty();
  return a.torsion.size() == 1 && a.torsion[0] == order;
}

inline VerificationReport verify_pi1_formula(long n_max = 10, long k_lo = -3, long k_hi = 3,
                                             std::size_t max_cosets = kDefaultMaxCosets) {
  VerificationReport r;
  r.lemma = "pi1";
  r.notes.push_back("n1 <= n2 <= " + std::to_string(n_max) + ", k in [" + std::to_string(k_lo) + ", " +
                    std::to_string(k_hi) + "], max_cosets " + std::to_string(max_cosets));
  if (n_max < 2) throw Error(Errc::BadParam, "n_max must be >= 2");
  for (long n2 = 1; n2 <= n_max; ++n2)
    for (long n1 = 1; n1 <= n2; ++n1) {
      const long d = std::gcd(n1, n2), q1 = n1 / d, q2 = n2 / d;
      for (long b1 = 0; b1 < q1; ++b1) {
        if (std::gcd(b1, q1) != 1) continue;
        for (long b2 = 0; b2 < q2; ++b2) {
          if (std::gcd(b2, q2) != 1) continue;
          for (long k = k_lo; k <= k_hi; ++k) {
            ++r.cases;
            const long expected = pi1_order(n1, n2, b1, b2, k);
            Pi1Certificate c = pi1_by_cosets(n1, n2, b1, b2, k, max_cosets);
            const std::string label = "(" + std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(b1) +
                                      "," + std::to_string(b2) + "," + std::to_string(k) + ")";
            if (!c.cosets.completed()) {
              ++r.inconclusive;
              r.notes.push_back(label + ": coset limit reached");
              continue;
            }
            if (static_cast<long>(c.cosets.order) != expected)
              r.fail(label + ": coset order " + std::to_string(c.cosets.order) + " != " + std::to_string(expected));
            if (!c.table_consistent) r.fail(label + ": coset table inconsistent");
            if (!is_cyclic_of_order(c.abelian, expected))
              r.fail(label + ": abelianization " + c.abelian.to_string());
          }
        }
      }
    }
  return r.finish();
}

// ---------------------------------------------------------------------------
// l = b1 q2 + b2 q1 + k q1 q2 as a bijection onto l coprime to q1 q2.

inline VerificationReport verify_bijection(long q1, long q2, long window) {
  if (q1 < 1 || q2 < 1 || std::gcd(q1, q2) != 1)
    throw Error(Errc::NotCoprime, "q1 = " + std::to_string(q1) + ", q2 = " + std::to_string(q2));
  if (window < 1) throw Error(Errc::BadParam, "window must be >= 1");
  VerificationReport r;
  r.lemma = "bijection";
  const long Q = q1 * q2;
  std::map<long, int> hits;
  for (long b1 = 0; b1 < q1; ++b1) {
    if (std::gcd(b1, q1) != 1) continue;
    for (long b2 = 0; b2 < q2; ++b2) {
      if (std::gcd(b2, q2) != 1) continue;
      for (long k = -window; k <= window; ++k) ++hits[b1 * q2 + b2 * q1 + k * Q];
    }
  }
  const long lo = -(window - 1) * Q, hi = window * Q;
  r.notes.push_back("covered interval [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  for (auto [l, count] : hits) {
    if (count > 1) r.fail("l = " + std::to_string(l) + " hit " + std::to_string(count) + " times");
    if (std::gcd(l, Q) != 1) r.fail("l = " + std::to_string(l) + " is not coprime to q1 q2");
  }
  for (long l = lo; l <= hi; ++l) {
    if (std::gcd(l, Q) != 1) continue;
    ++r.cases;
    if (!hits.count(l)) r.fail("l = " + std::to_string(l) + " not hit");
  }
  return r.finish();
}

// ---------------------------------------------------------------------------
// Normal subgroups with cyclic quotient of order >= 3.

namespace detail {

template <GroupElement E>
void scan_exceptional(VerificationReport& r, const FiniteSubgroup<E>& K, bool so3,
                      std::vector<std::string>& found) {
  const IsoType kt = recognize(K);
  for (const FiniteSubgroup<E>& N : normal_subgroups(K)) {
    ++r.cases;
    const IsoType q = quotient_type(K, N);
    if (!q.is_cyclic() || q.cyclic_order() < 3) continue;
    const IsoType nt = recognize(N);
    const std::string pair = "(" + nt.name() + ", " + kt.name() + ") with quotient " + q.name();
    found.push_back(pair);
    const bool allowed = (nt.is_cyclic() && kt.is_cyclic()) ||
                         (nt == IsoType::dicyclic(2) && kt == IsoType::bin_tet()) ||
                         (so3 && nt == IsoType::klein_four() && kt == IsoType::tet());
    if (!allowed) r.fail(std::string(so3 ? "SO(3): " : "SU(2): ") + pair);
  }
}

}  // namespace detail

/// Scans Cyclic(m), Dicyclic(m) for m <= m_max and the three binary
/// polyhedral groups, then their images in SO(3).
inline VerificationReport verify_exceptional_pairs(int m_max = 30) {
  if (m_max < 2) throw Error(Errc::BadParam, "m_max must be >= 2");
  VerificationReport r;
  r.lemma = "exceptional-pairs";
  r.notes.push_back("cyclic and dicyclic families truncated at m = " + std::to_string(m_max));
  std::vector<std::string> su2, so3;
  for (int m = 1; m <= m_max; ++m) {
    auto C = cyclic_group(m);
    detail::scan_exceptional(r, C, false, su2);
    detail::scan_exceptional(r, project_so3(C), true, so3);
  }
  for (int m = 2; m <= m_max; ++m) {
    auto D = dicyclic_group(m);
    detail::scan_exceptional(r, D, false, su2);
    detail::scan_exceptional(r, project_so3(D), true, so3);
  }
  std::vector<std::string> polyhedral;
  auto T = binary_tetrahedral();
  auto O = binary_octahedral();
  auto I = binary_icosahedral();
  detail::scan_exceptional(r, T, false, polyhedral);
  detail::scan_exceptional(r, O, false, polyhedral);
  detail::scan_exceptional(r, I, false, polyhedral);
  detail::scan_exceptional(r, project_so3(T), true, so3);
  detail::scan_exceptional(r, project_so3(O), true, so3);
  detail::scan_exceptional(r, project_so3(I), true, so3);
  const auto dic2 = std::count(polyhedral.begin(), polyhedral.end(), "(Dic_2, T*) with quotient Z_3");
  if (dic2 != 1 || polyhedral.size() != 1)
    r.fail("binary polyhedral qualifying pairs: " + std::to_string(polyhedral.size()) + ", (Dic_2, T*) seen " +
           std::to_string(dic2) + " times");
  r.notes.push_back("binary polyhedral qualifying pairs: " + std::to_string(polyhedral.size()));
  return r.finish();
}

// ---------------------------------------------------------------------------
// Normalizers of one-orbit-type isotropy groups.

namespace detail {

inline std::vector<Rational> sample_turns() {
  std::vector<Rational> t;
  for (int q : {1, 2, 3, 5, 7, 12})
    for (int p = 0; p < q; ++p) t.emplace_back(p, q);
  for (Rational& x : t) x.canonicalize();
  return t;
}

inline std::vector<Pin2Element> pin2_samples() {
  std::vector<Pin2Element> out;
  for (const Rational& t : sample_turns()) {
    out.push_back(Pin2Element::rotation(t));
    out.push_back(Pin2Element::rotation(t) * Pin2Element::j());
  }
  return out;
}

template <GroupElement E, class Pred>
bool conjugation_preserves(const std::vector<E>& xs, const std::vector<E>& hs, Pred in_h) {
  for (const E& x : xs)
    for (const E& h : hs)
      if (!in_h(x * h * inverse(x))) return false;
  return true;
}

inline IsoType table1_quotient(const std::string& label) {
  if (label == "D_3") return IsoType::dihedral(3);
  if (label == "Z_2") return IsoType::cyclic(2);
  return IsoType::trivial();
}

template <GroupElement E>
void check_finite_row(VerificationReport& r, const std::string& row, const FiniteSubgroup<E>& N,
                      const FiniteSubgroup<E>& H, const std::string& expected) {
  ++r.cases;
  try {
    N.members_of(H);
    if (!is_normal_in(N, H)) {
      r.fail(row + ": claimed normalizer does not normalize H");
      return;
    }
    const IsoType q = quotient_type(N, H);
    if (!(q == table1_quotient(expected))) r.fail(row + ": N(H)/H = " + q.name() + ", table says " + expected);
  } catch (const Error& e) {
    r.fail(row + ": " + e.what());
  }
}

}  // namespace detail

/// Finite rows: the listed N(H) contains and normalizes H, with the listed
/// quotient. Continuous rows are data; their containment and conjugation
/// invariance are checked on sampled elements.
inline VerificationReport verify_table1(int m_max = 10) {
  using detail::check_finite_row;
  VerificationReport r;
  r.lemma = "table1";

  auto Q8 = quaternion_group();
  auto T = binary_tetrahedral();
  auto O = binary_octahedral();
  auto I = binary_icosahedral();
  check_finite_row(r, "SU2 Dic_2", O, Q8, "D_3");
  check_finite_row(r, "SU2 T*", O, T, "Z_2");
  check_finite_row(r, "SU2 I*", I, I, "1");
  check_finite_row(r, "SU2 O*", O, O, "1");
  auto pO = project_so3(O);
  check_finite_row(r, "SO3 D_2", pO, project_so3(Q8), "D_3");
  check_finite_row(r, "SO3 T", pO, project_so3(T), "Z_2");
  check_finite_row(r, "SO3 I", project_so3(I), project_so3(I), "1");
  check_finite_row(r, "SO3 O", pO, pO, "1");
  for (int m = 3; m <= m_max; ++m) {
    auto big = dicyclic_group(2 * m);
    auto small = dicyclic_group(m);
    check_finite_row(r, "SU2 Dic_" + std::to_string(m), big, small, "Z_2");
    check_finite_row(r, "SO3 D_" + std::to_string(m), project_so3(big), project_so3(small), "Z_2");
  }
  // The listed normalizers are the full normalizers inside a larger group.
  ++r.cases;
  if (normalizer_in(O, Q8).order() != O.order()) r.fail("N_{O*}(Dic_2) != O*");
  ++r.cases;
  if (normalizer_in(O, T).order() != O.order()) r.fail("N_{O*}(T*) != O*");
  ++r.cases;
  if (normalizer_in(I, T).order() != T.order()) r.fail("N_{I*}(T*) != T*");

  // Continuous rows.
  const auto pin2 = detail::pin2_samples();
  auto in_pin2_rotations = [](const Pin2Element& x) { return !x.has_j(); };
  for (int m = 2; m <= m_max; ++m) {
    auto C = cyclic_group(m);
    ++r.cases;
    if (!detail::conjugation_preserves(pin2, C.elements(), [&](const Pin2Element& x) { return C.contains(x); }))
      r.fail("SU2 Z_" + std::to_string(m) + ": Pin(2) does not normalize");
    auto pC = project_so3(cyclic_group(2 * m));
    std::vector<Rotation<Pin2Element>> o2;
    for (const Pin2Element& x : pin2) o2.emplace_back(x);
    ++r.cases;
    if (!detail::conjugation_preserves(o2, pC.elements(), [&](const Rotation<Pin2Element>& x) { return pC.contains(x); }))
      r.fail("SO3 Z_" + std::to_string(m) + ": O(2) does not normalize");
  }
  std::vector<Pin2Element> circle;
  for (const Rational& t : detail::sample_turns()) circle.push_back(Pin2Element::rotation(t));
  ++r.cases;
  if (!detail::conjugation_preserves(pin2, circle, in_pin2_rotations)) r.fail("SU2 SO(2): Pin(2) does not normalize");
  ++r.cases;
  {
    std::vector<Rotation<Pin2Element>> o2, so2;
    for (const Pin2Element& x : pin2) o2.emplace_back(x);
    for (const Pin2Element& x : circle) so2.emplace_back(x);
    if (!detail::conjugation_preserves(o2, so2, [](const Rotation<Pin2Element>& x) { return !x.representative().has_j(); }))
      r.fail("SO3 SO(2): O(2) does not normalize");
  }
  ++r.cases;
  for (const UnitQuat& x : I.elements())
    if (!(x * UnitQuat::minus_one() == UnitQuat::minus_one() * x)) r.fail("SU2 Z_2: not central");
  // Outside Pin(2) nothing normalizes <i>: its normalizer in O* lies in Pin(2).
  ++r.cases;
  {
    auto Z4 = closure<UnitQuat>({UnitQuat::i()}, 4);
    const auto N = normalizer_in(O, Z4);
    for (const UnitQuat& x : N.elements()) {
      const auto& q = x.raw();
      const bool in_circle = q.c == FieldElement(0) && q.d == FieldElement(0);
      const bool in_coset = q.a == FieldElement(0) && q.b == FieldElement(0);
      if (!in_circle && !in_coset) r.fail("SU2 Z_4: normalizer in O* leaves Pin(2)");
    }
  }
  r.notes.push_back("continuous rows are data only; containment checked on sampled elements");
  r.notes.push_back("Dic_m and D_m rows checked for 3 <= m <= " + std::to_string(m_max));
  return r.finish();
}

// ---------------------------------------------------------------------------
// Two T* copies glued along Dic_2 and a power of the order-3 generator.

/// <i, j, w | i^4, i^2 = j^2, j^-1 i j = i^-1, w^3, w i w^-1 = j,
///  w j w^-1 = i j>, of order 24.
inline Presentation binary_tetrahedral_presentation() {
  return parse_presentation("<i, j, w | i^4, i^2 = j^2, j^-1 i j = i^-1, w^3, w i w^-1 = j, w j w^-1 = i j>");
}

/// Two copies of the T* presentation with i1 = i2, j1 = j2 and
/// w1^c1 = w2^c2; `amalgamate = false` keeps the free product.
inline Presentation noncyclic_amalgam(int c1, int c2, bool amalgamate = true) {
  const std::string rel =
      "i1^4, i1^2 = j1^2, j1^-1 i1 j1 = i1^-1, w1^3, w1 i1 w1^-1 = j1, w1 j1 w1^-1 = i1 j1, "
      "i2^4, i2^2 = j2^2, j2^-1 i2 j2 = i2^-1, w2^3, w2 i2 w2^-1 = j2, w2 j2 w2^-1 = i2 j2";
  std::string glue = amalgamate ? ", i1 = i2, j1 = j2, w1^" + std::to_string(c1) + " = w2^" + std::to_string(c2) : "";
  return parse_presentation("<i1, j1, w1, i2, j2, w2 | " + rel + glue + ">");
}

inline VerificationReport verify_noncyclic_obstruction() {
  VerificationReport r;
  r.lemma = "noncyclic";
  ++r.cases;
  CosetResult t = todd_coxeter(binary_tetrahedral_presentation());
  if (!t.completed() || t.order != 24) r.fail("T* presentation does not have order 24");
  for (int c1 : {1, 2})
    for (int c2 : {1, 2}) {
      ++r.cases;
      Abelianization a = abelianization(noncyclic_amalgam(c1, c2));
      const std::string label = "(c1,c2) = (" + std::to_string(c1) + "," + std::to_string(c2) + ")";
      r.notes.push_back(label + ": " + a.to_string());
      if (!(a.free_rank == 0 && a.torsion.size() == 1 && a.torsion[0] == 3)) r.fail(label + ": " + a.to_string());
    }
  ++r.cases;
  Abelianization free = abelianization(noncyclic_amalgam(1, 1, false));
  if (!(free.free_rank == 0 && free.torsion == std::vector<Integer>{3, 3}))
    r.fail("free product abelianizes to " + free.to_string());
  return r.finish();
}

// ---------------------------------------------------------------------------
// Number of equivalence classes of N_{m,n}^l.

/// Residues r mod mn/d with gcd(r,m) = gcd(r,n) = 1, counted up to sign.
inline std::size_t residue_orbit_count(long m, long n) {
  const long M = m * n / std::gcd(m, n);
  std::set<long> seen;
  std::size_t orbits = 0;
  for (long r = 0; r < M; ++r) {
    if (!is_valid(m, n, r) || seen.count(r)) continue;
    ++orbits;
    seen.insert(r);
    seen.insert(mod_floor(-r, M));
  }
  return orbits;
}

inline VerificationReport verify_equivalence_counts(long m, long n) {
  ActionParams shape = validate(m, n, 1);
  m = shape.m;
  n = shape.n;
  if (m == 0 || std::gcd(m, n) >= 3)
    throw Error(Errc::BadRegime, "class counts need m >= 1 and gcd(m,n) <= 2");
  VerificationReport r;
  r.lemma = "equiv-counts";
  const long M = m * n / std::gcd(m, n);
  auto classes = enumerate_actions(m, n, M);
  ++r.cases;
  const std::size_t oracle = residue_orbit_count(m, n);
  const std::string label = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
  if (classes.size() != oracle)
    r.fail(label + ": " + std::to_string(classes.size()) + " classes, oracle " + std::to_string(oracle));
  // Equivalence relation axioms on a window of three periods.
  std::vector<ActionParams> window;
  for (long l = 0; l <= 3 * M; ++l)
    if (is_valid(m, n, l)) window.push_back({m, n, l});
  for (const ActionParams& a : window) {
    ++r.cases;
    const ActionParams c = canonical_form(a);
    if (!are_equivalent(a, a)) r.fail(format_params(a) + ": not reflexive");
    if (!(canonical_form(c) == c)) r.fail(format_params(a) + ": canonical form not idempotent");
    if (std::find(classes.begin(), classes.end(), c) == classes.end())
      r.fail(format_params(a) + ": canonical form missing from enumeration");
    for (const ActionParams& b : window) {
      const bool ab = are_equivalent(a, b);
      if (ab != are_equivalent(b, a)) r.fail(format_params(a) + ", " + format_params(b) + ": not symmetric");
      if (ab != (canonical_form(b) == c)) r.fail(format_params(a) + ", " + format_params(b) + ": class mismatch");
    }
  }
  return r.finish();
}

/// d >= 3: distinct l give distinct slice data and distinct pi_1 of the
/// principal fixed set.
inline VerificationReport verify_rigidity(long m, long n, long l_max) {
  ActionParams shape = validate(m, n, 1);
  if (shape.m == 0 || std::gcd(shape.m, shape.n) < 3) throw Error(Errc::BadRegime, "rigidity needs gcd(m,n) >= 3");
  VerificationReport r;
  r.lemma = "equiv-counts";
  std::vector<ActionParams> ps;
  for (long l = 0; l <= l_max; ++l)
    if (is_valid(shape.m, shape.n, l)) ps.push_back({shape.m, shape.n, l});
  for (std::size_t a = 0; a < ps.size(); ++a)
    for (std::size_t b = a + 1; b < ps.size(); ++b) {
      ++r.cases;
      const bool same_slice = slice_data(ps[a]) == slice_data(ps[b]);
      const bool same_fixed = fixed_set_principal(ps[a]).pi1_order == fixed_set_principal(ps[b]).pi1_order;
      if (same_slice || same_fixed) r.fail(format_params(ps[a]) + " and " + format_params(ps[b]) + " share invariants");
      if (are_equivalent(ps[a], ps[b])) r.fail(format_params(ps[a]) + " ~ " + format_params(ps[b]));
    }
  return r.finish();
}

/// All (m, n) with 1 <= m <= n <= n_max and gcd <= 2, plus rigidity on
/// (3, 3) for l <= rigid_l_max.
inline VerificationReport verify_equivalence_sweep(long n_max = 8, long rigid_l_max = 10) {
  VerificationReport r;
  r.lemma = "equiv-counts";
  for (long n = 1; n <= n_max; ++n)
    for (long m = 1; m <= n; ++m) {
      if (std::gcd(m, n) >= 3) continue;
      VerificationReport sub = verify_equivalence_counts(m, n);
      r.cases += sub.cases;
      for (auto& f : sub.failures) r.fail(f);
    }
  VerificationReport rigid = verify_rigidity(3, 3, rigid_l_max);
  r.cases += rigid.cases;
  for (auto& f : rigid.failures) r.fail(f);
  r.notes.push_back("1 <= m <= n <= " + std::to_string(n_max) + " with gcd <= 2; rigidity on (3,3) for l <= " +
                    std::to_string(rigid_l_max));
  return r.finish();
}

// ---------------------------------------------------------------------------
// Angle sum of the boundary polygon.

inline VerificationReport verify_gauss_bonnet_bound(int n_max = 12) {
  VerificationReport r;
  r.lemma = "gauss-bonnet";
  for (int n = 2; n <= n_max; ++n) {
    ++r.cases;
    const Rational lhs(n, 3), rhs(n - 2);
    if ((lhs >= rhs) != (n <= 3)) r.fail("n = " + std::to_string(n) + ": nonnegative bound");
    if ((lhs > rhs) != (n <= 2)) r.fail("n = " + std::to_string(n) + ": positive bound");
  }
  ++r.cases;
  if (max_isolated_fixed_points(false) != 3) r.fail("nonnegative maximum is not 3");
  ++r.cases;
  if (max_isolated_fixed_points(true) != 2) r.fail("positive maximum is not 2");
  return r.finish();
}

}  // namespace eq5
