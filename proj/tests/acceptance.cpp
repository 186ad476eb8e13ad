// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--known-failing N[,N...]]
//
// Exit status is 0 when the set of failing criteria equals the known set.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "eq5/actions.hpp"
#include "eq5/fingroups.hpp"
#include "eq5/verifiers.hpp"

using namespace eq5;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

bool ok(const VerificationReport& r) { return r.status == VerificationReport::Status::Pass; }

std::string first_failures(const VerificationReport& r, std::size_t n = 3) {
  std::string s;
  for (std::size_t i = 0; i < r.failures.size() && i < n; ++i) s += (i ? " | " : "") + r.failures[i];
  if (r.failures.size() > n) s += " | ... (" + std::to_string(r.failures.size()) + " total)";
  return s;
}

Outcome pi1_formula() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto r = verify_pi1_formula(10, -3, 3, 100000);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.check(ok(r), "status " + to_string(r.status) + " " + first_failures(r));
  o.check(r.inconclusive == 0, std::to_string(r.inconclusive) + " inconclusive");
  o.check(r.cases >= 2000, "only " + std::to_string(r.cases) + " cases");
  o.check(secs < 60, "took " + std::to_string(secs) + " s");
  if (o.pass) {
    std::ostringstream s;
    s << r.cases << " cases in " << secs << " s";
    o.detail = s.str();
  }
  return o;
}

Outcome bijection() {
  Outcome o;
  int pairs = 0;
  for (long q2 = 2; q2 <= 12; ++q2)
    for (long q1 = 1; q1 < q2; ++q1) {
      if (std::gcd(q1, q2) != 1) continue;
      ++pairs;
      auto r = verify_bijection(q1, q2, 5);
      o.check(ok(r), "(" + std::to_string(q1) + "," + std::to_string(q2) + "): " + first_failures(r, 1));
    }
  if (o.pass) o.detail = std::to_string(pairs) + " coprime pairs";
  return o;
}

Outcome exceptional_pairs() {
  Outcome o;
  auto r = verify_exceptional_pairs(30);
  o.check(ok(r), std::to_string(r.failures.size()) + " counterexamples: " + first_failures(r));
  if (o.pass) o.detail = std::to_string(r.cases) + " normal subgroups scanned";
  return o;
}

Outcome group_catalog() {
  Outcome o;
  using T = IsoType::Tag;
  auto order = [](const AnySubgroup& g) { return std::visit([](const auto& x) { return x.order(); }, g); };
  auto type = [](const AnySubgroup& g) { return std::visit([](const auto& x) { return recognize(x); }, g); };
  o.check(binary_tetrahedral().order() == 24, "T* order");
  o.check(binary_octahedral().order() == 48, "O* order");
  o.check(binary_icosahedral().order() == 120, "I* order");
  for (int m = 2; m <= 30; ++m)
    o.check(dicyclic_group(m).order() == static_cast<std::size_t>(4 * m), "Dic_" + std::to_string(m) + " order");
  o.check(project_so3(binary_tetrahedral()).order() == 12, "T order");
  o.check(project_so3(binary_octahedral()).order() == 24, "O order");
  o.check(project_so3(binary_icosahedral()).order() == 60, "I order");
  int entries = 0;
  auto round_trip = [&](T tag, int param, Ambient amb, IsoType expect) {
    ++entries;
    o.check(type(catalog(tag, param, amb)) == expect, expect.name() + " recognition");
    o.check(order(catalog(tag, param, amb)) == static_cast<std::size_t>(expect.order()), expect.name() + " order");
  };
  round_trip(T::Trivial, 0, Ambient::SU2, IsoType::trivial());
  for (int k = 2; k <= 30; ++k) round_trip(T::Cyclic, k, Ambient::SU2, IsoType::cyclic(k));
  for (int m = 2; m <= 30; ++m) round_trip(T::Dicyclic, m, Ambient::SU2, IsoType::dicyclic(m));
  round_trip(T::BinTet, 0, Ambient::SU2, IsoType::bin_tet());
  round_trip(T::BinOct, 0, Ambient::SU2, IsoType::bin_oct());
  round_trip(T::BinIco, 0, Ambient::SU2, IsoType::bin_ico());
  round_trip(T::Trivial, 0, Ambient::SO3, IsoType::trivial());
  for (int k = 2; k <= 30; ++k) round_trip(T::Cyclic, k, Ambient::SO3, IsoType::cyclic(k));
  for (int m = 3; m <= 30; ++m) round_trip(T::Dihedral, m, Ambient::SO3, IsoType::dihedral(m));
  round_trip(T::KleinFour, 0, Ambient::SO3, IsoType::klein_four());
  round_trip(T::Tet, 0, Ambient::SO3, IsoType::tet());
  round_trip(T::Oct, 0, Ambient::SO3, IsoType::oct());
  round_trip(T::Ico, 0, Ambient::SO3, IsoType::ico());
  if (o.pass) o.detail = std::to_string(entries) + " catalog entries round-trip";
  return o;
}

Outcome table1_finite_rows() {
  Outcome o;
  auto O = binary_octahedral();
  auto Q = quaternion_group();
  auto T = binary_tetrahedral();
  o.check(normalizer_in(O, Q).order() == 48 && quotient_type(O, Q) == IsoType::dihedral(3), "N(Dic_2)/Dic_2");
  o.check(normalizer_in(O, T).order() == 48 && quotient_type(O, T) == IsoType::cyclic(2), "N(T*)/T*");
  for (int m = 3; m <= 10; ++m) {
    auto big = dicyclic_group(2 * m);
    auto small = closure<Pin2Element>({Pin2Element::rotation(Rational(2, 4 * m)), Pin2Element::j()}, 4 * m);
    o.check(recognize(small) == IsoType::dicyclic(m) && is_normal_in(big, small) &&
                quotient_type(big, small) == IsoType::cyclic(2),
            "N(Dic_" + std::to_string(m) + ")/Dic_" + std::to_string(m));
  }
  auto r = verify_table1();
  o.check(ok(r), first_failures(r));
  if (o.pass) o.detail = std::to_string(r.cases) + " checks";
  return o;
}

Outcome noncyclic() {
  Outcome o;
  for (int c1 : {1, 2})
    for (int c2 : {1, 2}) {
      auto a = abelianization(noncyclic_amalgam(c1, c2));
      o.check(a.free_rank == 0 && a.torsion == std::vector<Integer>{3},
              "(" + std::to_string(c1) + "," + std::to_string(c2) + ") gives " + a.to_string());
    }
  o.check(ok(verify_noncyclic_obstruction()), "report");
  if (o.pass) o.detail = "torsion Z_3 for all (c1,c2)";
  return o;
}

Outcome equivalence_counts() {
  Outcome o;
  auto r = verify_equivalence_sweep(8, 10);
  o.check(ok(r), first_failures(r));
  if (o.pass) o.detail = std::to_string(r.cases) + " cases";
  return o;
}

Outcome gauss_bonnet() {
  Outcome o;
  o.check(max_isolated_fixed_points(false) == 3, "nonnegative bound");
  o.check(max_isolated_fixed_points(true) == 2, "positive bound");
  o.check(ok(verify_gauss_bonnet_bound()), "report");
  if (o.pass) o.detail = "3 (nonnegative), 2 (positive)";
  return o;
}

Outcome spot_checks() {
  Outcome o;
  for (long m = 1; m <= 10; ++m) {
    ActionParams even = validate(0, 2 * m, 1), odd = validate(0, 2 * m + 1, 1);
    o.check(isotropy_profile(even).effective_group == Ambient::SO3 && diffeo_type(even).name() == "S3xS2",
            format_params(even));
    o.check(isotropy_profile(odd).effective_group == Ambient::SU2 && diffeo_type(odd).name() == "S3twistS2",
            format_params(odd));
  }
  auto free = isotropy_profile(validate(2, 2, 1));
  o.check(free.effective_group == Ambient::SO3 && free.principal == OrbitType::cyclic(1) && free.others.empty(),
          "N_{2,2}^1 free SO(3)");
  o.check(enumerate_actions(1, 1, 50).size() == 1, "N_{1,1}^l single class");
  int verdicts = 0;
  for (const ClassifiedAction& a : classified_catalog()) {
    ++verdicts;
    CurvatureVerdict v = curvature_verdict(a);
    if (const auto* n = std::get_if<NAction>(&a)) {
      const ActionParams& p = n->params;
      // Positive curvature needs a trivial principal isotropy group; otherwise
      // its fixed set has two 3-dimensional components.
      const bool lens = !(isotropy_profile(p).principal == OrbitType::cyclic(1));
      o.check(v.nonnegative == CurvatureVerdict::Nonnegative::Yes, describe(a) + " nonnegative");
      o.check(lens == (v.positive == CurvatureVerdict::Positive::Excluded &&
                       v.reason == CurvatureVerdict::Reason::FrankelLensPair),
              describe(a) + " positive verdict");
    } else if (const auto* h = std::get_if<HudsonSum>(&a)) {
      o.check(v.positive == CurvatureVerdict::Positive::Excluded && v.reason == CurvatureVerdict::Reason::ThreeFixedPoints,
              describe(a));
      o.check((v.nonnegative == CurvatureVerdict::Nonnegative::Yes) == (h->fixed_points() <= 3), describe(a));
    } else if (std::holds_alternative<LinearS5>(a)) {
      o.check(v.positive == CurvatureVerdict::Positive::LinearSphere, describe(a));
    } else if (std::holds_alternative<WuSU2>(a)) {
      o.check(v.positive == CurvatureVerdict::Positive::Candidate, describe(a));
    } else if (const auto* f = std::get_if<FirstFactorSum>(&a)) {
      o.check((v.nonnegative == CurvatureVerdict::Nonnegative::Yes) == (f->k == 0), describe(a));
    }
  }
  auto wu = curvature_verdict(HudsonSum{1, 0});
  o.check(wu.positive == CurvatureVerdict::Positive::Excluded && wu.reason == CurvatureVerdict::Reason::ThreeFixedPoints,
          "SO(3) on Wu");
  if (o.pass) o.detail = std::to_string(verdicts) + " catalog verdicts";
  return o;
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--known-failing" && i + 1 < argc) {
      known = parse_list(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--known-failing N[,N...]]\n";
      return 64;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"pi1 formula reproduction", pi1_formula},
      {"slice-number bijection", bijection},
      {"exceptional isotropy pairs", exceptional_pairs},
      {"group catalog", group_catalog},
      {"normalizer table, finite rows", table1_finite_rows},
      {"non-cyclic obstruction", noncyclic},
      {"equivalence counts", equivalence_counts},
      {"isolated fixed point bound", gauss_bonnet},
      {"classification spot checks", spot_checks},
  };

  std::set<int> failing;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) failing.insert(id);
    std::cout << (o.pass ? "PASS " : "FAIL ") << id << " " << criteria[i].first;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    if (!o.pass && known.count(id)) std::cout << " [known failure]";
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failing.size()) << "/" << criteria.size() << " criteria pass\n";
  if (failing != known) {
    std::cout << "failing set differs from the known-failing list\n";
    return 1;
  }
  return 0;
}
