#include <gtest/gtest.h>

#include "eq5/actions.hpp"

using namespace eq5;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::BadParam;
}

std::vector<std::string> names_of(const std::vector<OrbitType>& v) { return names(v); }

}  // namespace

TEST(Params, Validation) {
  EXPECT_EQ(validate(1, 1, 0), (ActionParams{1, 1, 0}));
  EXPECT_EQ(validate(0, 2, 1), (ActionParams{0, 2, 1}));
  EXPECT_EQ(validate(6, -4, -5), (ActionParams{4, 6, 5}));
  EXPECT_EQ(code_of([] { validate(2, 4, 2); }), Errc::InvalidParams);
  EXPECT_EQ(code_of([] { validate(0, 3, 2); }), Errc::InvalidParams);
  EXPECT_EQ(format_params({4, 6, 5}), "N_{4,6}^5");
}

TEST(Isotropy, MixedCase) {
  auto p = isotropy_profile(validate(4, 6, 5));
  EXPECT_EQ(p.su2_principal.name(), "Z_2");
  EXPECT_EQ(names_of(p.su2_others), (std::vector<std::string>{"Z_4", "Z_6"}));
  EXPECT_EQ(p.effective_group, Ambient::SO3);
  EXPECT_EQ(p.principal.name(), "1");
  EXPECT_EQ(names_of(p.others), (std::vector<std::string>{"Z_2", "Z_3"}));
  EXPECT_EQ(p.quotient_space, QuotientSpace::Sphere2);
}

TEST(Isotropy, SingularCases) {
  auto a = isotropy_profile(validate(0, 0, 1));
  EXPECT_EQ(a.principal.name(), "SO(2)");
  EXPECT_TRUE(a.others.empty());
  EXPECT_EQ(a.effective_group, Ambient::SO3);
  EXPECT_EQ(a.quotient_space, QuotientSpace::Sphere3);

  auto b = isotropy_profile(validate(0, 3, 1));
  EXPECT_EQ(b.principal.name(), "Z_3");
  EXPECT_EQ(names_of(b.others), (std::vector<std::string>{"SO(2)"}));
  EXPECT_EQ(b.effective_group, Ambient::SU2);
  EXPECT_EQ(b.quotient_space, QuotientSpace::Disk2);
}

TEST(Isotropy, FreeActions) {
  auto su2 = isotropy_profile(validate(1, 1, 0));
  EXPECT_EQ(su2.effective_group, Ambient::SU2);
  EXPECT_EQ(su2.principal.name(), "1");
  EXPECT_TRUE(su2.others.empty());
  auto so3 = isotropy_profile(validate(2, 2, 1));
  EXPECT_EQ(so3.effective_group, Ambient::SO3);
  EXPECT_EQ(so3.principal.name(), "1");
  EXPECT_TRUE(so3.others.empty());
}

TEST(Diffeo, Parity) {
  EXPECT_EQ(diffeo_type(validate(1, 1, 1)).name(), "S3xS2");
  EXPECT_EQ(diffeo_type(validate(0, 1, 1)).name(), "S3twistS2");
  EXPECT_EQ(diffeo_type(validate(0, 2, 1)).name(), "S3xS2");
  EXPECT_EQ(ManifoldId::conn_sum(1, 0).name(), "Wu");
  EXPECT_EQ(ManifoldId::conn_sum(0, 1).name(), "Brieskorn2333");
  EXPECT_EQ(ManifoldId::conn_sum(2, 1).name(), "ConnSum(2,1)");
}

TEST(Slice, Examples) {
  EXPECT_EQ(slice_data(validate(4, 6, 5)), (SliceData{2, 2, 3, 1, 1, 1, 1, 0}));
  EXPECT_EQ(slice_data(validate(3, 3, 7)), (SliceData{3, 1, 1, 0, 0, 0, 0, 7}));
  EXPECT_EQ(slice_data(validate(2, 3, 1)), (SliceData{1, 2, 3, 1, 2, 1, 2, -1}));
  EXPECT_EQ(code_of([] { slice_data(validate(0, 3, 1)); }), Errc::NoExceptionalOrbits);
}

TEST(Slice, Pi1Formula) {
  EXPECT_EQ(pi1_order(4, 6, 1, 1, 0), 1);
  EXPECT_EQ(pi1_order(3, 3, 0, 0, 3), 3);
  EXPECT_EQ(pi1_order(6, 10, 1, 2, 1), 2);
  EXPECT_EQ(code_of([] { pi1_order(4, 6, 0, 1, 0); }), Errc::BadParams);
  EXPECT_EQ(code_of([] { pi1_order(0, 6, 0, 0, 0); }), Errc::BadParams);
}

TEST(Equivalence, Rules) {
  auto v = equivalence(validate(1, 1, 3), validate(1, 1, 7));
  EXPECT_TRUE(v.equivalent);
  EXPECT_EQ(v.rule, "d=1 congruence mod mn");
  EXPECT_FALSE(are_equivalent(validate(3, 3, 1), validate(3, 3, 2)));
  EXPECT_EQ(equivalence(validate(3, 3, 1), validate(3, 3, 2)).rule, "d>=3 rigidity: l = l'");
  EXPECT_TRUE(are_equivalent(validate(1, 2, 1), validate(1, 2, 3)));
  EXPECT_EQ(equivalence(validate(2, 6, 1), validate(2, 6, 5)).rule, "d=2 congruence mod mn/2");
  EXPECT_TRUE(are_equivalent(validate(2, 6, 1), validate(2, 6, 5)));
  EXPECT_FALSE(are_equivalent(validate(1, 2, 1), validate(1, 3, 1)));
  EXPECT_TRUE(are_equivalent(validate(0, 4, 1), validate(0, 4, 1)));
}

TEST(Equivalence, CanonicalForms) {
  EXPECT_EQ(canonical_form(validate(1, 1, 7)).l, 0);
  EXPECT_EQ(canonical_form(validate(3, 3, 2)).l, 2);
  EXPECT_EQ(canonical_form(validate(2, 2, 5)).l, 1);
}

TEST(Equivalence, Enumeration) {
  EXPECT_EQ(enumerate_actions(1, 1, 10).size(), 1u);
  std::vector<long> ls;
  for (const auto& p : enumerate_actions(3, 3, 10)) ls.push_back(p.l);
  EXPECT_EQ(ls, (std::vector<long>{1, 2, 4, 5, 7, 8, 10}));
  EXPECT_EQ(enumerate_actions(2, 3, 12).size(), 1u);
  EXPECT_EQ(enumerate_actions(0, 5, 12).size(), 1u);
}

TEST(FixedSets, Examples) {
  auto f = fixed_set_principal(validate(3, 3, 4));
  EXPECT_EQ(f.kind, FixedSet::Kind::TwoLensSpaces);
  EXPECT_EQ(f.l, 4);
  EXPECT_EQ(f.n1, 3);
  EXPECT_EQ(f.n2, 3);
  EXPECT_EQ(f.pi1_order, 4);
  EXPECT_EQ(fixed_set_principal(validate(0, 0, 1)).kind, FixedSet::Kind::TwoSpheres3);
  EXPECT_EQ(fixed_set_principal(validate(0, 5, 1)).kind, FixedSet::Kind::TwoSpheres3);
  EXPECT_EQ(fixed_set_principal(validate(1, 2, 1)).kind, FixedSet::Kind::WholeManifoldOrNone);
  EXPECT_EQ(fixed_set_principal(validate(0, 2, 1)).kind, FixedSet::Kind::WholeManifoldOrNone);
}

TEST(Curvature, Verdicts) {
  auto lens = curvature_verdict(NAction{validate(3, 3, 1)});
  EXPECT_EQ(lens.positive, CurvatureVerdict::Positive::Excluded);
  EXPECT_EQ(lens.reason, CurvatureVerdict::Reason::FrankelLensPair);

  auto wu = curvature_verdict(HudsonSum{1, 0});
  EXPECT_EQ(wu.nonnegative, CurvatureVerdict::Nonnegative::Yes);
  EXPECT_EQ(wu.positive, CurvatureVerdict::Positive::Excluded);
  EXPECT_EQ(wu.reason, CurvatureVerdict::Reason::ThreeFixedPoints);

  auto ok = curvature_verdict(NAction{validate(1, 2, 1)});
  EXPECT_EQ(ok.nonnegative, CurvatureVerdict::Nonnegative::Yes);
  EXPECT_EQ(ok.positive, CurvatureVerdict::Positive::Candidate);

  EXPECT_EQ(curvature_verdict(HudsonSum{2, 0}).nonnegative, CurvatureVerdict::Nonnegative::No);
  EXPECT_EQ(curvature_verdict(LinearS5{LinearS5::Kind::SO3Irreducible}).positive,
            CurvatureVerdict::Positive::LinearSphere);
  EXPECT_EQ(curvature_verdict(FirstFactorSum{1}).nonnegative, CurvatureVerdict::Nonnegative::No);
}

TEST(Curvature, GaussBonnetBound) {
  EXPECT_EQ(max_isolated_fixed_points(false), 3);
  EXPECT_EQ(max_isolated_fixed_points(true), 2);
}

TEST(Tables, OneOrbitTypeCounts) {
  EXPECT_EQ(count_uot_actions(Ambient::SO3, OrbitType::cyclic(1), 2), Cardinality::of(2));
  EXPECT_EQ(count_uot_actions(Ambient::SU2, OrbitType::cyclic(5), 2), Cardinality::infinite());
  EXPECT_EQ(count_uot_actions(Ambient::SO3, OrbitType::o2(), 3), Cardinality::of(1));
  EXPECT_EQ(code_of([] { count_uot_actions(Ambient::SU2, OrbitType::of(IsoType::tet()), 2); }), Errc::UnknownRow);
  EXPECT_EQ(code_of([] { count_uot_actions(Ambient::SO3, OrbitType::cyclic(1), 3); }), Errc::UnknownRow);
  EXPECT_EQ(table1().size(), 20u);
  EXPECT_EQ(table2().size(), 10u);
}

TEST(Tables, SingularChains) {
  auto zm = singular_classification(Ambient::SO3, OrbitType::cyclic(3), OrbitType::circle());
  ASSERT_EQ(zm.actions.size(), 1u);
  EXPECT_EQ(describe(zm.actions[0]), "N_{0,6}^1");

  auto su2 = singular_classification(Ambient::SU2, OrbitType::cyclic(1), OrbitType::circle());
  ASSERT_EQ(su2.actions.size(), 2u);
  EXPECT_EQ(describe(su2.actions[0]), "N_{0,1}^1");
  EXPECT_TRUE(std::holds_alternative<WuSU2>(su2.actions[1]));

  EXPECT_EQ(code_of([] {
              singular_classification(Ambient::SU2, OrbitType::of(IsoType::klein_four()), OrbitType::o2());
            }),
            Errc::DisallowedChain);

  auto two = singular_classification(Ambient::SO3, OrbitType::circle(), OrbitType::full(Ambient::SO3), 2);
  ASSERT_EQ(two.actions.size(), 1u);
  EXPECT_EQ(manifold_of(two.actions[0]).name(), "S3xS2");

  auto three = singular_classification(Ambient::SO3, OrbitType::of(IsoType::klein_four()), OrbitType::o2(), 4);
  ASSERT_EQ(three.actions.size(), 2u);
  EXPECT_EQ(manifold_of(three.actions[0]).name(), "ConnSum(2,0)");
  EXPECT_EQ(manifold_of(three.actions[1]).name(), "Brieskorn2333");
}

TEST(OrbitTypes, Parsing) {
  EXPECT_EQ(parse_orbit_type("Z_3"), OrbitType::cyclic(3));
  EXPECT_EQ(parse_orbit_type("Dic_2"), OrbitType::of(IsoType::dicyclic(2)));
  EXPECT_EQ(parse_orbit_type("SO(2)"), OrbitType::circle());
  EXPECT_EQ(parse_orbit_type("T*"), OrbitType::of(IsoType::bin_tet()));
  EXPECT_EQ(parse_orbit_type("D_2"), OrbitType::of(IsoType::klein_four()));
  EXPECT_EQ(parse_orbit_type("Q"), std::nullopt);
}

TEST(ActionProperty, SliceReconstructsL) {
  for (long n = 1; n <= 14; ++n)
    for (long m = 1; m <= n; ++m)
      for (long l = 0; l <= 40; ++l) {
        if (!is_valid(m, n, l)) continue;
        SliceData s = slice_data({m, n, l});
        EXPECT_EQ(reconstruct_l(s), l);
        EXPECT_EQ(s.d * s.q1, m);
        EXPECT_EQ(s.d * s.q2, n);
        if (s.q1 > 1) {
          EXPECT_EQ(mod_floor(s.a1 * s.b1, s.q1), 1);
        }
        if (s.q2 > 1) {
          EXPECT_EQ(mod_floor(s.a2 * s.b2, s.q2), 1);
        }
        EXPECT_EQ(action_pi1_order({m, n, l}), 1);
      }
}

TEST(ActionProperty, EquivalenceIsAnEquivalenceRelation) {
  for (long n = 1; n <= 8; ++n)
    for (long m = 1; m <= n; ++m) {
      std::vector<ActionParams> ps;
      for (long l = 0; l <= 30; ++l)
        if (is_valid(m, n, l)) ps.push_back({m, n, l});
      for (const auto& a : ps) {
        EXPECT_TRUE(are_equivalent(a, a));
        EXPECT_TRUE(are_equivalent(a, canonical_form(a)));
        for (const auto& b : ps) {
          EXPECT_EQ(are_equivalent(a, b), are_equivalent(b, a));
          EXPECT_EQ(are_equivalent(a, b), canonical_form(a) == canonical_form(b));
        }
      }
    }
}

TEST(ActionProperty, EffectiveGroupParity) {
  for (long n = 0; n <= 12; ++n)
    for (long m = 0; m <= n; ++m)
      for (long l = 0; l <= 12; ++l) {
        if (!is_valid(m, n, l)) continue;
        auto p = isotropy_profile({m, n, l});
        EXPECT_EQ(p.effective_group == Ambient::SO3, m % 2 == 0 && n % 2 == 0);
        EXPECT_EQ(diffeo_type({m, n, l}).tag == ManifoldId::Tag::S3xS2, (m + n) % 2 == 0);
      }
}

TEST(ActionProperty, CatalogVerdictsAreTotal) {
  for (const ClassifiedAction& a : classified_catalog()) {
    auto v = curvature_verdict(a);
    if (v.nonnegative == CurvatureVerdict::Nonnegative::No) {
      EXPECT_EQ(v.positive, CurvatureVerdict::Positive::Excluded);
    }
    if (const auto* n = std::get_if<NAction>(&a)) {
      const auto& p = n->params;
      if (p.m > 0 && std::gcd(p.m, p.n) >= 3) {
        EXPECT_EQ(v.reason, CurvatureVerdict::Reason::FrankelLensPair);
      }
    }
  }
}

TEST(Json, ClassifyRecord) {
  auto j = classify_json(validate(4, 6, 5));
  EXPECT_EQ(j["effective_group"], "SO3");
  EXPECT_EQ(j["pi1_order"], 1);
  EXPECT_EQ(j["slice"]["k"], 0);
  EXPECT_EQ(j["curvature"]["positive"], "Candidate");
  EXPECT_TRUE(classify_json(validate(0, 3, 1))["slice"].is_null());
}
