#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "eq5/fpgroups.hpp"
#include "eq5/verifiers.hpp"

using eq5::Integer;
using eq5::IntMatrix;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m;
  for (auto r : rows) {
    m.emplace_back();
    for (long x : r) m.back().emplace_back(x);
  }
  return m;
}

std::vector<long> factors(const std::vector<Integer>& v) {
  std::vector<long> out;
  for (const Integer& x : v) out.push_back(x.get_si());
  return out;
}

std::size_t order_of(const std::string& text) {
  auto r = eq5::todd_coxeter(eq5::parse_presentation(text));
  EXPECT_TRUE(r.completed()) << text;
  return r.order;
}

}  // namespace

TEST(Parse, Shapes) {
  auto p = eq5::parse_presentation("<a | a^5>");
  EXPECT_EQ(p.generators.size(), 1u);
  ASSERT_EQ(p.relators.size(), 1u);
  EXPECT_EQ(p.relators[0].length(), 5);

  auto q = eq5::parse_presentation("<e1,e2 | e1^4, e2^6, e1^2 = e2^3, e1 = e2^-1>");
  EXPECT_EQ(q.generators.size(), 2u);
  EXPECT_EQ(q.relators.size(), 4u);

  auto r = eq5::parse_presentation("<a | a a^-1>");
  EXPECT_TRUE(r.relators.empty());
}

TEST(Parse, GroupingAndIdentity) {
  auto p = eq5::parse_presentation("<a, b | (a b)^3, a^2 = 1, b*b*b>");
  ASSERT_EQ(p.relators.size(), 3u);
  EXPECT_EQ(eq5::format_word(p.relators[0], p.generators), "a b a b a b");
  EXPECT_EQ(eq5::format_word(p.relators[2], p.generators), "b^3");
  EXPECT_EQ(eq5::format_presentation(p), "<a, b | a b a b a b, a^2, b^3>");
}

TEST(Parse, Errors) {
  try {
    (void)eq5::parse_presentation("<a | b^2>");
    FAIL();
  } catch (const eq5::Error& e) {
    EXPECT_EQ(e.code(), eq5::Errc::UnknownGenerator);
  }
  try {
    (void)eq5::parse_presentation("<a | a^>");
    FAIL();
  } catch (const eq5::SyntaxError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
  EXPECT_THROW((void)eq5::parse_presentation("<a, a | a>"), eq5::SyntaxError);
  EXPECT_THROW((void)eq5::parse_presentation("a | a"), eq5::SyntaxError);
  EXPECT_THROW((void)eq5::parse_presentation("<a | (a>"), eq5::SyntaxError);
}

TEST(Words, FreeReduction) {
  eq5::Word w({{0, 2}, {1, 1}, {1, -1}, {0, -2}});
  EXPECT_TRUE(w.empty());
  eq5::Word x({{0, 1}, {1, 3}});
  EXPECT_TRUE((x * x.inverse()).empty());
  EXPECT_EQ(x.pow(2).length(), 8);
  EXPECT_EQ(x.pow(-1), x.inverse());
}

TEST(ToddCoxeter, CyclicAndTrivial) {
  EXPECT_EQ(order_of("<a | a^5>"), 5u);
  EXPECT_EQ(order_of("<e1,e2 | e1^4, e2^6, e1^2 = e2^3, e1 = e2^-1>"), 1u);
  EXPECT_EQ(order_of("<a, b | a, b>"), 1u);
}

TEST(ToddCoxeter, PolyhedralTriangleGroups) {
  // (2,3,n) triangle groups: orders 6, 12, 24, 60.
  EXPECT_EQ(order_of("<a, b | a^2, b^3, (a b)^2>"), 6u);
  EXPECT_EQ(order_of("<a, b | a^2, b^3, (a b)^3>"), 12u);
  EXPECT_EQ(order_of("<a, b | a^2, b^3, (a b)^4>"), 24u);
  EXPECT_EQ(order_of("<a, b | a^2, b^3, (a b)^5>"), 60u);
  // Binary versions: <a, b, c | a^2 = b^3 = c^n = a b c>.
  EXPECT_EQ(order_of("<a, b, c | a^2 = b^3, b^3 = c^3, c^3 = a b c>"), 24u);
  EXPECT_EQ(order_of("<a, b, c | a^2 = b^3, b^3 = c^5, c^5 = a b c>"), 120u);
}

TEST(ToddCoxeter, BinaryTetrahedralPresentation) {
  auto r = eq5::todd_coxeter(eq5::binary_tetrahedral_presentation());
  ASSERT_TRUE(r.completed());
  EXPECT_EQ(r.order, 24u);
  EXPECT_TRUE(eq5::coset_table_consistent(eq5::binary_tetrahedral_presentation(), r));
}

TEST(ToddCoxeter, InfiniteGroupExceeds) {
  auto r = eq5::todd_coxeter(eq5::parse_presentation("<a, b | a b a^-1 b^-1>"), 2000);
  EXPECT_FALSE(r.completed());
  EXPECT_EQ(eq5::to_json(r)["status"], "Exceeded");
  EXPECT_THROW((void)eq5::todd_coxeter(eq5::parse_presentation("<a | a^2>"), 0), eq5::Error);
}

TEST(ToddCoxeter, GluingPresentations) {
  EXPECT_EQ(eq5::todd_coxeter(eq5::pi1_presentation(4, 6, 1, 1, 0)).order, 1u);
  auto r = eq5::todd_coxeter(eq5::pi1_presentation(3, 3, 0, 0, 3));
  EXPECT_EQ(r.order, 3u);
  EXPECT_EQ(eq5::abelianization(eq5::pi1_presentation(3, 3, 0, 0, 3)).to_string(), "Z_3");
}

TEST(Smith, Examples) {
  EXPECT_EQ(factors(eq5::smith_normal_form(mat({{3, 0}, {0, 6}}))), (std::vector<long>{3, 6}));
  EXPECT_EQ(factors(eq5::smith_normal_form(mat({{2, 4}, {6, 8}}))), (std::vector<long>{2, 4}));
  EXPECT_TRUE(eq5::smith_normal_form(mat({{0, 0}, {0, 0}})).empty());
  EXPECT_EQ(factors(eq5::smith_normal_form(mat({{2, 0}, {0, 3}}))), (std::vector<long>{1, 6}));
}

TEST(Abelianization, Examples) {
  auto a = eq5::abelianization(eq5::parse_presentation("<a, b | a^3, b^3, a b a^-1 b^-1>"));
  EXPECT_EQ(a.to_string(), "Z_3 x Z_3");
  EXPECT_EQ(a.free_rank, 0u);
  EXPECT_TRUE(eq5::abelianization(eq5::pi1_presentation(4, 6, 1, 1, 0)).trivial());
  EXPECT_EQ(eq5::abelianization(eq5::parse_presentation("<a, b | >")).to_string(), "Z^2");
  EXPECT_EQ(eq5::abelianization(eq5::parse_presentation("<a, b | a^4 b^6>")).to_string(), "Z_2 x Z");
}

TEST(FpProperty, SmithAgainstMinors) {
  // For a 2x2 integer matrix: d1 = gcd of entries, d1 d2 = |det|.
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> e(-30, 30);
  for (int t = 0; t < 500; ++t) {
    long a = e(rng), b = e(rng), c = e(rng), d = e(rng);
    long g = std::gcd(std::gcd(a, b), std::gcd(c, d));
    long det = std::labs(a * d - b * c);
    auto f = factors(eq5::smith_normal_form(mat({{a, b}, {c, d}})));
    if (g == 0) {
      EXPECT_TRUE(f.empty());
    } else if (det == 0) {
      EXPECT_EQ(f, (std::vector<long>{g}));
    } else {
      EXPECT_EQ(f, (std::vector<long>{g, det / g}));
    }
  }
}

TEST(FpProperty, SmithDivisibilityChain) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> e(-12, 12);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int t = 0; t < 200; ++t) {
    IntMatrix m(dim(rng), std::vector<Integer>(dim(rng)));
    for (auto& row : m)
      for (auto& x : row) x = e(rng);
    auto f = eq5::smith_normal_form(m);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) EXPECT_EQ(f[i + 1] % f[i], 0);
    for (const Integer& x : f) EXPECT_GT(x, 0);
  }
}

TEST(FpProperty, CyclicOrders) {
  for (int n = 1; n <= 100; ++n) EXPECT_EQ(order_of("<a | a^" + std::to_string(n) + ">"), static_cast<std::size_t>(n));
}

TEST(FpProperty, DihedralOrdersAndConsistency) {
  for (int n = 2; n <= 30; ++n) {
    auto p = eq5::parse_presentation("<r, s | r^" + std::to_string(n) + ", s^2, (s r)^2>");
    auto c = eq5::todd_coxeter(p);
    ASSERT_TRUE(c.completed());
    EXPECT_EQ(c.order, static_cast<std::size_t>(2 * n));
    EXPECT_TRUE(eq5::coset_table_consistent(p, c));
  }
}

TEST(FpProperty, OrderIgnoresRelatorRotationAndInversion) {
  const std::vector<std::string> groups{"<a, b, c | a^2 = b^3, b^3 = c^3, c^3 = a b c>",
                                        "<a, b, c | a^2 = b^3, b^3 = c^4, c^4 = a b c>",
                                        "<a, b | a^2, b^3, (a b)^5>", "<r, s | r^7, s^2, (s r)^2>"};
  const std::vector<std::size_t> orders{24, 48, 60, 14};
  for (std::size_t g = 0; g < groups.size(); ++g) {
    eq5::Presentation p = eq5::parse_presentation(groups[g]);
    for (std::size_t shift = 0; shift < 4; ++shift) {
      eq5::Presentation q;
      q.generators = p.generators;
      for (std::size_t r = 0; r < p.relators.size(); ++r) {
        // Expand to single letters, rotate, and invert every other relator.
        std::vector<eq5::Letter> flat;
        for (const eq5::Letter& l : p.relators[r].letters())
          for (long i = 0; i < std::labs(l.exp); ++i) flat.push_back({l.gen, l.exp > 0 ? 1 : -1});
        std::rotate(flat.begin(), flat.begin() + static_cast<long>((shift + r) % flat.size()), flat.end());
        eq5::Word w(flat);
        q.add_relator((shift + r) % 2 ? w.inverse() : w);
      }
      auto c = eq5::todd_coxeter(q);
      ASSERT_TRUE(c.completed()) << groups[g];
      EXPECT_EQ(c.order, orders[g]) << eq5::format_presentation(q);
      EXPECT_TRUE(eq5::coset_table_consistent(q, c));
    }
  }
}
