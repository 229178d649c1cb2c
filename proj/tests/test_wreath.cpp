#include <gtest/gtest.h>

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "wreathchar/wreath.hpp"

using namespace wreathchar;

namespace {

// (g; pi) as a permutation of G x {0..n-1}: (h, i) -> (g_{pi(i)} h, pi(i))
using Point = std::pair<int, int>;
std::map<Point, Point> as_permutation(const AbelianGroup& g, const ColoredPermutation& x) {
  std::map<Point, Point> m;
  for (int h = 0; h < g.order(); ++h)
    for (int i = 0; i < x.n(); ++i) {
      const int j = x.perm[static_cast<std::size_t>(i)];
      const auto img = g.multiply(x.colors[static_cast<std::size_t>(j)], g.element_at(h));
      m[{h, i}] = {g.index_of(img), j};
    }
  return m;
}

std::map<Point, Point> compose(const std::map<Point, Point>& f, const std::map<Point, Point>& g) {
  std::map<Point, Point> out;
  for (const auto& [p, q] : g) out[p] = f.at(q);
  return out;
}

ColoredPermutation random_element(std::mt19937& rng, const AbelianGroup& g, int n) {
  ColoredPermutation x;
  for (int i = 0; i < n; ++i) x.perm.push_back(i);
  std::shuffle(x.perm.begin(), x.perm.end(), rng);
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  for (int i = 0; i < n; ++i) x.colors.push_back(g.element_at(pick(rng)));
  return x;
}

Integer degree_formula(const RPartitePartition& shape) {
  Integer d = factorial(shape.total());
  for (const auto& c : shape.components()) d = d / factorial(c.size()) * oracle::syt_count(c.parts());
  return d;
}

}  // namespace

TEST(Wreath, MultiplicationMatchesPermutationAction) {
  std::mt19937 rng(11);
  for (const char* spec : {"Z2", "Z3", "Z2xZ2"}) {
    const auto g = AbelianGroup::parse(spec);
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = random_element(rng, g, 4), y = random_element(rng, g, 4);
      EXPECT_EQ(as_permutation(g, multiply(g, x, y)), compose(as_permutation(g, x), as_permutation(g, y)));
      EXPECT_EQ(multiply(g, x, inverse(g, x)), wreath_identity(g, 4));
      EXPECT_EQ(multiply(g, inverse(g, x), x), wreath_identity(g, 4));
    }
  }
}

TEST(Wreath, CycleProducts) {
  const auto g = AbelianGroup::parse("Z6");
  const auto e_colored = constant_colored(g, g.identity(), Composition({3, 2, 1}));
  for (const auto& cp : cycle_products(g, e_colored)) EXPECT_EQ(cp.product, g.identity());

  const auto x = constant_colored(g, {1}, Composition({3, 2, 1}));
  const auto cps = cycle_products(g, x);
  ASSERT_EQ(cps.size(), 3u);
  EXPECT_EQ(cps[0].length, 3);
  EXPECT_EQ(cps[0].product, (GroupElement{3}));
  EXPECT_EQ(cps[1].product, (GroupElement{2}));
  EXPECT_EQ(cps[2].product, (GroupElement{1}));

  ColoredPermutation y;
  y.perm = {1, 0};
  y.colors = {{2}, {3}};
  const auto two = cycle_products(g, y);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].length, 2);
  EXPECT_EQ(two[0].product, g.multiply({3}, {2}));
}

TEST(Wreath, TypeExamples) {
  const auto g = AbelianGroup::parse("Z3");
  const auto t = ty(g, wreath_identity(g, 4));
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t.at(g.identity()), Partition({1, 1, 1, 1}));

  const auto u = ty(g, constant_colored(g, {1}, Composition({6})));
  ASSERT_EQ(u.size(), 1u);
  EXPECT_EQ(u.at(g.identity()), Partition({6}));
}

TEST(Wreath, TypeIsConjugationInvariant) {
  std::mt19937 rng(5);
  for (const char* spec : {"Z2", "Z3", "Z2xZ2", "Z4"}) {
    const auto g = AbelianGroup::parse(spec);
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = random_element(rng, g, 5), y = random_element(rng, g, 5);
      EXPECT_EQ(ty(g, x), ty(g, conjugate_by(g, x, y)));
    }
  }
}

TEST(Psi, SmallExamples) {
  const AbelianModel z2(AbelianGroup({2}));
  const RPartitePartition sign_shape{Partition{}, Partition{1}};
  ColoredPermutation a;
  a.perm = {0};
  a.colors = {{1}};
  EXPECT_EQ(psi(sign_shape, z2, a), CyclotomicInt::from_int(2, -1));

  const RPartitePartition both{Partition{1}, Partition{1}};
  EXPECT_TRUE(psi(both, z2, constant_colored(z2.group(), {0}, Composition({2}))).is_zero());
  EXPECT_EQ(count_bst(both, Composition({2})), 0u);

  EXPECT_THROW(psi(both, z2, wreath_identity(z2.group(), 3)), InvalidInput);
  EXPECT_THROW(psi(RPartitePartition{Partition{2}}, z2, wreath_identity(z2.group(), 2)), InvalidInput);
}

TEST(Psi, IdentityGivesDegree) {
  for (const char* spec : {"Z2", "Z3", "Z2xZ2"}) {
    const AbelianModel m(AbelianGroup::parse(spec));
    for (int n = 1; n <= 5; ++n)
      for (const auto& shape : enumerate_rpartite(n, m.character_count())) {
        const auto v = psi(shape, m, wreath_identity(m.group(), n));
        EXPECT_EQ(v.as_integer(), degree_formula(shape)) << shape;
        EXPECT_EQ(wreath_degree(shape), degree_formula(shape));
      }
  }
}

TEST(Psi, ClassFunction) {
  std::mt19937 rng(3);
  for (const char* spec : {"Z2", "Z3", "Z2xZ2"}) {
    const AbelianModel m(AbelianGroup::parse(spec));
    for (int n = 1; n <= 4; ++n) {
      const auto shapes = enumerate_rpartite(n, m.character_count());
      for (int trial = 0; trial < 15; ++trial) {
        const auto x = random_element(rng, m.group(), n), y = random_element(rng, m.group(), n);
        const auto z = conjugate_by(m.group(), x, y);
        for (const auto& shape : shapes) EXPECT_EQ(psi(shape, m, x), psi(shape, m, z));
      }
    }
  }
}

TEST(Psi, ConstantColorShortcutMatchesFullSum) {
  for (const char* spec : {"Z2", "Z3", "Z4", "Z6", "Z2xZ2"}) {
    const AbelianModel m(AbelianGroup::parse(spec));
    for (int n = 1; n <= 3; ++n)
      for (const auto& shape : enumerate_rpartite(n, m.character_count()))
        for (const auto& mu : enumerate_partitions(n))
          for (const auto& a : m.group().elements())
            EXPECT_EQ(psi_constant_color(shape, m, a, mu), psi(shape, m, constant_colored(m.group(), a, mu)));
  }
}

TEST(Psi, NontrivialColorInZ2FlipsBySecondComponentSize) {
  const AbelianModel z2(AbelianGroup({2}));
  for (int n = 1; n <= 4; ++n)
    for (const auto& shape : enumerate_rpartite(n, 2))
      for (const auto& mu : enumerate_partitions(n)) {
        const auto e = psi(shape, z2, constant_colored(z2.group(), {0}, mu));
        const auto a = psi(shape, z2, constant_colored(z2.group(), {1}, mu));
        EXPECT_EQ(a, shape[1].size() % 2 == 0 ? e : -e);
      }
}

TEST(Psi, FirstOrthogonalityOverZ2) {
  const AbelianModel z2(AbelianGroup({2}));
  for (int n = 1; n <= 3; ++n) {
    const auto elems = all_elements(z2.group(), n);
    const auto shapes = enumerate_rpartite(n, 2);
    std::vector<std::vector<CyclotomicInt>> values;
    for (const auto& s : shapes) {
      std::vector<CyclotomicInt> row;
      for (const auto& x : elems) row.push_back(psi(s, z2, x));
      values.push_back(std::move(row));
    }
    const Integer order = Integer(static_cast<long long>(elems.size()));
    for (std::size_t i = 0; i < shapes.size(); ++i)
      for (std::size_t j = 0; j < shapes.size(); ++j) {
        CyclotomicInt s(2);
        for (std::size_t k = 0; k < elems.size(); ++k) s += values[i][k] * values[j][k].conj();
        EXPECT_EQ(s, CyclotomicInt::from_int(2, i == j ? order : Integer(0)));
      }
  }
}

TEST(Psi, QuotientModelRejectsNonlinearSupport) {
  const auto s3 = QuotientLinearModel::s3();
  const auto shape = parse_rpartite("[∅|∅|1|∅|∅|∅]");
  EXPECT_THROW(psi(shape, s3, constant_colored(s3.group(), {0}, Composition({1}))), UnsupportedEvaluation);
}

TEST(Psi, TableauProductIsConstantForConstantColors) {
  for (const char* spec : {"Z2", "Z3", "Z2xZ2"}) {
    const AbelianModel m(AbelianGroup::parse(spec));
    for (int n = 1; n <= 3; ++n)
      for (const auto& shape : enumerate_rpartite(n, m.character_count()))
        for (const auto& mu : enumerate_partitions(n))
          for (const auto& a : m.group().elements())
            EXPECT_LE(tableau_product_exponents(shape, m, constant_colored(m.group(), a, mu)).size(), 1u);
  }
}
