#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "wreathchar/cyclotomic.hpp"

using namespace wreathchar;

namespace {

CyclotomicInt random_element(std::mt19937& rng, int level) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> terms(0, 4);
  CyclotomicInt x(level);
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    std::uniform_int_distribution<int> k(0, level - 1);
    x += CyclotomicInt::zeta(level, k(rng)) * Integer(coef(rng));
  }
  return x;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST(Cyclotomic, CyclotomicPolynomials) {
  EXPECT_EQ(*detail::cyclotomic_polynomial(1), (std::vector<Integer>{-1, 1}));
  EXPECT_EQ(*detail::cyclotomic_polynomial(4), (std::vector<Integer>{1, 0, 1}));
  EXPECT_EQ(*detail::cyclotomic_polynomial(6), (std::vector<Integer>{1, -1, 1}));
  EXPECT_EQ(*detail::cyclotomic_polynomial(12), (std::vector<Integer>{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, SumOfRootsVanishes) {
  for (int L = 2; L <= 12; ++L) {
    CyclotomicInt s(L);
    for (int k = 0; k < L; ++k) s += CyclotomicInt::zeta(L, k);
    EXPECT_TRUE(s.is_zero()) << "L=" << L;
  }
}

TEST(Cyclotomic, SmallIdentities) {
  EXPECT_EQ(CyclotomicInt::zeta(2, 1), CyclotomicInt::from_int(2, -1));
  const auto z = CyclotomicInt::zeta(6, 2);
  EXPECT_EQ(z * z * z, CyclotomicInt::from_int(6, 1));
  EXPECT_EQ(CyclotomicInt::from_int(5, 7).as_integer(), Integer(7));
  EXPECT_FALSE(CyclotomicInt::zeta(3, 1).as_integer().has_value());
  EXPECT_TRUE((CyclotomicInt::zeta(4, 1) + CyclotomicInt::zeta(4, 3)).is_zero());
  EXPECT_EQ(CyclotomicInt::zeta(6, -1), CyclotomicInt::zeta(6, 5));
}

TEST(Cyclotomic, ZetaPowersMultiply) {
  for (int L = 1; L <= 12; ++L)
    for (int a = 0; a < L; ++a)
      for (int b = 0; b < L; ++b)
        EXPECT_EQ(CyclotomicInt::zeta(L, a) * CyclotomicInt::zeta(L, b), CyclotomicInt::zeta(L, a + b));
}

TEST(Cyclotomic, MixedLevelsPromote) {
  // zeta_2 = -1 and zeta_3 live in Q(zeta_6)
  const auto sum = CyclotomicInt::zeta(2, 1) + CyclotomicInt::zeta(3, 1);
  EXPECT_EQ(sum.level(), 6);
  EXPECT_EQ(sum, CyclotomicInt::from_int(6, -1) + CyclotomicInt::zeta(6, 2));
  EXPECT_EQ(CyclotomicInt::zeta(4, 1).promoted(12), CyclotomicInt::zeta(12, 3));
  EXPECT_EQ(CyclotomicInt::zeta(3, 1), CyclotomicInt::zeta(6, 2));
}

TEST(Cyclotomic, RingAxiomsAgainstComplexEmbedding) {
  std::mt19937 rng(7);
  for (int L : {1, 2, 3, 4, 5, 6, 8, 9, 10, 12}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_element(rng, L), b = random_element(rng, L), c = random_element(rng, L);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a + b) * c, a * c + b * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_TRUE((a - a).is_zero());
      EXPECT_TRUE(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
      EXPECT_TRUE(close((a + b).to_complex(), a.to_complex() + b.to_complex()));
      EXPECT_TRUE(close(a.conj().to_complex(), std::conj(a.to_complex())));
      // the embedding is injective on reduced forms
      EXPECT_EQ(a.is_zero(), std::abs(a.to_complex()) < 1e-9 && a == CyclotomicInt(L));
    }
  }
}

TEST(Cyclotomic, ConjugateOfRootIsInverse) {
  for (int L = 1; L <= 12; ++L)
    for (int k = 0; k < L; ++k) EXPECT_EQ(CyclotomicInt::zeta(L, k).conj(), CyclotomicInt::zeta(L, L - k));
}

TEST(Cyclotomic, ToString) {
  EXPECT_EQ(to_string(CyclotomicInt(6)), "0");
  EXPECT_EQ(to_string(CyclotomicInt::from_int(6, -3)), "-3");
}
