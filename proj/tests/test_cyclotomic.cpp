#include "hvol/hvol.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hvol;

namespace {

IntPoly poly(std::initializer_list<long long> c) {
  IntPoly p;
  for (long long x : c) p.emplace_back(x);
  return p;
}

CycNum random_element(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Rat> c(n);
  for (auto& x : c) x = Rat(d(rng)) / Rat(1 + (d(rng) + 5) % 4);
  return CycNum::from_powers(n, c);
}

}  // namespace

TEST(Numeric, RationalFormatting) {
  EXPECT_EQ(format_rational(Rat(3)), "3/1");
  EXPECT_EQ(format_rational(Rat(-2, 4)), "-1/2");
  EXPECT_EQ(format_rational(Rat(0)), "0/1");
  EXPECT_EQ(format_rational(mod_one(Rat(-1, 5))), "4/5");
  EXPECT_EQ(mod_one(Rat(7, 3)), Rat(1, 3));
  EXPECT_EQ(mod_one(Rat(-3)), Rat(0));
  EXPECT_EQ(floor_of(Rat(-1, 2)), Int(-1));
  EXPECT_EQ(pmod(-7, 5), 3);
}

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_poly(1), poly({-1, 1}));
  EXPECT_EQ(cyclotomic_poly(6), poly({1, -1, 1}));
  EXPECT_EQ(cyclotomic_poly(5), poly({1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic_poly(12), poly({1, 0, -1, 0, 1}));
  EXPECT_THROW(cyclotomic_poly(0), DomainError);
}

TEST(Cyclotomic, DegreeIsTotient) {
  const int phi[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12, 6, 8};
  for (int n = 1; n <= 15; ++n) EXPECT_EQ(static_cast<int>(cyclotomic_poly(n).size()) - 1, phi[n]) << n;
}

TEST(Cyclotomic, ZetaPowers) {
  EXPECT_EQ(zeta_pow(4, 2), CycNum::rational(4, -1));
  EXPECT_EQ(zeta_pow(6, 0), CycNum::rational(6, 1));
  const std::vector<Rat> expect = {-1, -1, -1, -1};
  EXPECT_EQ(zeta_pow(5, 4).coeffs(), expect);
  EXPECT_EQ(zeta_pow(7, -1), zeta_pow(7, 6));
  EXPECT_EQ(zeta_pow(9, 9), CycNum::rational(9, 1));
}

TEST(Cyclotomic, InverseOfOnePlusZeta) {
  const CycNum x = CycNum::rational(6, 1) + zeta_pow(6, -1);
  EXPECT_EQ(x * x.inv(), CycNum::rational(6, 1));
}

TEST(Cyclotomic, GeometricSums) {
  for (int u : {6, 2, 0, 4, 13}) {
    CycNum s(6);
    for (int i = 1; i <= 5; ++i) s += zeta_pow(6, static_cast<long long>(i) * u);
    ASSERT_TRUE(s.is_rational());
    EXPECT_EQ(s.to_rational(), Rat(u % 6 == 0 ? 5 : -1)) << u;
  }
}

TEST(Cyclotomic, PoincareDualIdentity) {
  const int n = 6, i = 1;
  const CycNum lhs = (zeta_pow(n, (n - 1) * i) - zeta_pow(n, i)) * (CycNum::rational(n, 1) + zeta_pow(n, -i)).inv();
  EXPECT_EQ(lhs, CycNum::rational(n, 1) - zeta_pow(n, i));
}

TEST(Cyclotomic, Errors) {
  EXPECT_THROW(CycNum(5).inv(), DivisionByZero);
  EXPECT_THROW(zeta_pow(5, 1) + zeta_pow(6, 1), IncompatibleOrder);
  EXPECT_THROW(zeta_pow(5, 1).to_rational(), DomainError);
  EXPECT_THROW(zeta_pow(6, 1).galois(2), DomainError);
}

TEST(Cyclotomic, GaloisConjugation) {
  for (int n = 3; n <= 12; ++n)
    for (int e = 0; e < n; ++e) EXPECT_EQ(zeta_pow(n, e).galois(-1), zeta_pow(n, -e));
}

TEST(Cyclotomic, FieldAxiomsRandom) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const CycNum a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a - a, CycNum(n));
    if (!a.is_zero()) ASSERT_EQ(a * a.inv(), CycNum::rational(n, 1));
    ASSERT_EQ(a.pow(3), a * a * a);
    ASSERT_EQ((a * b).galois(-1), a.galois(-1) * b.galois(-1));
  }
}
