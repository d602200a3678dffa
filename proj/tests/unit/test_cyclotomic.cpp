#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "weiljac/cyclotomic.hpp"
#include "weiljac/errors.hpp"

using namespace weiljac;

namespace {

CycNum random_element(std::mt19937_64& rng, std::uint32_t order) {
  std::uniform_int_distribution<int> c(-5, 5);
  CycNum z(0L);
  for (std::uint32_t j = 0; j < order; ++j) z += CycNum(make_rational(c(rng), 1 + (c(rng) + 5) % 3)) * CycNum::root_of_unity(j, order);
  return z;
}

}  // namespace

TEST(CyclotomicPolynomial, SmallOrders) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& p105 = cyclotomic_polynomial(105);
  EXPECT_EQ(p105.size(), 49u);
  EXPECT_EQ(*std::min_element(p105.begin(), p105.end()), -2);
}

TEST(CyclotomicPolynomial, DegreeIsEulerPhi) {
  for (std::uint32_t n = 1; n <= 60; ++n) EXPECT_EQ(cyclotomic_polynomial(n).size() - 1, euler_phi(n)) << n;
}

TEST(CycNum, RootsOfUnity) {
  EXPECT_EQ(CycNum::root_of_unity(1, 2), CycNum(-1L));
  EXPECT_EQ(CycNum::root_of_unity(1, 1), CycNum(1L));
  EXPECT_EQ(CycNum::root_of_unity(1, 3) + CycNum::root_of_unity(2, 3), CycNum(-1L));
  EXPECT_EQ(CycNum::root_of_unity(1, 4) * CycNum::root_of_unity(1, 4), CycNum(-1L));
  EXPECT_EQ(CycNum::root_of_unity(-3, 6), CycNum(-1L));
}

TEST(CycNum, Inverses) {
  const CycNum z5 = CycNum::root_of_unity(1, 5);
  EXPECT_EQ(z5.inverse() * z5, CycNum(1L));
  const CycNum a = CycNum(1L) + z5;
  EXPECT_EQ(a * a.inverse(), CycNum(1L));
  EXPECT_THROW(CycNum(0L).inverse(), DivisionByZero);
}

TEST(CycNum, RealPart) {
  const CycNum z8 = CycNum::root_of_unity(1, 8);
  const CycNum re = z8.real_part();
  EXPECT_EQ(re, (z8 + CycNum::root_of_unity(7, 8)) * CycNum(make_rational(1, 2)));
  EXPECT_NEAR(re.eval_complex().real(), std::sqrt(2.0) / 2, 1e-12);
  EXPECT_EQ(CycNum(make_rational(3, 7)).real_part(), CycNum(make_rational(3, 7)));
}

TEST(CycNum, Evaluation) {
  EXPECT_NEAR(CycNum(-1L).eval_complex().real(), -1.0, 1e-15);
  const auto i = CycNum::root_of_unity(1, 4).eval_complex();
  EXPECT_NEAR(i.real(), 0.0, 1e-15);
  EXPECT_NEAR(i.imag(), 1.0, 1e-15);
  const auto s3 = CycNum::sqrt3().eval_complex();
  EXPECT_NEAR(s3.real(), std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(s3.imag(), 0.0, 1e-14);
}

TEST(CycNum, FieldAxiomsOnRandomCorpus) {
  std::mt19937_64 rng(7);
  for (std::uint32_t order : {3u, 5u, 8u, 12u, 15u, 24u}) {
    for (int t = 0; t < 10; ++t) {
      const CycNum a = random_element(rng, order), b = random_element(rng, order), c = random_element(rng, order);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a.conjugate().conjugate(), a);
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), CycNum(1L));
      const auto re = a.real_part();
      EXPECT_EQ(re.conjugate(), re);
      EXPECT_LT(std::abs(re.eval_complex().imag()), 1e-12);
    }
  }
}

TEST(CycNum, RootProductRule) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-7, 7), den(1, 9);
  for (int t = 0; t < 50; ++t) {
    const int a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    EXPECT_EQ(CycNum::root_of_unity(a, b) * CycNum::root_of_unity(c, d), CycNum::root_of_unity(a * d + b * c, b * d));
  }
}

TEST(CycNum, PromoteDemoteRoundTrip) {
  std::mt19937_64 rng(3);
  for (std::uint32_t order : {4u, 6u, 9u}) {
    const CycNum a = random_element(rng, order);
    for (std::uint32_t k : {2u, 3u, 5u}) EXPECT_EQ(a.promote(order * k).demote(order), a);
  }
}

TEST(CycNum, ComplexEvaluationMatchesArithmetic) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const CycNum a = random_element(rng, 12), b = random_element(rng, 20);
    const auto lhs = (a * b).eval_complex();
    const auto rhs = a.eval_complex() * b.eval_complex();
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-9 * (1 + std::abs(rhs)));
  }
}
