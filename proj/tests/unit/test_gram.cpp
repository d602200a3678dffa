#include <gtest/gtest.h>

#include <random>

#include "weiljac/checks.hpp"
#include "weiljac/errors.hpp"
#include "weiljac/gram.hpp"

using namespace weiljac;

namespace {

std::vector<HalfIntegralMatrix> random_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim(1, 4), diag(1, 4), off(-3, 3);
  std::vector<HalfIntegralMatrix> out;
  while (out.size() < count) {
    const auto n = static_cast<std::size_t>(dim(rng));
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      a[i][i] = 2 * diag(rng);
      for (std::size_t j = i + 1; j < n; ++j) a[i][j] = a[j][i] = off(rng);
    }
    try {
      HalfIntegralMatrix f(a);
      if (f.det_two_f() <= 200) out.push_back(f);
    } catch (const InvalidInput&) {
    }
  }
  return out;
}

}  // namespace

TEST(HalfIntegralMatrix, Determinants) {
  EXPECT_EQ(HalfIntegralMatrix::parse("2 1; 1 2").det_two_f(), 3);
  EXPECT_EQ(HalfIntegralMatrix::parse("2").det_two_f(), 2);
  EXPECT_EQ(HalfIntegralMatrix::e8().det_two_f(), 1);
}

TEST(HalfIntegralMatrix, Levels) {
  EXPECT_EQ(HalfIntegralMatrix::parse("2 1; 1 2").level(), 3);
  EXPECT_EQ(HalfIntegralMatrix::parse("2").level(), 2);
  EXPECT_EQ(HalfIntegralMatrix::e8().level(), 1);
}

TEST(HalfIntegralMatrix, QuarterInverseQuadratic) {
  const auto f = HalfIntegralMatrix::parse("2 1; 1 2");
  const std::vector<std::int64_t> r{1, 0}, zero{0, 0};
  EXPECT_EQ(f.quarter_inv_quadratic(std::span<const std::int64_t>(r)), make_rational(1, 3));
  EXPECT_EQ(f.quarter_inv_quadratic(std::span<const std::int64_t>(zero)), 0);
  const std::vector<std::int64_t> one{1};
  EXPECT_EQ(HalfIntegralMatrix::parse("2").quarter_inv_quadratic(std::span<const std::int64_t>(one)), make_rational(1, 4));
}

TEST(HalfIntegralMatrix, RejectsBadInput) {
  EXPECT_THROW(HalfIntegralMatrix::parse("1 0; 0 2"), InvalidInput);   // odd diagonal
  EXPECT_THROW(HalfIntegralMatrix::parse("2 1; 0 2"), InvalidInput);   // not symmetric
  EXPECT_THROW(HalfIntegralMatrix::parse("2 3; 3 2"), InvalidInput);   // indefinite
  EXPECT_THROW(HalfIntegralMatrix::parse("2 x; 1 2"), InvalidInput);
  EXPECT_THROW(HalfIntegralMatrix::parse("2 1 1; 1 2"), InvalidInput);
}

TEST(HalfIntegralMatrix, ParseAcceptsCommas) {
  EXPECT_EQ(HalfIntegralMatrix::parse("2,1;1,2"), HalfIntegralMatrix::parse("2 1; 1 2"));
}

TEST(DiscriminantModule, Examples) {
  const auto a2 = discriminant_module(HalfIntegralMatrix::parse("2 1; 1 2"));
  EXPECT_EQ(a2.order(), 3u);
  EXPECT_TRUE(is_isomorphic(a2, FiniteQuadraticModule::cyclic(3, make_rational(1, 3))));
  const auto a1 = discriminant_module(HalfIntegralMatrix::parse("2"));
  EXPECT_TRUE(is_isomorphic(a1, FiniteQuadraticModule::cyclic(2, make_rational(1, 4))));
  EXPECT_TRUE(discriminant_module(HalfIntegralMatrix::e8()).is_trivial());
}

TEST(DiscriminantModule, OrderIsDeterminantOnRandomCorpus) {
  for (const auto& f : random_corpus(40, 17)) {
    const auto m = discriminant_module(f);
    EXPECT_EQ(Integer(static_cast<unsigned long>(m.order())), f.det_two_f());
  }
}

TEST(DiscriminantModule, LevelRelation) {
  // Module level is the lcm of Q-denominators, matrix level the smallest f making f (2F)^{-1} half-integral:
  // f | module level | 2f, with equality for odd determinant.
  for (const auto& f : random_corpus(40, 23)) {
    const auto m = discriminant_module(f);
    EXPECT_EQ(m.level() % f.level(), 0);
    EXPECT_EQ((2 * f.level()) % m.level(), 0);
    if (f.det_two_f() % 2 != 0) EXPECT_EQ(m.level(), f.level());
  }
}

TEST(DiscriminantModule, QuadraticFormIsWellDefined) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> c(-4, 4);
  for (const auto& f : random_corpus(20, 31)) {
    const std::size_t n = f.size();
    std::vector<Integer> r(n), m(n), shifted(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = c(rng), m[i] = c(rng);
    for (std::size_t i = 0; i < n; ++i) {
      shifted[i] = r[i];
      for (std::size_t j = 0; j < n; ++j) shifted[i] += f.two_f()(i, j) * m[j];
    }
    EXPECT_TRUE(is_integer(f.quarter_inv_quadratic(shifted) - f.quarter_inv_quadratic(r)));
    const DiscriminantForm d(f);
    EXPECT_EQ(d.element_of(std::span<const Integer>(r)), d.element_of(std::span<const Integer>(shifted)));
    EXPECT_EQ(d.module().q_value(d.element_of(std::span<const Integer>(r))), mod1(f.quarter_inv_quadratic(r)));
  }
}

TEST(DiscriminantModule, RepresentativesMapBack) {
  const DiscriminantForm d(HalfIntegralMatrix::parse("4 2 0; 2 6 1; 0 1 4"));
  for (std::size_t i = 0; i < d.module().order(); ++i) {
    const Element x = d.module().element(i);
    const auto r = d.representative(x);
    EXPECT_EQ(d.element_of(std::span<const Integer>(r)), x);
  }
}

TEST(Milgram, Examples) {
  EXPECT_TRUE(milgram_check(HalfIntegralMatrix::parse("2 1; 1 2")));
  EXPECT_TRUE(milgram_check(HalfIntegralMatrix::parse("2")));
  EXPECT_TRUE(milgram_check(HalfIntegralMatrix::e8()));
  const auto r = milgram_report(HalfIntegralMatrix::parse("2 1; 1 2"));
  EXPECT_TRUE(r.exact_identity);
  EXPECT_NEAR(r.real_part, 1.0, 1e-12);
}

TEST(Milgram, SeededCorpusIsReproducible) {
  const auto a = checks::milgram_corpus(25);
  const auto b = checks::milgram_corpus(25);
  ASSERT_EQ(a.size(), 25u);
  EXPECT_EQ(a, b);
  for (const auto& f : a) {
    EXPECT_LE(f.size(), 4u);
    EXPECT_LE(f.det_two_f(), 150);
  }
}
