#include <gtest/gtest.h>

#include <algorithm>

#include "weiljac/checks.hpp"
#include "weiljac/dims.hpp"
#include "weiljac/errors.hpp"

using namespace weiljac;

namespace {

// Dirichlet's class number formula for p = 3 mod 4, p > 3: h(-p) = -(1/p) sum_{a<p} a (a/p).
std::int64_t class_number_dirichlet(std::int64_t p) {
  std::int64_t s = 0;
  for (std::int64_t a = 1; a < p; ++a) s += a * kronecker(a, p);
  return -s / p;
}

}  // namespace

TEST(DimensionFormula, BinaryPrimeExamples) {
  const auto f3 = HalfIntegralMatrix::parse("2 1; 1 2");
  EXPECT_EQ(theorem1_dim(f3, 4).value, 1);
  EXPECT_EQ(theorem1_dim(f3, 5).value, 0);
  EXPECT_EQ(theorem1_dim(f3, 10).value, 2);
  EXPECT_EQ(theorem1_dim(HalfIntegralMatrix::binary_prime(7), 4).value, 1);
}

TEST(DimensionFormula, TermsForP3K4) {
  const auto r = theorem1_dim(HalfIntegralMatrix::parse("2 1; 1 2"), 4);
  EXPECT_EQ(r.dim_x, 2u);
  EXPECT_EQ(r.main_term, make_rational(1, 3));
  EXPECT_EQ(r.main_term + r.s_term + r.st_term + r.lambda_term, 1);
}

TEST(DimensionFormula, RejectsLowWeight) {
  EXPECT_THROW(theorem1_dim(HalfIntegralMatrix::parse("2 1; 1 2"), 2), InvalidInput);
}

TEST(DimensionFormula, MatchesTabulatedSeries) {
  for (std::int64_t p : checks::tabulated_primes()) {
    std::vector<Integer> poly;
    for (auto c : checks::tabulated_ptilde(p)) poly.emplace_back(static_cast<long>(c));
    const auto f = HalfIntegralMatrix::binary_prime(p);
    for (std::int64_t k = 3; k <= 24; ++k) EXPECT_EQ(theorem1_dim(f, k).value, series_coefficient(poly, k)) << p << " " << k;
  }
}

TEST(DimensionFormula, IntegralOnWiderCorpus) {
  // The formula asserts integrality itself; any failure throws.
  for (const char* text : {"2", "4", "6", "2 0; 0 2", "2 1; 1 4", "4 1; 1 4", "2 1 0; 1 2 0; 0 0 2", "2 -1 0 0; -1 2 -1 -1; 0 -1 2 0; 0 -1 0 2"}) {
    const auto f = HalfIntegralMatrix::parse(text);
    const auto n = static_cast<std::int64_t>(f.size());
    for (std::int64_t k = (n + 5) / 2; k <= 20; ++k) EXPECT_NO_THROW(theorem1_dim(f, k)) << text << " k=" << k;
  }
}

TEST(DimensionFormula, KnownScalarIndexDimensions) {
  // dim J_{k,1} = dim M_k + dim S_{k+2} for even k, and 0 for odd k.
  const auto modular = [](std::int64_t k) -> std::int64_t {
    if (k < 0 || k % 2 != 0 || k == 2) return 0;
    return k % 12 == 2 ? k / 12 : k / 12 + 1;
  };
  const auto cusp = [&](std::int64_t k) { return k >= 4 ? modular(k) - 1 : 0; };
  const auto f = HalfIntegralMatrix::parse("2");
  for (std::int64_t k = 3; k <= 24; ++k) {
    const std::int64_t want = k % 2 != 0 ? 0 : modular(k) + cusp(k + 2);
    EXPECT_EQ(theorem1_dim(f, k).value, want) << k;
  }
}

TEST(ClosedFormula, HandEvaluations) {
  const auto t = binary_prime_terms(7, 4);
  EXPECT_EQ(t.t1, make_rational(2, 3));
  EXPECT_EQ(t.t2, 0);
  EXPECT_EQ(t.t3, make_rational(1, 3));
  EXPECT_EQ(t.t4, make_rational(-1, 2));
  EXPECT_EQ(t.t5, make_rational(1, 2));
  EXPECT_EQ(binary_prime_dim(7, 4), 1);
  const auto u = binary_prime_terms(7, 5);
  EXPECT_EQ(u.t1, make_rational(3, 4));
  EXPECT_EQ(u.t2, make_rational(-1, 4));
  EXPECT_EQ(u.t3, 0);
  EXPECT_EQ(u.t5, 0);
  EXPECT_EQ(binary_prime_dim(7, 5), 0);
  EXPECT_EQ(binary_prime_dim(3, 10), 2);
}

TEST(ClosedFormula, AgreesWithGeneralFormula) {
  for (std::int64_t p : {3, 7, 11, 19, 23, 31, 43, 47, 59, 67, 71, 79, 83}) {
    const auto f = HalfIntegralMatrix::binary_prime(p);
    for (std::int64_t k = 3; k <= 24; ++k) EXPECT_EQ(theorem1_dim(f, k).value, binary_prime_dim(p, k)) << p << " " << k;
  }
}

TEST(ClassNumber, ReducedFormsAgainstDirichlet) {
  EXPECT_EQ(class_number(23), 3);
  EXPECT_EQ(class_number(7), 1);
  EXPECT_EQ(class_number(47), 5);
  for (std::int64_t p = 7; p < 400; p += 4)
    if (is_prime(p)) EXPECT_EQ(class_number(p), class_number_dirichlet(p)) << p;
  EXPECT_THROW(class_number(5), InvalidInput);
}

TEST(Kronecker, Symbols) {
  EXPECT_EQ(kronecker(-4, 1), 1);
  EXPECT_EQ(kronecker(-4, 3), -1);
  EXPECT_EQ(kronecker(-4, 2), 0);
  EXPECT_EQ(kronecker(2, 7), 1);
  EXPECT_EQ(kronecker(-2, 7), -1);
  EXPECT_EQ(kronecker(5, 3), -1);
  EXPECT_EQ(kronecker(0, 1), 1);
}

TEST(LambdaMultiset, NonzeroLambdasAreNonResidues) {
  // lambda = frac(-Q(x)) on D_F, so the nonzero values are non-residues / p.
  for (std::int64_t p : {3, 7, 11, 19, 23}) {
    std::vector<Rational> got, nonresidues;
    for (const auto& l : theorem1_dim(HalfIntegralMatrix::binary_prime(p), 4).lambdas)
      if (l != 0) got.push_back(l);
    for (std::int64_t a = 1; a < p; ++a)
      if (kronecker(a, p) == -1) nonresidues.push_back(make_rational(a, p));
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, nonresidues) << p;
  }
}

TEST(LowWeights, Singular) {
  for (std::int64_t p : checks::tabulated_primes()) EXPECT_EQ(singular_weight_dim(HalfIntegralMatrix::binary_prime(p)), 0u);
  EXPECT_EQ(singular_weight_dim(HalfIntegralMatrix::e8()), 1u);
  EXPECT_THROW(singular_weight_dim(HalfIntegralMatrix::parse("2")), HypothesisError);
}

TEST(LowWeights, Critical) {
  const auto f = HalfIntegralMatrix::parse("2");
  EXPECT_EQ(default_critical_m(f), 1);
  for (std::int64_t m : {1, 2, 4}) EXPECT_EQ(critical_weight_dim(f, m), 0u);
  EXPECT_THROW(critical_weight_dim(f, 0), InvalidInput);
  EXPECT_THROW(critical_weight_dim(HalfIntegralMatrix::parse("2 1; 1 2")), HypothesisError);
  // F = (2): dim J_{1,2} = 0 as well, for every admissible m.
  const auto g = HalfIntegralMatrix::parse("4");
  for (std::int64_t m : {1, 2, 4}) EXPECT_EQ(critical_weight_dim(g, m), critical_weight_dim(g, 1));
}

TEST(HilbertPoincare, P3) {
  const auto r = hilbert_poincare(HalfIntegralMatrix::parse("2 1; 1 2"));
  const std::vector<Integer> want = {0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0};
  EXPECT_EQ(std::vector<Integer>(r.ptilde.begin(), r.ptilde.begin() + 13), want);
  ASSERT_TRUE(r.inferred_unknown.has_value());
  EXPECT_EQ(*r.inferred_unknown, 0);
  EXPECT_EQ(r.unknown_weight, 2);
  EXPECT_TRUE(r.recurrence_ok);
  EXPECT_TRUE(r.degree_ok);
  EXPECT_TRUE(r.rank_identity);
}

TEST(HilbertPoincare, P23) {
  const auto r = hilbert_poincare(HalfIntegralMatrix::binary_prime(23));
  const std::vector<Integer> want = {0, 0, 0, 0, 1, 1, 3, 3, 4, 4, 3, 3, 1};
  EXPECT_EQ(std::vector<Integer>(r.ptilde.begin(), r.ptilde.begin() + 13), want);
  EXPECT_EQ(r.ptilde_at_one, 23);
}

TEST(HilbertPoincare, RecurrenceOnCorpus) {
  for (const char* text : {"2", "4", "2 0; 0 2", "2 1; 1 4", "2 1 0; 1 2 0; 0 0 2"}) {
    const auto f = HalfIntegralMatrix::parse(text);
    const auto r = hilbert_poincare(f, 30);
    EXPECT_TRUE(r.recurrence_ok) << text;
  }
  EXPECT_THROW(hilbert_poincare(HalfIntegralMatrix::parse("2 1; 1 2"), 10), InvalidInput);
}

TEST(SeriesCoefficient, Expansion) {
  const std::vector<Integer> one = {1};
  // 1/((1-x^4)(1-x^6)) = 1 + x^4 + x^6 + x^8 + x^10 + 2x^12 + ...
  EXPECT_EQ(series_coefficient(one, 0), 1);
  EXPECT_EQ(series_coefficient(one, 2), 0);
  EXPECT_EQ(series_coefficient(one, 10), 1);
  EXPECT_EQ(series_coefficient(one, 12), 2);
  EXPECT_EQ(series_coefficient(one, 24), 3);
}
