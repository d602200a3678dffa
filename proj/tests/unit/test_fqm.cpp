#include <gtest/gtest.h>

#include <cmath>

#include "weiljac/checks.hpp"
#include "weiljac/errors.hpp"
#include "weiljac/fqm.hpp"
#include "weiljac/gram.hpp"

using namespace weiljac;

namespace {

using M = FiniteQuadraticModule;

M z3() { return M::cyclic(3, make_rational(1, 3)); }
M z3b() { return M::cyclic(3, make_rational(2, 3)); }
M z2() { return M::cyclic(2, make_rational(1, 4)); }

std::complex<double> naive_gauss_sum(const M& m) {
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < m.order(); ++i) s += std::polar(1.0, -2 * M_PI * m.q_value(m.element(i)).get_d());
  return s;
}

}  // namespace

TEST(Module, HyperbolicBilinearForm) {
  const M h3 = M::hyperbolic(3);
  EXPECT_EQ(h3.order(), 9u);
  EXPECT_EQ(h3.b_value({1, 0}, {0, 1}), make_rational(1, 3));
  EXPECT_EQ(h3.b_value({1, 2}, {2, 1}), mod1(make_rational(1 * 1 + 2 * 2, 3)));
  EXPECT_EQ(h3.q_value({1, 1}), make_rational(1, 3));
  EXPECT_EQ(h3.q_value({2, 2}), make_rational(1, 3));
}

TEST(Module, RejectsDegenerateOrInconsistentGram) {
  EXPECT_THROW(M({2}, {{make_rational(0)}}), InvalidInput);            // radical
  EXPECT_THROW(M({2}, {{make_rational(1, 3)}}), InvalidInput);         // 4Q not integral
  EXPECT_THROW(M({2, 2}, {{make_rational(1, 4), make_rational(1, 2)}, {make_rational(0), make_rational(1, 4)}}),
               InvalidInput);                                           // not symmetric
  EXPECT_THROW(M({1}, {{make_rational(0)}}), InvalidInput);
}

TEST(Module, DirectSum) {
  const M s = direct_sum(z2(), z2());
  EXPECT_EQ(s.order(), 4u);
  EXPECT_EQ(s.q_value({1, 1}), make_rational(1, 2));
  EXPECT_TRUE(is_isomorphic(direct_sum(z3(), M()), z3()));
  EXPECT_TRUE(is_witt_zero(direct_sum(z3(), z3b())));
}

TEST(Module, DirectSumIndexOrdering) {
  const M a = z2(), b = z3();
  const M s = direct_sum(a, b);
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < b.order(); ++j) {
      Element x = a.element(i);
      const Element y = b.element(j);
      x.insert(x.end(), y.begin(), y.end());
      EXPECT_EQ(s.index_of(x), i * b.order() + j);
    }
}

TEST(Module, PrimaryDecomposition) {
  const auto parts = primary_decomposition(M::cyclic(6, make_rational(5, 12)));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].prime, 2);
  EXPECT_TRUE(is_isomorphic(parts[0].module, M::cyclic(2, make_rational(3, 4))));
  EXPECT_EQ(parts[1].prime, 3);
  EXPECT_TRUE(is_isomorphic(parts[1].module, z3b()));

  const auto single = primary_decomposition(z3());
  ASSERT_EQ(single.size(), 1u);
  EXPECT_TRUE(is_isomorphic(single[0].module, z3()));

  const auto mixed = primary_decomposition(direct_sum(M::hyperbolic(3), z2()));
  ASSERT_EQ(mixed.size(), 2u);
  EXPECT_EQ(mixed[0].module.order(), 2u);
  EXPECT_EQ(mixed[1].module.order(), 9u);
}

TEST(Module, PrimaryEmbeddingPreservesQ) {
  const M m = direct_sum(M::cyclic(6, make_rational(5, 12)), M::hyperbolic(2));
  for (const auto& part : primary_decomposition(m))
    for (std::size_t i = 0; i < part.module.order(); ++i) {
      const Element x = part.module.element(i);
      EXPECT_EQ(part.module.q_value(x), m.q_value(part.embed(x, m)));
    }
}

TEST(GaussSum, Examples) {
  const auto g3 = sigma_invariant(z3());
  EXPECT_EQ(g3.sum, CycNum(1L) + CycNum(2L) * CycNum::root_of_unity(-1, 3));
  EXPECT_NEAR(std::abs(g3.sigma() - std::complex<double>(0, -1)), 0.0, 1e-12);
  const auto g2 = sigma_invariant(z2());
  EXPECT_NEAR(std::abs(g2.sigma() - std::polar(1.0, -M_PI / 4)), 0.0, 1e-12);
  const auto h3 = sigma_invariant(M::hyperbolic(3));
  EXPECT_EQ(h3.sum, CycNum(3L));
  EXPECT_TRUE(h3.is_unimodular_eighth_root());
}

TEST(GaussSum, MatchesNaiveSumAndIsMultiplicative) {
  const auto corpus = checks::relations_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto g = sigma_invariant(corpus[i]);
    EXPECT_NEAR(std::abs(g.sum.eval_complex() - naive_gauss_sum(corpus[i])), 0.0, 1e-9);
    EXPECT_TRUE(g.is_unimodular_eighth_root());
    const auto& other = corpus[(i + 5) % corpus.size()];
    if (corpus[i].order() * other.order() > 2000) continue;
    EXPECT_EQ(sigma_invariant(direct_sum(corpus[i], other)).sum, g.sum * sigma_invariant(other).sum);
  }
}

TEST(GaussSum, ProductOverPrimaryParts) {
  for (const auto& m : checks::relations_corpus()) {
    CycNum prod(1L);
    for (const auto& p : primary_decomposition(m)) prod *= sigma_invariant(p.module).sum;
    EXPECT_EQ(prod, sigma_invariant(m).sum);
  }
}

TEST(GaussSum, FourthPowerForEvenRankDiscriminants) {
  for (const char* text : {"2 1; 1 2", "2 0; 0 2", "4 1; 1 2", "2 1; 1 4", "2 -1 0 0; -1 2 -1 -1; 0 -1 2 0; 0 -1 0 2"}) {
    const auto m = discriminant_module(HalfIntegralMatrix::parse(text));
    const CycNum g = sigma_invariant(m).sum;
    const auto order = static_cast<long>(m.order());
    EXPECT_EQ(g * g * g * g, CycNum(order * order)) << text;
  }
}

TEST(Subgroups, IsotropicSelfDual) {
  const auto h3 = subgroups(M::hyperbolic(3), SubgroupKind::isotropic_self_dual);
  ASSERT_EQ(h3.size(), 2u);
  for (const auto& u : h3) EXPECT_EQ(u.order(), 3u);
  EXPECT_TRUE(subgroups(z3(), SubgroupKind::isotropic_self_dual).empty());
  const auto all = subgroups(M(), SubgroupKind::all);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].elements, std::vector<std::size_t>{0});
}

TEST(Subgroups, CountsOfSmallGroups) {
  // (Z/2)^2 has 5 subgroups, Z/4 x Z/2 has 8, (Z/3)^2 has 6.
  EXPECT_EQ(subgroups(M::hyperbolic(2), SubgroupKind::all).size(), 5u);
  EXPECT_EQ(subgroups(direct_sum(M::cyclic(4, make_rational(1, 8)), z2()), SubgroupKind::all).size(), 8u);
  EXPECT_EQ(subgroups(M::hyperbolic(3), SubgroupKind::all).size(), 6u);
}

TEST(Subgroups, DualOrderIdentity) {
  for (const auto& m : checks::relations_corpus()) {
    for (const auto& n : subgroups(m, SubgroupKind::isotropic)) {
      const auto d = dual_subgroup(m, n);
      EXPECT_EQ(n.order() * d.order(), m.order());
      const auto q = quotient_module(m, n);  // constructor validates nondegeneracy
      EXPECT_EQ(q.order() * n.order() * n.order(), m.order());
    }
  }
}

TEST(Subgroups, QuotientExamples) {
  const M h3 = M::hyperbolic(3);
  const std::vector<Element> gen{{1, 0}};
  const Subgroup n = generated_subgroup(h3, gen);
  EXPECT_EQ(dual_subgroup(h3, n), n);
  EXPECT_TRUE(quotient_module(h3, n).is_trivial());

  const Subgroup zero = generated_subgroup(z3(), std::vector<Element>{});
  EXPECT_EQ(dual_subgroup(z3(), zero).order(), 3u);
  EXPECT_TRUE(is_isomorphic(quotient_module(z3(), zero), z3()));

  const M z9 = M::cyclic(9, make_rational(1, 9));
  const Subgroup n9 = generated_subgroup(z9, std::vector<Element>{{3}});
  EXPECT_TRUE(is_isotropic(z9, n9));
  EXPECT_EQ(dual_subgroup(z9, n9), n9);
  EXPECT_TRUE(quotient_module(z9, n9).is_trivial());
}

TEST(Witt, Examples) {
  EXPECT_TRUE(is_witt_zero(M::hyperbolic(3)));
  EXPECT_TRUE(anisotropic_kernel(M::hyperbolic(3)).is_trivial());
  EXPECT_FALSE(is_witt_zero(z3()));
  EXPECT_TRUE(is_isomorphic(anisotropic_kernel(z3()), z3()));
  EXPECT_TRUE(is_witt_zero(direct_sum(z3(), z3b())));
}

TEST(Witt, ZeroImpliesSquareOrderAndTrivialSigma) {
  for (const auto& m : checks::relations_corpus()) {
    if (!is_witt_zero(m)) continue;
    const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m.order()))));
    EXPECT_EQ(root * root, m.order());
    EXPECT_EQ(sigma_invariant(m).sum, CycNum(static_cast<long>(root)));
  }
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(is_isomorphic(z3(), M::cyclic(3, make_rational(4, 3))));
  EXPECT_FALSE(is_isomorphic(z3(), z3b()));
  EXPECT_TRUE(is_isomorphic(M::hyperbolic(3), direct_sum(z3(), z3b())));
  EXPECT_FALSE(is_isomorphic(M::hyperbolic(2), direct_sum(z2(), z2())));
}
